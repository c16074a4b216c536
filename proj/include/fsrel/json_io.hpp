#pragma once

#include <json.hpp>

#include "fsrel/calabi_expansion.hpp"
#include "fsrel/decider.hpp"
#include "fsrel/germ.hpp"
#include "fsrel/hermitian_series.hpp"
#include "fsrel/isometry_search.hpp"
#include "fsrel/signature_reduction.hpp"
#include "fsrel/space_form.hpp"

namespace fsrel {

// Insertion-ordered so that output is byte-stable and reads naturally.
using Json = nlohmann::ordered_json;

// Exact rationals serialize as "p/q"; parsing also accepts "p" and integers.
Json rational_to_json(const Rational &q);
Rational rational_from_json(const Json &j);

// Writes "re"/"im" into `obj`: strings for exact scalars, numbers otherwise.
void put_scalar(Json &obj, const Scalar &s);
Scalar get_scalar(const Json &obj);

Json to_json(const MultiIndex &alpha);
MultiIndex multi_index_from_json(const Json &j);

// {"num_vars": n, "max_degree": d, "coefficients": [{"index": [..], "re": .., "im": ..}]}
Json to_json(const TruncatedGerm &g);
TruncatedGerm germ_from_json(const Json &j);

// {"num_vars": n, "max_degree": d, "entries": [{"alpha": [..], "beta": [..], "re": .., "im": ..}]}
Json to_json(const HermitianSeries &h);
HermitianSeries hermitian_from_json(const Json &j);

// {"weights": ["p/q", ...], "germs": [TruncatedGerm, ...]} plus num_vars and
// max_degree so that empty systems round-trip.
Json to_json(const SignedGermSystem &s);
SignedGermSystem system_from_json(const Json &j);

// A germ list file: either a JSON array of germs or {"germs": [...]}.
std::vector<TruncatedGerm> germ_list_from_json(const Json &j);

Json to_json(const DiagonalExpansion &e);
Json to_json(const Inertia &in);
Json to_json(const SpaceForm &f);

// {"h": SignedGermSystem, "k": SignedGermSystem}; weights are squared magnitudes.
Json to_json(const Candidate &c);
Candidate candidate_from_json(const Json &j);

Json to_json(const SearchProblem &p);
Json to_json(const WitnessCheck &w);
Json to_json(const Verdict &v);
Json search_report(const SearchProblem &p, const SearchResult &r);

} // namespace fsrel
