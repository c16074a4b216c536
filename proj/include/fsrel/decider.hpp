#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fsrel/isometry_search.hpp"
#include "fsrel/scalar.hpp"
#include "fsrel/space_form.hpp"

namespace fsrel {

enum class Status { relatives, not_relatives, unknown };
enum class Rule { flat_vs_curved, flat_line, opposite_signs, incommensurable, necessary, integer_ratio, sufficient,
                  plane, none };

std::string_view to_string(Status s);
// "R0", "R0'", "R1" ... "R6"; "none" for Unknown.
std::string_view rule_id(Rule r);

// A curvature value together with its commensurability unit.
struct Curvature {
  Rational value;
  std::string unit;
  Curvature(Rational v, std::string u = {}) : value(std::move(v)), unit(std::move(u)) {}
  Curvature(long v) : value(v) {}
};

struct CoprimePair {
  Integer s;
  Integer r;
};

// The coprime (s, r) with s*a = r*b. IncommensurableError on unit mismatch.
CoprimePair ratio_reduce(const Curvature &a, const Curvature &b);

// Necessary inequalities for F(n, b) and F(m, a) to be relatives:
// r + 1 <= binom(s+m, s) and s + 1 <= binom(r+n, r).
struct NecessaryCheck {
  Integer s, r;
  Integer lhs1, rhs1;
  bool pass1 = false;
  Integer lhs2, rhs2;
  bool pass2 = false;
  bool passes() const { return pass1 && pass2; }
};

NecessaryCheck check_necessary(const Integer &n, const Curvature &b, const Integer &m, const Curvature &a);

// Sufficient condition m + n + 1 > max{binom(s+m, s), binom(r+n, r)}.
// kappa = s*a = r*b and embedding_dim = max{...} - 1 size the common host.
struct SufficientCheck {
  Integer s, r;
  Integer lhs;
  Integer rhs;
  Integer binom_m;
  Integer binom_n;
  Rational kappa;
  Integer embedding_dim;
  bool pass = false;
};

SufficientCheck check_sufficient(const Integer &n, const Curvature &b, const Integer &m, const Curvature &a);

// Plane criterion on coprime integers 1 < p < q with p(p+3) < 4q + 2.
struct PlaneCheck {
  Integer p, q;
  bool gcd_ok = false;
  bool range_ok = false;
  Integer ineq_lhs, ineq_rhs;
  bool ineq_ok = false;
  bool applies = false;
};

PlaneCheck check_plane(const Integer &p, const Integer &q);

struct FlatVsCurvedCert {
  SpaceForm flat;
  SpaceForm curved;
};

// z -> z e_i in both flat spaces, on coordinates of the same metric sign.
struct FlatLineCert {
  int sign = 1;
  std::uint32_t coordinate1 = 0;
  std::uint32_t coordinate2 = 0;
  bool verified = false;
};

struct OppositeSignsCert {
  Rational curvature1;
  Rational curvature2;
};

struct IncommensurableCert {
  std::string unit1;
  std::string unit2;
};

struct NecessaryCert {
  NecessaryCheck check;
};

struct WitnessCert {
  std::uint32_t q = 1;           // integer curvature ratio
  int monomial_side = 1;         // which form (1 or 2) carries the monomial curve
  std::vector<Rational> weights; // squared magnitudes of the monomial components
  std::uint32_t diagonal_multiplicity = 0;
  SearchProblem problem;
  Candidate witness{SignedGermSystem(1, 1), SignedGermSystem(1, 1)};
  bool verified = false;
};

struct SufficientCert {
  SufficientCheck check;
};

struct PlaneCert {
  PlaneCheck check;
  // The criterion is stated for F(2, p) and F(2, q); applying it to every
  // pair with curvature ratio p : q uses scale normalization as an axiom.
  bool uses_scale_axiom = true;
};

struct UnknownCert {
  std::vector<std::string> passed;
  std::optional<NecessaryCheck> necessary;
  std::optional<SufficientCheck> sufficient;
  std::optional<PlaneCheck> plane;
  std::string reason;
};

using Certificate = std::variant<FlatVsCurvedCert, FlatLineCert, OppositeSignsCert, IncommensurableCert,
                                 NecessaryCert, WitnessCert, SufficientCert, PlaneCert, UnknownCert>;

struct Verdict {
  Status status = Status::unknown;
  Rule rule = Rule::none;
  Certificate certificate;
};

// Every rule that fires on the pair, in rule order. Used by decide_relatives
// and by consistency checks.
std::vector<Verdict> evaluate_rules(const SpaceForm &f1, const SpaceForm &f2);

// First firing rule in the order R0, R0', R1, R2, R3, R5, R4, R6, else
// Unknown. Refutations precede sufficiency; among the Relatives rules the
// inequality certificate is preferred to the explicit witness. Throws ValidationError on malformed forms and InternalAssertion
// if a Relatives rule and a NotRelatives rule both fire.
Verdict decide_relatives(const SpaceForm &f1, const SpaceForm &f2);

// The witness pair of the integer-ratio rule for F(n, b), F(m, a) with
// b = q*a (monomial curve in the first form) or a = q*b (in the second).
std::optional<WitnessCert> integer_ratio_witness(const SpaceForm &f1, const SpaceForm &f2);

} // namespace fsrel
