#include "fsrel/json_io.hpp"

#include <string>

#include "fsrel/error.hpp"

namespace fsrel {

namespace {

const Json &require(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint32_t get_count(const Json &j, const char *key) {
  const Json &v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ValidationError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::uint32_t>();
}

Json integer(const Integer &z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

} // namespace

Json rational_to_json(const Rational &q) { return to_string(q); }

Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long>());
  throw ValidationError("expected a rational \"p/q\", got " + j.dump());
}

void put_scalar(Json &obj, const Scalar &s) {
  if (s.is_exact()) {
    obj["re"] = rational_to_json(s.exact_value().re());
    obj["im"] = rational_to_json(s.exact_value().im());
  } else {
    const auto c = s.to_complex();
    obj["re"] = c.real();
    obj["im"] = c.imag();
  }
}

Scalar get_scalar(const Json &obj) {
  const Json &re = require(obj, "re");
  const Json im = obj.contains("im") ? obj.at("im") : Json("0/1");
  const bool exact = (re.is_string() || re.is_number_integer()) && (im.is_string() || im.is_number_integer());
  if (exact)
    return Scalar::exact(rational_from_json(re), rational_from_json(im));
  auto as_double = [](const Json &v) {
    if (v.is_number())
      return v.get<double>();
    return rational_from_json(v).get_d();
  };
  return Scalar::approx(as_double(re), as_double(im));
}

Json to_json(const MultiIndex &alpha) { return alpha.exponents(); }

MultiIndex multi_index_from_json(const Json &j) {
  if (!j.is_array())
    throw ValidationError("multi-index must be an array, got " + j.dump());
  std::vector<std::uint32_t> e;
  for (const auto &v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw ValidationError("multi-index entries must be non-negative integers, got " + j.dump());
    e.push_back(v.get<std::uint32_t>());
  }
  return MultiIndex(std::move(e));
}

Json to_json(const TruncatedGerm &g) {
  Json coeffs = Json::array();
  for (const auto &[alpha, c] : g.coefficients()) {
    Json e;
    e["index"] = to_json(alpha);
    put_scalar(e, c);
    coeffs.push_back(std::move(e));
  }
  return {{"num_vars", g.num_vars()}, {"max_degree", g.max_degree()}, {"coefficients", std::move(coeffs)}};
}

TruncatedGerm germ_from_json(const Json &j) {
  TruncatedGerm g(get_count(j, "num_vars"), get_count(j, "max_degree"));
  for (const auto &e : require(j, "coefficients"))
    g.add(multi_index_from_json(require(e, "index")), get_scalar(e));
  return g;
}

Json to_json(const HermitianSeries &h) {
  Json entries = Json::array();
  for (const auto &[key, c] : h.entries()) {
    Json e;
    e["alpha"] = to_json(key.alpha);
    e["beta"] = to_json(key.beta);
    put_scalar(e, c);
    entries.push_back(std::move(e));
  }
  return {{"num_vars", h.num_vars()}, {"max_degree", h.max_degree()}, {"entries", std::move(entries)}};
}

HermitianSeries hermitian_from_json(const Json &j) {
  const std::uint32_t n = get_count(j, "num_vars");
  const std::uint32_t d = get_count(j, "max_degree");
  EntryMap entries;
  for (const auto &e : require(j, "entries")) {
    IndexPair key{multi_index_from_json(require(e, "alpha")), multi_index_from_json(require(e, "beta"))};
    Scalar c = get_scalar(e);
    auto [it, inserted] = entries.try_emplace(key, c);
    if (!inserted)
      it->second += c;
  }
  return HermitianSeries::from_entries(n, d, entries);
}

Json to_json(const SignedGermSystem &s) {
  Json weights = Json::array();
  for (const auto &w : s.weights())
    weights.push_back(rational_to_json(w));
  Json germs = Json::array();
  for (const auto &g : s.germs())
    germs.push_back(to_json(g));
  return {{"num_vars", s.num_vars()},
          {"max_degree", s.max_degree()},
          {"weights", std::move(weights)},
          {"germs", std::move(germs)}};
}

SignedGermSystem system_from_json(const Json &j) {
  const Json &weights = require(j, "weights");
  const Json &germs = require(j, "germs");
  if (!weights.is_array() || !germs.is_array())
    throw ValidationError("weights and germs must be arrays");
  if (weights.size() != germs.size())
    throw DimensionMismatch("germ system has " + std::to_string(germs.size()) + " germs but " +
                            std::to_string(weights.size()) + " weights");
  if (germs.empty())
    return SignedGermSystem(get_count(j, "num_vars"), get_count(j, "max_degree"));
  std::vector<TruncatedGerm> gs;
  std::vector<Rational> ws;
  for (std::size_t i = 0; i < germs.size(); ++i) {
    gs.push_back(germ_from_json(germs[i]));
    ws.push_back(rational_from_json(weights[i]));
  }
  return SignedGermSystem(std::move(gs), std::move(ws));
}

std::vector<TruncatedGerm> germ_list_from_json(const Json &j) {
  const Json &list = j.is_array() ? j : require(j, "germs");
  if (!list.is_array())
    throw ValidationError("germ list must be an array");
  std::vector<TruncatedGerm> out;
  for (const auto &g : list)
    out.push_back(germ_from_json(g));
  return out;
}

Json to_json(const DiagonalExpansion &e) {
  Json terms = Json::array();
  for (const auto &[alpha, c] : e.terms)
    terms.push_back({{"alpha", to_json(alpha)}, {"c", rational_to_json(c)}});
  return {{"n", e.num_vars}, {"b", rational_to_json(e.curvature)}, {"r", e.power}, {"terms", std::move(terms)}};
}

Json to_json(const Inertia &in) {
  return {{"positive", in.positive}, {"negative", in.negative}, {"rank", in.rank()}};
}

Json to_json(const SpaceForm &f) {
  Json j{{"text", render(f)},
         {"kind", std::string(to_string(f.kind))},
         {"dim", f.dim},
         {"sig_index", f.sig_index}};
  if (f.is_flat())
    j["curvature"] = nullptr;
  else
    j["curvature"] = rational_to_json(f.curvature());
  j["unit"] = f.curvature_unit;
  return j;
}

Json to_json(const Candidate &c) { return {{"h", to_json(c.h)}, {"k", to_json(c.k)}}; }

Candidate candidate_from_json(const Json &j) {
  return {system_from_json(require(j, "h")), system_from_json(require(j, "k"))};
}

Json to_json(const SearchProblem &p) {
  return {{"host1", render(p.host1)}, {"host2", render(p.host2)}, {"s", p.s},
          {"r", p.r},                 {"degree", p.degree},         {"cap", p.cap}};
}

Json to_json(const WitnessCheck &w) {
  Json j{{"ok", w.ok}};
  if (w.first_mismatch) {
    Json lhs, rhs;
    put_scalar(lhs, w.first_mismatch->lhs);
    put_scalar(rhs, w.first_mismatch->rhs);
    j["first_mismatch"] = {{"alpha", to_json(w.first_mismatch->index.alpha)},
                           {"beta", to_json(w.first_mismatch->index.beta)},
                           {"lhs", lhs},
                           {"rhs", rhs}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

namespace {

Json to_json(const NecessaryCheck &c) {
  return {{"s", integer(c.s)},
          {"r", integer(c.r)},
          {"ineq1", {{"statement", "r+1 <= binom(s+m,s)"}, {"lhs", integer(c.lhs1)}, {"rhs", integer(c.rhs1)},
                     {"holds", c.pass1}}},
          {"ineq2", {{"statement", "s+1 <= binom(r+n,r)"}, {"lhs", integer(c.lhs2)}, {"rhs", integer(c.rhs2)},
                     {"holds", c.pass2}}}};
}

Json to_json(const SufficientCheck &c) {
  return {{"s", integer(c.s)},
          {"r", integer(c.r)},
          {"statement", "m+n+1 > max(binom(s+m,s), binom(r+n,r))"},
          {"lhs", integer(c.lhs)},
          {"binom_s_m", integer(c.binom_m)},
          {"binom_r_n", integer(c.binom_n)},
          {"rhs", integer(c.rhs)},
          {"holds", c.pass},
          {"kappa", rational_to_json(c.kappa)},
          {"common_host_dim", integer(c.embedding_dim)}};
}

Json to_json(const PlaneCheck &c) {
  return {{"p", integer(c.p)},
          {"q", integer(c.q)},
          {"gcd_ok", c.gcd_ok},
          {"range_ok", c.range_ok},
          {"ineq", {{"statement", "p(p+3) < 4q+2"}, {"lhs", integer(c.ineq_lhs)}, {"rhs", integer(c.ineq_rhs)},
                    {"holds", c.ineq_ok}}},
          {"applies", c.applies}};
}

struct CertificateWriter {
  Json operator()(const FlatVsCurvedCert &c) const {
    return {{"claim", "a flat space form and a non-flat space form share no Kaehler submanifold"},
            {"flat", to_json(c.flat)},
            {"curved", to_json(c.curved)}};
  }
  Json operator()(const FlatLineCert &c) const {
    return {{"claim", "common coordinate line z -> z e_i on directions of the same metric sign"},
            {"elementary", true},
            {"sign", c.sign},
            {"coordinate1", c.coordinate1},
            {"coordinate2", c.coordinate2},
            {"verified", c.verified}};
  }
  Json operator()(const OppositeSignsCert &c) const {
    return {{"claim", "relatives require curvatures of the same sign"},
            {"curvature1", rational_to_json(c.curvature1)},
            {"curvature2", rational_to_json(c.curvature2)}};
  }
  Json operator()(const IncommensurableCert &c) const {
    return {{"claim", "relatives require a rational curvature ratio"},
            {"unit1", c.unit1},
            {"unit2", c.unit2}};
  }
  Json operator()(const NecessaryCert &c) const {
    return {{"claim", "necessary inequalities violated"}, {"check", to_json(c.check)}};
  }
  Json operator()(const WitnessCert &c) const {
    Json weights = Json::array();
    for (const auto &w : c.weights)
      weights.push_back(rational_to_json(w));
    return {{"claim", "explicit monomial curve against the diagonal curve, exactly verified"},
            {"q", c.q},
            {"monomial_side", c.monomial_side},
            {"weights", std::move(weights)},
            {"diagonal_multiplicity", c.diagonal_multiplicity},
            {"problem", to_json(c.problem)},
            {"witness", to_json(c.witness)},
            {"verified", c.verified}};
  }
  Json operator()(const SufficientCert &c) const {
    return {{"claim", "both forms embed in a common F(N, kappa) where they meet in positive dimension"},
            {"check", to_json(c.check)}};
  }
  Json operator()(const PlaneCert &c) const {
    return {{"claim", "plane criterion on the rescaled coprime pair (p, q)"},
            {"check", to_json(c.check)},
            {"uses_scale_axiom", c.uses_scale_axiom}};
  }
  Json operator()(const UnknownCert &c) const {
    Json j{{"reason", c.reason}, {"passed", c.passed}};
    if (c.necessary)
      j["necessary"] = to_json(*c.necessary);
    if (c.sufficient)
      j["sufficient"] = to_json(*c.sufficient);
    if (c.plane)
      j["plane"] = to_json(*c.plane);
    return j;
  }
};

} // namespace

Json to_json(const Verdict &v) {
  return {{"status", std::string(to_string(v.status))},
          {"rule", std::string(rule_id(v.rule))},
          {"certificate", std::visit(CertificateWriter{}, v.certificate)}};
}

Json search_report(const SearchProblem &p, const SearchResult &r) {
  return {{"problem", to_json(p)},
          {"best_residual", r.best_residual},
          {"converged", r.converged},
          {"per_restart", r.per_restart},
          {"witness", r.converged ? to_json(r.best) : Json(nullptr)},
          {"evidence_only", r.evidence_only},
          {"label", "numeric evidence"}};
}

} // namespace fsrel
