#include "fsrel/decider.hpp"

#include <algorithm>

#include "fsrel/calabi_expansion.hpp"
#include "fsrel/error.hpp"

namespace fsrel {

std::string_view to_string(Status s) {
  switch (s) {
  case Status::relatives:
    return "Relatives";
  case Status::not_relatives:
    return "NotRelatives";
  case Status::unknown:
    return "Unknown";
  }
  return "?";
}

std::string_view rule_id(Rule r) {
  switch (r) {
  case Rule::flat_vs_curved:
    return "R0";
  case Rule::flat_line:
    return "R0'";
  case Rule::opposite_signs:
    return "R1";
  case Rule::incommensurable:
    return "R2";
  case Rule::necessary:
    return "R3";
  case Rule::integer_ratio:
    return "R4";
  case Rule::sufficient:
    return "R5";
  case Rule::plane:
    return "R6";
  case Rule::none:
    return "none";
  }
  return "?";
}

CoprimePair ratio_reduce(const Curvature &a, const Curvature &b) {
  if (a.unit != b.unit)
    throw IncommensurableError("curvatures in units '" + a.unit + "' and '" + b.unit + "' are incommensurable");
  if (sgn(a.value) <= 0 || sgn(b.value) <= 0)
    throw DomainError("ratio_reduce needs positive curvatures");
  Rational ratio = b.value / a.value;
  ratio.canonicalize();
  return {ratio.get_num(), ratio.get_den()};
}

NecessaryCheck check_necessary(const Integer &n, const Curvature &b, const Integer &m, const Curvature &a) {
  const CoprimePair sr = ratio_reduce(a, b);
  NecessaryCheck c;
  c.s = sr.s;
  c.r = sr.r;
  c.lhs1 = sr.r + 1;
  c.rhs1 = binomial(Integer(sr.s + m), sr.s);
  c.pass1 = c.lhs1 <= c.rhs1;
  c.lhs2 = sr.s + 1;
  c.rhs2 = binomial(Integer(sr.r + n), sr.r);
  c.pass2 = c.lhs2 <= c.rhs2;
  return c;
}

SufficientCheck check_sufficient(const Integer &n, const Curvature &b, const Integer &m, const Curvature &a) {
  const CoprimePair sr = ratio_reduce(a, b);
  SufficientCheck c;
  c.s = sr.s;
  c.r = sr.r;
  c.lhs = m + n + 1;
  c.binom_m = binomial(Integer(sr.s + m), sr.s);
  c.binom_n = binomial(Integer(sr.r + n), sr.r);
  c.rhs = std::max(c.binom_m, c.binom_n);
  c.kappa = Rational(sr.s) * a.value;
  c.kappa.canonicalize();
  c.embedding_dim = c.rhs - 1;
  c.pass = c.lhs > c.rhs;
  return c;
}

PlaneCheck check_plane(const Integer &p, const Integer &q) {
  if (p < 1 || q < 1)
    throw DomainError("check_plane needs positive integers");
  PlaneCheck c;
  c.p = p;
  c.q = q;
  c.gcd_ok = gcd(p, q) == 1;
  c.range_ok = 1 < p && p < q;
  c.ineq_lhs = p * (p + 3);
  c.ineq_rhs = 4 * q + 2;
  c.ineq_ok = c.ineq_lhs < c.ineq_rhs;
  c.applies = c.gcd_ok && c.range_ok && c.ineq_ok;
  return c;
}

namespace {

bool both_positive_definite_commensurable(const SpaceForm &f1, const SpaceForm &f2) {
  return f1.kind == FormKind::projective && f2.kind == FormKind::projective && f1.is_definite() &&
         f2.is_definite() && f1.curvature_unit == f2.curvature_unit;
}

Candidate make_witness_candidate(std::uint32_t degree, const std::vector<Rational> &weights, bool monomial_on_h) {
  SignedGermSystem monomial(1, degree);
  for (std::uint32_t j = 1; j <= weights.size(); ++j)
    monomial.push_back(TruncatedGerm::monomial(1, degree, MultiIndex{j}), weights[j - 1]);
  return monomial_on_h ? Candidate{std::move(monomial), SignedGermSystem(1, degree)}
                       : Candidate{SignedGermSystem(1, degree), std::move(monomial)};
}

void pad_curves(SignedGermSystem &sys, std::uint32_t count, bool identity) {
  while (sys.size() < count) {
    TruncatedGerm g(1, sys.max_degree());
    if (identity)
      g.set(MultiIndex{1}, 1);
    sys.push_back(std::move(g), 1);
  }
}

} // namespace

std::optional<WitnessCert> integer_ratio_witness(const SpaceForm &f1, const SpaceForm &f2) {
  if (!both_positive_definite_commensurable(f1, f2))
    return std::nullopt;
  const Rational &b = f1.curvature_mag;
  const Rational &a = f2.curvature_mag;
  const Rational ba = b / a;
  const Rational ab = a / b;
  WitnessCert cert;
  bool monomial_on_h = false;
  std::uint32_t mono_total = 0, diag_total = 0;
  if (ba.get_den() == 1 && ba.get_num() <= f1.dim) {
    // k carries the monomial curve in F(n, b), b = q*a; h is diagonal in F(m, a).
    cert.q = static_cast<std::uint32_t>(ba.get_num().get_ui());
    cert.monomial_side = 1;
    const RemarkWitness rw = remark_witness(cert.q, a, f2.dim);
    cert.weights = rw.host_weights;
    cert.diagonal_multiplicity = rw.diagonal_multiplicity;
    mono_total = f1.dim;
    diag_total = f2.dim;
  } else if (ab.get_den() == 1 && ab.get_num() <= f2.dim) {
    cert.q = static_cast<std::uint32_t>(ab.get_num().get_ui());
    cert.monomial_side = 2;
    const RemarkWitness rw = remark_witness(cert.q, b, f1.dim);
    cert.weights = rw.host_weights;
    cert.diagonal_multiplicity = rw.diagonal_multiplicity;
    monomial_on_h = true;
    mono_total = f2.dim;
    diag_total = f1.dim;
  } else {
    return std::nullopt;
  }
  cert.problem = make_search_problem(f1, f2, cert.q);
  cert.witness = make_witness_candidate(cert.q, cert.weights, monomial_on_h);
  SignedGermSystem &mono = monomial_on_h ? cert.witness.h : cert.witness.k;
  SignedGermSystem &diag = monomial_on_h ? cert.witness.k : cert.witness.h;
  pad_curves(mono, mono_total, false);
  pad_curves(diag, diag_total, true);
  cert.verified = verify_witness_exact(cert.witness, cert.problem).ok;
  if (!cert.verified)
    throw InternalAssertion("integer-ratio witness failed exact verification for " + render(f1) + ", " +
                            render(f2));
  return cert;
}

namespace {

struct Evaluation {
  std::vector<Verdict> firings;
  Verdict fallback; // used when nothing fires
};

Verdict unknown(std::string reason, std::vector<std::string> passed = {}) {
  UnknownCert c;
  c.reason = std::move(reason);
  c.passed = std::move(passed);
  return {Status::unknown, Rule::none, std::move(c)};
}

FlatLineCert flat_line(const SpaceForm &f1, const SpaceForm &f2, int sign) {
  FlatLineCert c;
  c.sign = sign;
  // Positive directions come first, negative ones are the trailing sig_index
  // coordinates.
  c.coordinate1 = sign > 0 ? 0 : f1.dim - 1;
  c.coordinate2 = sign > 0 ? 0 : f2.dim - 1;
  auto pullback = [&](const SpaceForm &f, std::uint32_t coord) {
    const bool negative = coord >= f.dim - f.sig_index;
    SignedGermSystem sys(1, 1);
    sys.push_back(TruncatedGerm::monomial(1, 1, MultiIndex{1}), negative ? -1 : 1);
    return norm_square_system(sys);
  };
  c.verified = pullback(f1, c.coordinate1) == pullback(f2, c.coordinate2);
  return c;
}

Evaluation evaluate(const SpaceForm &f1, const SpaceForm &f2) {
  f1.validate();
  f2.validate();
  Evaluation ev;

  if (f1.is_flat() != f2.is_flat()) {
    const SpaceForm &flat = f1.is_flat() ? f1 : f2;
    const SpaceForm &curved = f1.is_flat() ? f2 : f1;
    ev.firings.push_back({Status::not_relatives, Rule::flat_vs_curved, FlatVsCurvedCert{flat, curved}});
    return ev;
  }
  if (f1.is_flat()) {
    const bool pos = f1.dim > f1.sig_index && f2.dim > f2.sig_index;
    const bool neg = f1.sig_index > 0 && f2.sig_index > 0;
    if (pos || neg) {
      FlatLineCert c = flat_line(f1, f2, pos ? 1 : -1);
      if (!c.verified)
        throw InternalAssertion("flat line witness failed verification");
      ev.firings.push_back({Status::relatives, Rule::flat_line, c});
    } else {
      ev.fallback = unknown("flat forms of opposite definite signature are not covered by the rules");
    }
    return ev;
  }
  if (!f1.is_definite() || !f2.is_definite()) {
    ev.fallback = unknown("non-flat indefinite forms are only decided against flat forms");
    return ev;
  }
  if (f1.curvature_sign() != f2.curvature_sign()) {
    ev.firings.push_back(
        {Status::not_relatives, Rule::opposite_signs, OppositeSignsCert{f1.curvature(), f2.curvature()}});
    return ev;
  }
  if (f1.curvature_unit != f2.curvature_unit) {
    ev.firings.push_back({Status::not_relatives, Rule::incommensurable,
                          IncommensurableCert{f1.curvature_unit, f2.curvature_unit}});
    return ev;
  }
  std::vector<std::string> passed{"R1: curvatures have the same sign", "R2: curvatures are commensurable"};
  if (f1.curvature_sign() < 0) {
    ev.fallback = unknown("negatively curved pairs are only decided by sign and commensurability", passed);
    return ev;
  }

  const Integer n = f1.dim, m = f2.dim;
  const Curvature b(f1.curvature_mag, f1.curvature_unit);
  const Curvature a(f2.curvature_mag, f2.curvature_unit);
  const NecessaryCheck nec = check_necessary(n, b, m, a);
  const SufficientCheck suf = check_sufficient(n, b, m, a);

  if (!nec.passes())
    ev.firings.push_back({Status::not_relatives, Rule::necessary, NecessaryCert{nec}});
  if (suf.pass)
    ev.firings.push_back({Status::relatives, Rule::sufficient, SufficientCert{suf}});
  if (auto w = integer_ratio_witness(f1, f2))
    ev.firings.push_back({Status::relatives, Rule::integer_ratio, std::move(*w)});
  std::optional<PlaneCheck> plane;
  if (f1.dim == 2 && f2.dim == 2) {
    plane = check_plane(std::min(nec.r, nec.s), std::max(nec.r, nec.s));
    if (plane->applies)
      ev.firings.push_back({Status::not_relatives, Rule::plane, PlaneCert{*plane, true}});
  }

  passed.emplace_back("R3: both necessary inequalities hold");
  UnknownCert u;
  u.reason = "no rule decides this pair";
  u.passed = std::move(passed);
  u.necessary = nec;
  u.sufficient = suf;
  u.plane = plane;
  ev.fallback = {Status::unknown, Rule::none, std::move(u)};
  return ev;
}

} // namespace

std::vector<Verdict> evaluate_rules(const SpaceForm &f1, const SpaceForm &f2) { return evaluate(f1, f2).firings; }

Verdict decide_relatives(const SpaceForm &f1, const SpaceForm &f2) {
  Evaluation ev = evaluate(f1, f2);
  if (ev.firings.empty())
    return std::move(ev.fallback);
  const Status first = ev.firings.front().status;
  for (const auto &v : ev.firings)
    if (v.status != first)
      throw InternalAssertion("rules " + std::string(rule_id(ev.firings.front().rule)) + " and " +
                              std::string(rule_id(v.rule)) + " disagree on " + render(f1) + ", " + render(f2));
  return std::move(ev.firings.front());
}

} // namespace fsrel
