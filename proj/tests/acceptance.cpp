#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#include "decider_corpus.hpp"
#include "fsrel/calabi_expansion.hpp"
#include "fsrel/decider.hpp"
#include "fsrel/isometry_search.hpp"
#include "fsrel/signature_reduction.hpp"
#include "test_support.hpp"

using namespace fsrel;
using namespace fsrel::testing;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string &id, bool ok, const std::string &detail) {
  std::printf("%s criterion %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok)
    ++failures;
}

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

SpaceForm F(std::uint32_t n, const Rational &b) { return SpaceForm::fubini_study(n, b); }

std::vector<Rational> coefficients(const DiagonalExpansion &e) {
  std::vector<Rational> out;
  for (const auto &[alpha, c] : e.terms)
    out.push_back(c);
  return out;
}

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

bool hermitian_ok(const HermitianSeries &h) {
  for (const auto &[key, c] : h.entries()) {
    auto it = h.entries().find(key.swapped());
    if (it == h.entries().end() || !(it->second == c.conj()))
      return false;
  }
  return true;
}

void criterion1() {
  auto t0 = Clock::now();
  auto square = coefficients(expand_fubini_power(2, 1, 2));
  auto cube = coefficients(expand_fubini_power(2, 1, 3));
  double ms = ms_since(t0);
  bool ok = square == ints({2, 2, 1, 2, 1}) && cube == ints({3, 3, 3, 6, 3, 1, 3, 3, 1}) && ms < 10.0;
  report("1", ok, "expansion coefficients (2,2,1,2,1) and (3,3,3,6,3,1,3,3,1) in " + fmt("%.3f ms", ms));
}

void criterion2() {
  bool ok = embedding_dimension(2, 2) == 5 && embedding_dimension(2, 3) == 9;
  report("2", ok, "embedding dimensions " + embedding_dimension(2, 2).get_str() + " and " +
                      embedding_dimension(2, 3).get_str());
}

void criterion3() {
  Verdict v = decide_relatives(F(3, 1), F(8, 2));
  bool ok = v.status == Status::relatives && v.rule == Rule::sufficient;
  std::string detail = std::string(to_string(v.status)) + " by " + std::string(rule_id(v.rule));
  if (ok) {
    const auto &c = std::get<SufficientCert>(v.certificate).check;
    ok = c.lhs == 12 && c.rhs == 10 && c.pass;
    detail += " with " + c.lhs.get_str() + " > " + c.rhs.get_str();
  }
  report("3", ok, "F(3,1) vs F(8,2): " + detail);
}

void criterion4() {
  Verdict v = decide_relatives(F(2, 1), F(2, Rational(3, 2)));
  bool ok = v.status == Status::not_relatives && v.rule == Rule::plane;
  std::string detail = std::string(to_string(v.status)) + " by " + std::string(rule_id(v.rule));
  if (ok) {
    const auto &c = std::get<PlaneCert>(v.certificate).check;
    ok = c.p == 2 && c.q == 3 && c.ineq_lhs == 10 && c.ineq_rhs == 14 && c.applies;
    detail += " with (p,q)=(" + c.p.get_str() + "," + c.q.get_str() + ") and " + c.ineq_lhs.get_str() + " < " +
              c.ineq_rhs.get_str();
  }
  NecessaryCheck n = check_necessary(2, Curvature(Rational(3, 2)), 2, 1);
  ok = ok && n.pass1 && n.pass2;
  detail += "; necessary " + n.lhs1.get_str() + "<=" + n.rhs1.get_str() + " and " + n.lhs2.get_str() + "<=" +
            n.rhs2.get_str();
  report("4", ok, "F(2,1) vs F(2,3/2): " + detail);
}

void criterion5() {
  Verdict v = decide_relatives(F(2, 2), F(2, 1));
  bool ok = v.status == Status::relatives && v.rule == Rule::integer_ratio;
  std::string detail = std::string(to_string(v.status)) + " by " + std::string(rule_id(v.rule));
  if (ok) {
    const auto &w = std::get<WitnessCert>(v.certificate);
    bool verified = verify_witness_exact(w.witness, w.problem).ok;
    ok = verified && w.weights == ints({2, 2});
    detail += verified ? ", witness verified exactly" : ", witness NOT verified";
  }
  SufficientCheck s = check_sufficient(2, 2, 2, 1);
  ok = ok && !s.pass && s.lhs == 5 && s.rhs == 6;
  detail += "; sufficiency fails " + s.lhs.get_str() + " < " + s.rhs.get_str();
  report("5", ok, "F(2,2) vs F(2,1): " + detail);
}

void criterion6() {
  int pairs = 0, good = 0;
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (std::uint32_t s = 0; s <= n; ++s)
      for (std::uint32_t n2 = 1; n2 <= 4; ++n2)
        for (std::uint32_t s2 = 0; s2 <= n2; ++s2)
          for (const Rational &b : {Rational(1), Rational(5, 2)}) {
            SpaceForm flat = SpaceForm::flat(n, s), proj = SpaceForm::projective(n2, s2, b);
            for (const Verdict &v : {decide_relatives(flat, proj), decide_relatives(proj, flat)}) {
              ++pairs;
              good += v.status == Status::not_relatives && v.rule == Rule::flat_vs_curved;
            }
          }
  report("6", good == pairs, "flat vs projective grid: " + std::to_string(good) + "/" + std::to_string(pairs) + " by R0");
}

SignedGermSystem congruent(Rng &rng, const SignedGermSystem &sys) {
  const auto basis = enumerate_indices(sys.num_vars(), 1, sys.max_degree());
  const std::size_t n = basis.size();
  std::vector<std::vector<GaussianRational>> t;
  do {
    t.assign(n, std::vector<GaussianRational>(n));
    for (auto &row : t)
      for (auto &x : row)
        x = GaussianRational(Rational(uniform_int(rng, -2, 2)), Rational(uniform_int(rng, -1, 1)));
  } while (exact_rank(t) != n);
  SignedGermSystem out(sys.num_vars(), sys.max_degree());
  for (std::size_t g = 0; g < sys.size(); ++g) {
    TruncatedGerm mapped(sys.num_vars(), sys.max_degree());
    for (std::size_t i = 0; i < n; ++i) {
      GaussianRational acc;
      for (std::size_t j = 0; j < n; ++j)
        acc += t[i][j] * sys.germs()[g].coeff(basis[j]).exact_value();
      mapped.set(basis[i], Scalar(acc));
    }
    out.push_back(mapped, sys.weights()[g]);
  }
  return out;
}

void criterion7a() {
  Rng rng(7001);
  const int cases = 500;
  int good = 0;
  for (int t = 0; t < cases; ++t) {
    std::size_t nv = uniform_int(rng, 1, 2);
    std::uint32_t d = uniform_int(rng, 1, nv == 1 ? 5 : 3);
    SignedGermSystem sys = random_system(rng, nv, d, uniform_int(rng, 1, 6));
    HermitianSeries h = norm_square_system(sys);
    SignedGermSystem red = signature_reduce(h);
    Inertia in = inertia(h);
    bool ok = norm_square_system(red) == h && red.positive_count() == in.positive &&
              red.negative_count() == in.negative && red.size() <= sys.size();
    ok = ok && inertia(norm_square_system(congruent(rng, sys))) == in;
    good += ok;
  }
  report("7a", good == cases,
         "signature reduction reconstruction and Sylvester invariance " + std::to_string(good) + "/" +
             std::to_string(cases));
}

void criterion7b() {
  Rng rng(7002);
  const int cases = 500;
  int good = 0;
  for (int t = 0; t < cases; ++t) {
    std::size_t nv = uniform_int(rng, 1, 2);
    std::uint32_t d = uniform_int(rng, 1, 3);
    HermitianSeries h = random_hermitian(rng, nv, d, 1);
    HermitianSeries g = random_hermitian(rng, nv, d, 0);
    HermitianSeries l = log_truncate(h, d), e = exp_truncate(g, d);
    bool ok = exp_truncate(l, d) == h && log_truncate(e, d) == g;
    ok = ok && hermitian_ok(h) && hermitian_ok(l) && hermitian_ok(e) && hermitian_ok(hermitian_mul(h, e)) &&
         hermitian_ok(hermitian_pow(h, 3));
    good += ok;
  }
  report("7b", good == cases,
         "log/exp round trips and Hermitian symmetry " + std::to_string(good) + "/" + std::to_string(cases));
}

// k echelon germs (independent by construction) plus random combinations of
// them, shuffled.
void criterion7c() {
  Rng rng(7003);
  const int cases = 200;
  int good = 0, dependent = 0;
  for (int t = 0; t < cases; ++t) {
    std::size_t nv = uniform_int(rng, 1, 2);
    std::uint32_t d = uniform_int(rng, 2, 3);
    auto basis = enumerate_indices(nv, 1, d);
    std::size_t k = uniform_int(rng, 1, std::min<std::size_t>(4, basis.size()));
    std::vector<std::size_t> lead(basis.size());
    for (std::size_t i = 0; i < lead.size(); ++i)
      lead[i] = i;
    std::shuffle(lead.begin(), lead.end(), rng);
    lead.resize(k);
    std::sort(lead.begin(), lead.end());
    std::vector<TruncatedGerm> germs;
    for (std::size_t i = 0; i < k; ++i) {
      TruncatedGerm g(nv, d);
      g.set(basis[lead[i]], Scalar(random_nonzero_rational(rng)));
      for (std::size_t j = lead[i] + 1; j < basis.size(); ++j)
        if (uniform_int(rng, 0, 1))
          g.set(basis[j], random_scalar(rng));
      germs.push_back(g);
    }
    std::size_t extra = uniform_int(rng, 0, 2);
    dependent += extra > 0;
    for (std::size_t e = 0; e < extra; ++e) {
      TruncatedGerm combo(nv, d);
      for (std::size_t i = 0; i < k; ++i)
        combo += random_scalar(rng, 3, 2) * germs[i];
      germs.push_back(combo);
    }
    std::shuffle(germs.begin(), germs.end(), rng);
    TaylorRank r = taylor_matrix_rank(germs, d);
    good += r.rank == k && r.independent == (extra == 0);
  }
  report("7c", good == cases,
         "Taylor rank equals independent count " + std::to_string(good) + "/" + std::to_string(cases) + " (" +
             std::to_string(dependent) + " dependent families)");
}

void criterion7d() {
  const auto corpus = decider_corpus(77, 200);
  int symmetric = 0, scaled_ok = 0, conflicts = 0;
  for (const auto &[f1, f2] : corpus) {
    Verdict v = decide_relatives(f1, f2);
    symmetric += decide_relatives(f2, f1).status == v.status;
    bool scale = true;
    for (const Rational &lambda : {Rational(1, 3), Rational(5, 2), Rational(7)}) {
      Verdict w = decide_relatives(scaled(f1, lambda), scaled(f2, lambda));
      scale = scale && w.status == v.status && w.rule == v.rule;
    }
    scaled_ok += scale;
    std::set<Status> statuses;
    for (const Verdict &r : evaluate_rules(f1, f2))
      if (r.status != Status::unknown)
        statuses.insert(r.status);
    conflicts += statuses.size() > 1;
  }
  const int n = static_cast<int>(corpus.size());
  report("7d", symmetric == n && scaled_ok == n && conflicts == 0,
         "decider corpus of " + std::to_string(n) + ": symmetric " + std::to_string(symmetric) + ", scale invariant " +
             std::to_string(scaled_ok) + ", rule conflicts " + std::to_string(conflicts));
}

void criterion8(Clock::time_point t0) {
  SearchResult pos = search_isometry(make_search_problem(F(2, 2), F(2, 1), 2), {.restarts = 20, .seed = 42});
  report("8a", pos.converged && pos.best_residual < 1e-10,
         "search F(2,2) vs F(2,1), D=2: best residual " + fmt("%.3e", pos.best_residual));

  SearchResult neg =
      search_isometry(make_search_problem(F(2, 1), F(2, Rational(3, 2)), 3), {.restarts = 50, .seed = 42});
  report("8b", neg.best_residual > 1e-3 && neg.evidence_only && !neg.converged,
         "search F(2,1) vs F(2,3/2), D=3: best residual " + fmt("%.6e", neg.best_residual) + " (threshold 1e-3), evidence_only " +
             (neg.evidence_only ? "true" : "false"));

  Rng rng(8003);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::vector<SearchProblem> problems{make_search_problem(F(2, 2), F(2, 1), 2),
                                            make_search_problem(F(2, 1), F(2, Rational(3, 2)), 3)};
  const int points = 100;
  int good = 0, total = 0;
  double worst = 0.0;
  for (const auto &p : problems) {
    ResidualModel model(p);
    for (int t = 0; t < points; ++t) {
      std::vector<double> x(model.num_params());
      for (auto &v : x)
        v = u(rng);
      Eigen::VectorXd g = model.gradient(x);
      Eigen::VectorXd fd(g.size());
      for (Eigen::Index i = 0; i < g.size(); ++i) {
        auto xp = x, xm = x;
        xp[i] += 1e-6;
        xm[i] -= 1e-6;
        fd[i] = (model.value(xp) - model.value(xm)) / 2e-6;
      }
      double rel = (fd - g).norm() / std::max(g.norm(), 1e-12);
      worst = std::max(worst, rel);
      good += rel <= 1e-4;
      ++total;
    }
  }
  double seconds = ms_since(t0) / 1000.0;
  report("8c", good == total && seconds < 30.0,
         "gradient vs central differences " + std::to_string(good) + "/" + std::to_string(total) +
             " points, worst relative error " + fmt("%.2e", worst) + "; search runtime " + fmt("%.2f s", seconds));
}

} // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7a();
  criterion7b();
  criterion7c();
  criterion7d();
  criterion8(Clock::now());
  std::printf("%s: %d failing criteria, total %.2f s\n", failures == 0 ? "ALL PASS" : "FAILURES", failures,
              ms_since(t0) / 1000.0);
  return failures == 0 ? 0 : 1;
}
