#include "fsrel/isometry_search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <thread>

#include "fsrel/decider.hpp"
#include "fsrel/error.hpp"

namespace fsrel {

SearchProblem make_search_problem(const SpaceForm &host1, const SpaceForm &host2, std::uint32_t degree,
                                  std::uint32_t cap) {
  host1.validate();
  host2.validate();
  for (const SpaceForm *f : {&host1, &host2})
    if (f->kind != FormKind::projective || !f->is_definite())
      throw ValidationError("search hosts must be positively curved definite forms F(n, b); got " + render(*f));
  if (degree < 1)
    throw DomainError("search degree must be at least 1");
  const CoprimePair sr = ratio_reduce(Curvature(host2.curvature_mag, host2.curvature_unit),
                                      Curvature(host1.curvature_mag, host1.curvature_unit));
  if (sr.s > 64 || sr.r > 64)
    throw DomainError("curvature ratio " + sr.s.get_str() + ":" + sr.r.get_str() + " is too large to search");
  SearchProblem p{host1, host2, static_cast<std::uint32_t>(sr.s.get_ui()), static_cast<std::uint32_t>(sr.r.get_ui()),
                  degree, cap};
  if (p.cap == 0)
    p.cap = 2 * degree * std::max(p.s, p.r);
  return p;
}

namespace {

void check_curves(const SignedGermSystem &sys, std::uint32_t expected, const SearchProblem &p, const char *name) {
  if (sys.size() != expected)
    throw DimensionMismatch(std::string("candidate has ") + std::to_string(sys.size()) + " " + name +
                            " curves, host needs " + std::to_string(expected));
  if (sys.num_vars() != 1)
    throw DimensionMismatch("candidate curves must be one-variable");
  if (sys.max_degree() > p.degree)
    throw DimensionMismatch("candidate degree " + std::to_string(sys.max_degree()) + " exceeds problem degree " +
                            std::to_string(p.degree));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sgn(sys.weights()[i]) <= 0)
      throw DomainError(std::string("curve ") + name + std::to_string(i + 1) + " has a non-positive weight");
    if (!sys.germs()[i].vanishes_at_base_point())
      throw DomainError(std::string("curve ") + name + std::to_string(i + 1) + " does not vanish at 0");
  }
}

struct Sides {
  HermitianSeries lhs;
  HermitianSeries rhs;
};

Sides both_sides(const Candidate &c, const SearchProblem &p) {
  check_curves(c.h, p.m(), p, "h");
  check_curves(c.k, p.n(), p, "k");
  auto side = [&](const SignedGermSystem &sys, const Rational &curvature, std::uint32_t power) {
    HermitianSeries base = HermitianSeries::constant(1, p.cap, 1);
    base += curvature * norm_square_system(sys).with_max_degree(p.cap);
    return hermitian_pow(base, power);
  };
  return {side(c.h, p.a(), p.s), side(c.k, p.b(), p.r)};
}

} // namespace

Scalar residual(const Candidate &c, const SearchProblem &p) {
  const Sides sides = both_sides(c, p);
  const HermitianSeries diff = sides.lhs - sides.rhs;
  Scalar total = (c.h.is_exact() && c.k.is_exact()) ? Scalar(0) : Scalar::approx(0.0);
  for (const auto &[key, v] : diff.entries())
    total += v.norm();
  return total;
}

WitnessCheck verify_witness_exact(const Candidate &c, const SearchProblem &p) {
  if (!c.h.is_exact() || !c.k.is_exact())
    throw ModeError("verify_witness_exact requires exact candidate coefficients");
  const Sides sides = both_sides(c, p);
  const HermitianSeries diff = sides.lhs - sides.rhs;
  if (diff.is_zero())
    return {true, std::nullopt};
  const IndexPair &key = diff.entries().begin()->first;
  return {false, Mismatch{key, sides.lhs.entry(key.alpha, key.beta), sides.rhs.entry(key.alpha, key.beta)}};
}

namespace {

using cplx = std::complex<double>;

// Dense bicoefficient grid with per-index cap side-1.
struct Grid {
  std::uint32_t side;
  std::vector<cplx> v;
  explicit Grid(std::uint32_t s) : side(s), v(std::size_t(s) * s) {}
  cplx &at(std::uint32_t p, std::uint32_t q) { return v[std::size_t(p) * side + q]; }
  const cplx &at(std::uint32_t p, std::uint32_t q) const { return v[std::size_t(p) * side + q]; }
};

Grid multiply(const Grid &a, const Grid &b) {
  Grid out(a.side);
  const std::uint32_t n = a.side;
  for (std::uint32_t p1 = 0; p1 < n; ++p1)
    for (std::uint32_t q1 = 0; q1 < n; ++q1) {
      const cplx x = a.at(p1, q1);
      if (x == cplx{})
        continue;
      for (std::uint32_t p2 = 0; p1 + p2 < n; ++p2)
        for (std::uint32_t q2 = 0; q1 + q2 < n; ++q2)
          out.at(p1 + p2, q1 + q2) += x * b.at(p2, q2);
    }
  return out;
}

struct SparseEntry {
  std::uint32_t p, q;
  cplx value;
};

struct SideData {
  Grid value;      // (1 + c S)^e
  Grid derivative; // e c (1 + c S)^(e-1)
};

SideData power_side(const std::vector<std::vector<cplx>> &curves, double curvature, std::uint32_t power,
                    std::uint32_t side) {
  Grid base(side);
  base.at(0, 0) = 1.0;
  for (const auto &c : curves)
    for (std::uint32_t p = 1; p < c.size() && p < side; ++p)
      for (std::uint32_t q = 1; q < c.size() && q < side; ++q)
        base.at(p, q) += curvature * c[p] * std::conj(c[q]);
  Grid prev(side);
  prev.at(0, 0) = 1.0;
  for (std::uint32_t e = 1; e < power; ++e)
    prev = multiply(prev, base);
  SideData out{multiply(prev, base), prev};
  for (auto &x : out.derivative.v)
    x *= curvature * power;
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

} // namespace

std::uint64_t restart_seed(std::uint64_t seed, std::uint32_t restart) {
  return splitmix64(splitmix64(seed) ^ (0xD1B54A32D192ED03ull * (std::uint64_t(restart) + 1)));
}

ResidualModel::ResidualModel(const SearchProblem &p)
    : problem_(p), side_(std::min(p.cap, p.degree * std::max(p.s, p.r)) + 1),
      num_params_(2 * (std::size_t(p.m()) * p.degree - 1) + 2 * std::size_t(p.n()) * p.degree) {}

namespace {

struct Curves {
  std::vector<std::vector<cplx>> h, k;
};

Curves unpack(std::span<const double> x, const SearchProblem &p) {
  Curves c;
  c.h.assign(p.m(), std::vector<cplx>(p.degree + 1));
  c.k.assign(p.n(), std::vector<cplx>(p.degree + 1));
  std::size_t at = 0;
  for (std::uint32_t i = 0; i < p.m(); ++i)
    for (std::uint32_t j = 1; j <= p.degree; ++j) {
      if (i == 0 && j == 1) {
        c.h[0][1] = 1.0;
        continue;
      }
      c.h[i][j] = {x[at], x[at + 1]};
      at += 2;
    }
  for (std::uint32_t i = 0; i < p.n(); ++i)
    for (std::uint32_t j = 1; j <= p.degree; ++j) {
      c.k[i][j] = {x[at], x[at + 1]};
      at += 2;
    }
  return c;
}

} // namespace

void ResidualModel::evaluate(std::span<const double> x, Eigen::VectorXd &res, Eigen::MatrixXd *jac) const {
  if (x.size() != num_params_)
    throw DimensionMismatch("parameter vector has wrong length");
  const SearchProblem &p = problem_;
  const Curves c = unpack(x, p);
  const SideData lhs = power_side(c.h, p.a().get_d(), p.s, side_);
  const SideData rhs = power_side(c.k, p.b().get_d(), p.r, side_);

  res.resize(Eigen::Index(num_residuals()));
  for (std::size_t idx = 0; idx < lhs.value.v.size(); ++idx) {
    const cplx d = lhs.value.v[idx] - rhs.value.v[idx];
    res[Eigen::Index(2 * idx)] = d.real();
    res[Eigen::Index(2 * idx + 1)] = d.imag();
  }
  if (!jac)
    return;
  jac->setZero(Eigen::Index(num_residuals()), Eigen::Index(num_params_));

  // d S[p][q] for a perturbation eps of coefficient j of one curve:
  // eps * conj(c_q) at (j, q) and c_p * conj(eps) at (p, j).
  std::vector<SparseEntry> delta;
  auto column = [&](Eigen::Index col, const std::vector<cplx> &curve, std::uint32_t j, cplx eps, const Grid &g,
                    double sign) {
    delta.clear();
    for (std::uint32_t q = 1; q < curve.size() && q < side_; ++q) {
      delta.push_back({j, q, eps * std::conj(curve[q])});
      delta.push_back({q, j, curve[q] * std::conj(eps)});
    }
    for (const auto &e : delta) {
      if (e.value == cplx{} || e.p >= side_ || e.q >= side_)
        continue;
      for (std::uint32_t p2 = 0; e.p + p2 < side_; ++p2)
        for (std::uint32_t q2 = 0; e.q + q2 < side_; ++q2) {
          const cplx v = sign * e.value * g.at(p2, q2);
          const std::size_t idx = std::size_t(e.p + p2) * side_ + (e.q + q2);
          (*jac)(Eigen::Index(2 * idx), col) += v.real();
          (*jac)(Eigen::Index(2 * idx + 1), col) += v.imag();
        }
    }
  };

  Eigen::Index col = 0;
  const cplx one(1.0, 0.0), imag(0.0, 1.0);
  for (std::uint32_t i = 0; i < p.m(); ++i)
    for (std::uint32_t j = 1; j <= p.degree; ++j) {
      if (i == 0 && j == 1)
        continue;
      column(col++, c.h[i], j, one, lhs.derivative, 1.0);
      column(col++, c.h[i], j, imag, lhs.derivative, 1.0);
    }
  for (std::uint32_t i = 0; i < p.n(); ++i)
    for (std::uint32_t j = 1; j <= p.degree; ++j) {
      column(col++, c.k[i], j, one, rhs.derivative, -1.0);
      column(col++, c.k[i], j, imag, rhs.derivative, -1.0);
    }
}

double ResidualModel::value(std::span<const double> x) const {
  Eigen::VectorXd res;
  evaluate(x, res, nullptr);
  return res.squaredNorm();
}

Eigen::VectorXd ResidualModel::gradient(std::span<const double> x) const {
  Eigen::VectorXd res;
  Eigen::MatrixXd jac;
  evaluate(x, res, &jac);
  return 2.0 * jac.transpose() * res;
}

Candidate ResidualModel::to_candidate(std::span<const double> x) const {
  const SearchProblem &p = problem_;
  const Curves c = unpack(x, p);
  auto pack = [&](const std::vector<std::vector<cplx>> &curves) {
    SignedGermSystem sys(1, p.degree);
    for (const auto &curve : curves) {
      TruncatedGerm g(1, p.degree);
      for (std::uint32_t j = 1; j < curve.size(); ++j)
        g.set(MultiIndex{j}, Scalar(curve[j]));
      sys.push_back(std::move(g), 1);
    }
    return sys;
  };
  return {pack(c.h), pack(c.k)};
}

namespace {

struct LocalResult {
  double residual;
  std::vector<double> x;
};

LocalResult levenberg_marquardt(const ResidualModel &model, std::vector<double> x, std::uint32_t max_iters) {
  const Eigen::Index np = Eigen::Index(model.num_params());
  Eigen::VectorXd res, res_new;
  Eigen::MatrixXd jac;
  model.evaluate(x, res, &jac);
  double f = res.squaredNorm();
  Eigen::MatrixXd jtj = jac.transpose() * jac;
  Eigen::VectorXd g = jac.transpose() * res;
  double lambda = 1e-3 * std::max(jtj.diagonal().maxCoeff(), 1e-12);
  double nu = 2.0;
  std::vector<double> trial(x.size());

  for (std::uint32_t it = 0; it < max_iters; ++it) {
    if (f <= 1e-30 || g.lpNorm<Eigen::Infinity>() <= 1e-30)
      break;
    Eigen::MatrixXd a = jtj;
    a.diagonal().array() += lambda;
    const Eigen::VectorXd step = a.ldlt().solve(-g);
    const double xnorm = Eigen::Map<const Eigen::VectorXd>(x.data(), np).norm();
    if (!step.allFinite() || step.norm() <= 1e-15 * (xnorm + 1e-15))
      break;
    for (Eigen::Index i = 0; i < np; ++i)
      trial[std::size_t(i)] = x[std::size_t(i)] + step[i];
    model.evaluate(trial, res_new, nullptr);
    const double f_new = res_new.squaredNorm();
    const double predicted = lambda * step.squaredNorm() - step.dot(g);
    const double rho = predicted > 0 ? (f - f_new) / predicted : -1.0;
    if (std::isfinite(f_new) && rho > 0) {
      x = trial;
      model.evaluate(x, res, &jac);
      f = res.squaredNorm();
      jtj.noalias() = jac.transpose() * jac;
      g.noalias() = jac.transpose() * res;
      lambda *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * rho - 1.0, 3));
      nu = 2.0;
    } else {
      lambda *= nu;
      nu *= 2.0;
      if (lambda > 1e20)
        break;
    }
  }
  return {f, std::move(x)};
}

} // namespace

SearchResult search_isometry(const SearchProblem &p, const SearchOptions &opts) {
  if (opts.restarts < 1 || opts.max_iters < 1)
    throw DomainError("search needs at least one restart and one iteration");
  if (!(opts.tol > 0))
    throw DomainError("search tolerance must be positive");
  const ResidualModel model(p);
  std::vector<LocalResult> results(opts.restarts);

  auto run = [&](std::uint32_t i) {
    std::mt19937_64 rng(restart_seed(opts.seed, i));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> x(model.num_params());
    for (auto &v : x)
      v = unit(rng);
    results[i] = levenberg_marquardt(model, std::move(x), opts.max_iters);
  };

  const unsigned threads = std::max(1u, std::min(opts.threads, opts.restarts));
  if (threads == 1) {
    for (std::uint32_t i = 0; i < opts.restarts; ++i)
      run(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint32_t i = t; i < opts.restarts; i += threads)
          run(i);
      });
  }

  SearchResult out{model.to_candidate(results.front().x), 0.0, false, {}, true};
  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    out.per_restart.push_back(results[i].residual);
    if (results[i].residual < results[best].residual)
      best = i;
  }
  out.best = model.to_candidate(results[best].x);
  out.best_residual = results[best].residual;
  out.converged = out.best_residual < opts.tol;
  out.evidence_only = !out.converged;
  return out;
}

} // namespace fsrel
