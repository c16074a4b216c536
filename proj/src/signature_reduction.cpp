#include "fsrel/signature_reduction.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fsrel/error.hpp"

namespace fsrel {

namespace {

using Matrix = std::vector<std::vector<GaussianRational>>;

struct CoefficientMatrix {
  std::vector<MultiIndex> basis; // graded-lex
  Matrix entries;
};

CoefficientMatrix coefficient_matrix(const HermitianSeries &h) {
  if (!h.is_exact())
    throw ModeError("signature reduction requires exact coefficients");
  std::set<MultiIndex> support;
  for (const auto &[key, c] : h.entries()) {
    if (key.alpha.is_zero() || key.beta.is_zero())
      throw NormalizationError("entry " + key.alpha.to_string() + "," + key.beta.to_string() +
                               " is constant or purely (anti)holomorphic; normalize it away first");
    support.insert(key.alpha);
  }
  CoefficientMatrix m;
  m.basis.assign(support.begin(), support.end());
  const std::size_t n = m.basis.size();
  m.entries.assign(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.entries[i][j] = h.entry(m.basis[i], m.basis[j]).exact_value();
  return m;
}

struct Peel {
  std::vector<GaussianRational> vector; // coefficients on the basis
  Rational weight;
};

// Symmetric elimination M = sum_k w_k v_k v_k^*. A nonzero diagonal pivot
// removes a rank-one term; when the remaining diagonal is zero, a cross term
// m = M_ij is removed as the rank-two block x w^* + w x^* with x = M e_i and
// w = M e_j / m, written as (1/2)|x+w|^2 - (1/2)|x-w|^2.
std::vector<Peel> peel_all(Matrix a) {
  const std::size_t n = a.size();
  std::vector<Peel> out;
  auto column = [&](std::size_t c) {
    std::vector<GaussianRational> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = a[i][c];
    return v;
  };
  auto subtract = [&](const std::vector<GaussianRational> &v, const Rational &w) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero())
        continue;
      const GaussianRational wi = v[i] * GaussianRational(w);
      for (std::size_t j = 0; j < n; ++j)
        if (!v[j].is_zero())
          a[i][j] -= wi * v[j].conj();
    }
  };

  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (!a[i][i].is_zero())
        pivot = i;
    if (pivot < n) {
      const Rational d = a[pivot][pivot].re();
      std::vector<GaussianRational> v = column(pivot);
      const GaussianRational inv(Rational(1) / d);
      for (auto &x : v)
        x *= inv;
      subtract(v, d);
      out.push_back({std::move(v), d});
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n)
      break;
    const GaussianRational m = a[pi][pj];
    std::vector<GaussianRational> x = column(pi);
    std::vector<GaussianRational> w = column(pj);
    for (auto &e : w)
      e /= m;
    std::vector<GaussianRational> plus(n), minus(n);
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = x[i] + w[i];
      minus[i] = x[i] - w[i];
    }
    const Rational half(1, 2);
    subtract(plus, half);
    subtract(minus, -half);
    out.push_back({std::move(plus), half});
    out.push_back({std::move(minus), -half});
  }
  return out;
}

} // namespace

Inertia inertia(const HermitianSeries &h) {
  const CoefficientMatrix m = coefficient_matrix(h);
  Inertia in;
  for (const auto &p : peel_all(m.entries))
    (sgn(p.weight) > 0 ? in.positive : in.negative) += 1;
  return in;
}

SignedGermSystem signature_reduce(const HermitianSeries &h) {
  const CoefficientMatrix m = coefficient_matrix(h);
  std::vector<Peel> peels = peel_all(m.entries);
  std::stable_partition(peels.begin(), peels.end(), [](const Peel &p) { return sgn(p.weight) > 0; });
  SignedGermSystem out(h.num_vars(), h.max_degree());
  for (auto &p : peels) {
    TruncatedGerm g(h.num_vars(), h.max_degree());
    for (std::size_t i = 0; i < m.basis.size(); ++i)
      if (!p.vector[i].is_zero())
        g.set(m.basis[i], Scalar(p.vector[i]));
    out.push_back(std::move(g), std::move(p.weight));
  }
  return out;
}

} // namespace fsrel
