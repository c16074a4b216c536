#pragma once

#include <map>
#include <utility>

#include "fsrel/isometry_search.hpp"

namespace fsrel::testing {

// Polynomial in (z, zbar): key (i, j) is z^i zbar^j.
using BiPoly = std::map<std::pair<unsigned, unsigned>, GaussianRational>;

inline BiPoly bipoly_mul(const BiPoly &a, const BiPoly &b) {
  BiPoly out;
  for (const auto &[ka, va] : a)
    for (const auto &[kb, vb] : b)
      out[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  return out;
}

// 1 + c * sum_i w_i |g_i|^2, raised to `power`.
inline BiPoly side(const SignedGermSystem &sys, const Rational &c, unsigned power) {
  BiPoly base{{{0u, 0u}, GaussianRational(1)}};
  for (std::size_t g = 0; g < sys.size(); ++g)
    for (const auto &[ai, ci] : sys.germs()[g].coefficients())
      for (const auto &[aj, cj] : sys.germs()[g].coefficients())
        base[{ai[0], aj[0]}] += GaussianRational(c * sys.weights()[g]) * ci.exact_value() * cj.exact_value().conj();
  BiPoly out{{{0u, 0u}, GaussianRational(1)}};
  for (unsigned k = 0; k < power; ++k)
    out = bipoly_mul(out, base);
  return out;
}

// Sum of |L - R|^2 over bicoefficients with both indices at most the cap.
inline Rational oracle_residual(const Candidate &c, const SearchProblem &p) {
  BiPoly diff = side(c.h, p.a(), p.s);
  for (const auto &[k, v] : side(c.k, p.b(), p.r))
    diff[k] -= v;
  Rational total = 0;
  for (const auto &[k, v] : diff)
    if (k.first <= p.cap && k.second <= p.cap)
      total += v.norm();
  return total;
}

} // namespace fsrel::testing
