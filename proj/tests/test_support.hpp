#pragma once

#include <cstdint>
#include <random>

#include "fsrel/germ.hpp"
#include "fsrel/hermitian_series.hpp"

namespace fsrel::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// p/q with |p| <= max_num and 1 <= q <= max_den.
inline Rational random_rational(Rng &rng, long max_num = 5, long max_den = 3) {
  Rational q(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng &rng, long max_num = 5, long max_den = 3) {
  for (;;) {
    Rational q = random_rational(rng, max_num, max_den);
    if (sgn(q) != 0)
      return q;
  }
}

inline Scalar random_scalar(Rng &rng, long max_num = 5, long max_den = 3) {
  return Scalar::exact(random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den));
}

// Germ vanishing at the origin with roughly `density` of its monomials set.
inline TruncatedGerm random_germ(Rng &rng, std::size_t num_vars, std::uint32_t degree, double density = 0.6,
                                 long max_num = 5) {
  TruncatedGerm g(num_vars, degree);
  std::bernoulli_distribution keep(density);
  for (const auto &alpha : enumerate_indices(num_vars, 1, degree))
    if (keep(rng))
      g.set(alpha, random_scalar(rng, max_num));
  return g;
}

inline SignedGermSystem random_system(Rng &rng, std::size_t num_vars, std::uint32_t degree, std::size_t size) {
  SignedGermSystem sys(num_vars, degree);
  for (std::size_t i = 0; i < size; ++i)
    sys.push_back(random_germ(rng, num_vars, degree), random_nonzero_rational(rng, 4, 3));
  return sys;
}

// A random Hermitian series with arbitrary (including pure holomorphic)
// entries and the given constant term.
inline HermitianSeries random_hermitian(Rng &rng, std::size_t num_vars, std::uint32_t degree,
                                       const Rational &constant, double density = 0.3) {
  HermitianSeries h = HermitianSeries::constant(num_vars, degree, constant);
  std::bernoulli_distribution keep(density);
  const auto indices = enumerate_indices(num_vars, 0, degree);
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i; j < indices.size(); ++j) {
      if ((i == 0 && j == 0) || !keep(rng))
        continue;
      if (i == j)
        h.add_term(indices[i], indices[j], Scalar(random_rational(rng)));
      else
        h.add_term(indices[i], indices[j], random_scalar(rng));
    }
  return h;
}

} // namespace fsrel::testing
