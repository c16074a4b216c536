#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fsrel/hermitian_series.hpp"
#include "fsrel/multi_index.hpp"
#include "fsrel/scalar.hpp"

namespace fsrel {

Integer binomial(const Integer &n, const Integer &k);
Integer binomial(unsigned long n, unsigned long k);

// (1 + b * sum_i |z_i|^2)^r = 1 + sum_alpha c_alpha |Z^alpha|^2, where
// c_alpha = b^|alpha| * r! / ((r - |alpha|)! * alpha!) and 1 <= |alpha| <= r.
struct DiagonalExpansion {
  std::size_t num_vars = 0;
  Rational curvature;
  std::uint32_t power = 0;
  // Graded-lex order.
  std::vector<std::pair<MultiIndex, Rational>> terms;

  // 1 + sum c_alpha |Z^alpha|^2 with per-index cap `power`.
  HermitianSeries to_hermitian_series() const;
};

DiagonalExpansion expand_fubini_power(std::size_t n, const Rational &b, std::uint32_t r);

// binom(r + n, r) - 1: the number of monomial components of the degree-r
// Calabi map from n variables.
Integer embedding_dimension(const Integer &n, const Integer &r);

// Squared magnitudes w_1..w_q of the monomial curve f_j = sqrt(w_j) z^j
// with 1 + q*a*sum_j w_j t^j = (1 + a*m*t)^q, matched against the diagonal
// curve (z, ..., z) with m components.
struct RemarkWitness {
  std::vector<Rational> host_weights;
  std::uint32_t diagonal_multiplicity = 0;
};

RemarkWitness remark_witness(std::uint32_t q, const Rational &a, std::uint32_t m);

} // namespace fsrel
