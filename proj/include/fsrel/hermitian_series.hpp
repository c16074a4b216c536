#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>

#include "fsrel/germ.hpp"
#include "fsrel/multi_index.hpp"
#include "fsrel/scalar.hpp"

namespace fsrel {

class BiSeries;

using EntryMap = std::map<IndexPair, Scalar>;

// A real-analytic germ sum c_{ab} Z^a Zbar^b stored as its Hermitian
// coefficient array. Both |a| and |b| are capped by max_degree separately.
// entry(b, a) == conj(entry(a, b)) always holds.
class HermitianSeries {
public:
  HermitianSeries(std::size_t num_vars, std::uint32_t max_degree);

  static HermitianSeries constant(std::size_t num_vars, std::uint32_t max_degree, const Rational &c);
  // 1 + b * sum_i |z_i|^2
  static HermitianSeries fubini_study_base(std::size_t num_vars, std::uint32_t max_degree, const Rational &b);
  // Validates the Hermitian symmetry and the degree caps.
  static HermitianSeries from_entries(std::size_t num_vars, std::uint32_t max_degree, const EntryMap &entries);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t max_degree() const { return max_degree_; }
  const EntryMap &entries() const { return entries_; }
  const Scalar &entry(const MultiIndex &alpha, const MultiIndex &beta) const;
  const Scalar &constant_term() const;

  // Adds c z^a zbar^b + conj(c) z^b zbar^a (a single real term when a == b).
  // Terms beyond the cap are dropped.
  void add_term(const MultiIndex &alpha, const MultiIndex &beta, const Scalar &c);

  bool is_zero() const { return entries_.empty(); }
  bool is_exact() const;
  bool is_hermitian() const;

  // Same coefficients under a different cap; entries beyond it are dropped.
  HermitianSeries with_max_degree(std::uint32_t max_degree) const;
  HermitianSeries to_approximate() const;

  // Value at a point (the sum is real for a Hermitian series).
  double evaluate(std::span<const std::complex<double>> z) const;

  HermitianSeries &operator+=(const HermitianSeries &o);
  HermitianSeries &operator-=(const HermitianSeries &o);
  HermitianSeries &operator*=(const Rational &c);
  friend HermitianSeries operator+(HermitianSeries a, const HermitianSeries &b) { return a += b; }
  friend HermitianSeries operator-(HermitianSeries a, const HermitianSeries &b) { return a -= b; }
  friend HermitianSeries operator*(const Rational &c, HermitianSeries a) { return a *= c; }

  friend bool operator==(const HermitianSeries &, const HermitianSeries &) = default;

private:
  friend HermitianSeries hermitian_mul(const HermitianSeries &, const HermitianSeries &);
  friend HermitianSeries norm_square_system(const SignedGermSystem &);
  friend HermitianSeries restrict_diagonal(const BiSeries &);

  void accumulate(const IndexPair &key, const Scalar &c);
  void check_compatible(const HermitianSeries &o) const;

  std::size_t num_vars_;
  std::uint32_t max_degree_;
  EntryMap entries_;
};

// The polarization of a Hermitian series: the same coefficients read as a
// function of independent variables, sum c_{ab} z^a conj(w)^b.
class BiSeries {
public:
  BiSeries(std::size_t num_vars, std::uint32_t max_degree, EntryMap entries);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t max_degree() const { return max_degree_; }
  const EntryMap &entries() const { return entries_; }
  const Scalar &entry(const MultiIndex &alpha, const MultiIndex &beta) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> z,
                                std::span<const std::complex<double>> w) const;

  friend bool operator==(const BiSeries &, const BiSeries &) = default;

private:
  std::size_t num_vars_;
  std::uint32_t max_degree_;
  EntryMap entries_;
};

// entry(a, b) = sum_i w_i c_i(a) conj(c_i(b)).
HermitianSeries norm_square_system(const SignedGermSystem &system);

BiSeries polarize(const HermitianSeries &h);
// Sets w := z. Throws DomainError if the coefficients are not Hermitian.
HermitianSeries restrict_diagonal(const BiSeries &b);

// Truncated product at the smaller of the two caps.
HermitianSeries hermitian_mul(const HermitianSeries &a, const HermitianSeries &b);
HermitianSeries hermitian_pow(const HermitianSeries &a, std::uint32_t k);

// log(h) for h with constant term exactly 1, at the given per-index cap.
HermitianSeries log_truncate(const HermitianSeries &h, std::uint32_t degree);
// exp(h) for h with zero constant term, at the given per-index cap.
HermitianSeries exp_truncate(const HermitianSeries &h, std::uint32_t degree);

} // namespace fsrel
