#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fsrel/multi_index.hpp"
#include "fsrel/scalar.hpp"

namespace fsrel {

// A germ of a holomorphic function at the origin, truncated to total degree
// max_degree. Zero coefficients are never stored.
class TruncatedGerm {
public:
  TruncatedGerm(std::size_t num_vars, std::uint32_t max_degree);

  // c * Z^alpha.
  static TruncatedGerm monomial(std::size_t num_vars, std::uint32_t max_degree, const MultiIndex &alpha,
                                Scalar c = 1);
  // One-variable germ sum_j coeffs[j] z^j.
  static TruncatedGerm univariate(std::uint32_t max_degree, const std::vector<Scalar> &coeffs);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t max_degree() const { return max_degree_; }

  const Scalar &coeff(const MultiIndex &alpha) const;
  void set(const MultiIndex &alpha, Scalar c);
  void add(const MultiIndex &alpha, const Scalar &c);
  const std::map<MultiIndex, Scalar> &coefficients() const { return coeffs_; }

  const Scalar &base_point_value() const;
  bool vanishes_at_base_point() const { return base_point_value().is_zero(); }
  bool is_exact() const;
  bool is_zero() const { return coeffs_.empty(); }
  TruncatedGerm to_approximate() const;

  TruncatedGerm &operator+=(const TruncatedGerm &o);
  TruncatedGerm &operator-=(const TruncatedGerm &o);
  TruncatedGerm &operator*=(const Scalar &c);
  friend TruncatedGerm operator+(TruncatedGerm a, const TruncatedGerm &b) { return a += b; }
  friend TruncatedGerm operator-(TruncatedGerm a, const TruncatedGerm &b) { return a -= b; }
  friend TruncatedGerm operator*(const Scalar &c, TruncatedGerm g) { return g *= c; }

  friend bool operator==(const TruncatedGerm &, const TruncatedGerm &) = default;

private:
  void check_index(const MultiIndex &alpha) const;
  void check_compatible(const TruncatedGerm &o) const;

  std::size_t num_vars_;
  std::uint32_t max_degree_;
  std::map<MultiIndex, Scalar> coeffs_;
};

// sum_i w_i |g_i|^2 with nonzero rational weights. All germs share num_vars
// and max_degree.
class SignedGermSystem {
public:
  SignedGermSystem(std::size_t num_vars, std::uint32_t max_degree);
  // Throws DimensionMismatch on mismatched germs or lengths, DomainError on a
  // zero weight. `germs` must be non-empty.
  SignedGermSystem(std::vector<TruncatedGerm> germs, std::vector<Rational> weights);

  void push_back(TruncatedGerm germ, Rational weight);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t max_degree() const { return max_degree_; }
  std::size_t size() const { return germs_.size(); }
  bool empty() const { return germs_.empty(); }
  const std::vector<TruncatedGerm> &germs() const { return germs_; }
  const std::vector<Rational> &weights() const { return weights_; }
  bool is_exact() const;

  std::size_t positive_count() const;
  std::size_t negative_count() const { return size() - positive_count(); }

private:
  std::size_t num_vars_;
  std::uint32_t max_degree_;
  std::vector<TruncatedGerm> germs_;
  std::vector<Rational> weights_;
};

struct TaylorRank {
  std::size_t rank = 0;
  bool independent = false;
};

// Exact rank of the coefficient matrix with one row per multi-index of
// degree 1..degree and one column per germ. Germs must be exact, share
// num_vars, and vanish at the origin.
TaylorRank taylor_matrix_rank(std::span<const TruncatedGerm> germs, std::uint32_t degree);

// Exact rank of a dense matrix over the Gaussian rationals (row-major).
std::size_t exact_rank(std::vector<std::vector<GaussianRational>> rows);

} // namespace fsrel
