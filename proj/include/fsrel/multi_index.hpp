#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fsrel {

// Exponent vector of a monomial Z^alpha. Ordered graded-lexicographically:
// lower total degree first, then larger leading exponents first, so that
// (2,0) < (1,1) < (0,2).
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> exponents);
  MultiIndex(std::initializer_list<std::uint32_t> exponents);

  static MultiIndex zero(std::size_t num_vars) { return MultiIndex(std::vector<std::uint32_t>(num_vars, 0)); }
  // e_i scaled by `power`.
  static MultiIndex unit(std::size_t num_vars, std::size_t var, std::uint32_t power = 1);

  std::size_t num_vars() const { return exponents_.size(); }
  std::uint32_t degree() const { return degree_; }
  bool is_zero() const { return degree_ == 0; }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t> &exponents() const { return exponents_; }

  friend MultiIndex operator+(const MultiIndex &a, const MultiIndex &b);

  friend bool operator==(const MultiIndex &a, const MultiIndex &b) { return a.exponents_ == b.exponents_; }
  friend std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b);

  std::string to_string() const;

private:
  std::vector<std::uint32_t> exponents_;
  std::uint32_t degree_ = 0;
};

// All multi-indices in `num_vars` variables with min_degree <= |alpha| <=
// max_degree, in graded-lex order.
std::vector<MultiIndex> enumerate_indices(std::size_t num_vars, std::uint32_t min_degree, std::uint32_t max_degree);

// Key of a bicoefficient z^alpha zbar^beta. Ordered by |alpha|+|beta|, then
// alpha, then beta.
struct IndexPair {
  MultiIndex alpha;
  MultiIndex beta;

  IndexPair swapped() const { return {beta, alpha}; }

  friend bool operator==(const IndexPair &, const IndexPair &) = default;
  friend std::strong_ordering operator<=>(const IndexPair &a, const IndexPair &b);
};

} // namespace fsrel
