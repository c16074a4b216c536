#include "fsrel/multi_index.hpp"

#include <numeric>
#include <sstream>

#include "fsrel/error.hpp"

namespace fsrel {

MultiIndex::MultiIndex(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0})) {}

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> exponents)
    : MultiIndex(std::vector<std::uint32_t>(exponents)) {}

MultiIndex MultiIndex::unit(std::size_t num_vars, std::size_t var, std::uint32_t power) {
  std::vector<std::uint32_t> e(num_vars, 0);
  e.at(var) = power;
  return MultiIndex(std::move(e));
}

MultiIndex operator+(const MultiIndex &a, const MultiIndex &b) {
  if (a.num_vars() != b.num_vars())
    throw DimensionMismatch("multi-index variable counts differ");
  std::vector<std::uint32_t> e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] += b.exponents_[i];
  return MultiIndex(std::move(e));
}

std::strong_ordering operator<=>(const MultiIndex &a, const MultiIndex &b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0)
    return c;
  if (auto c = a.num_vars() <=> b.num_vars(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    // Larger leading exponent sorts first.
    if (auto c = b.exponents_[i] <=> a.exponents_[i]; c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    os << (i ? "," : "") << exponents_[i];
  os << ')';
  return os.str();
}

namespace {

void enumerate_degree(std::size_t num_vars, std::uint32_t degree, std::size_t pos, std::vector<std::uint32_t> &cur,
                      std::vector<MultiIndex> &out) {
  if (pos + 1 == num_vars) {
    cur[pos] = degree;
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = degree + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate_degree(num_vars, degree - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

} // namespace

std::vector<MultiIndex> enumerate_indices(std::size_t num_vars, std::uint32_t min_degree, std::uint32_t max_degree) {
  if (num_vars == 0)
    throw DomainError("enumerate_indices: num_vars must be positive");
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> cur(num_vars, 0);
  for (std::uint32_t d = min_degree; d <= max_degree; ++d)
    enumerate_degree(num_vars, d, 0, cur, out);
  return out;
}

std::strong_ordering operator<=>(const IndexPair &a, const IndexPair &b) {
  if (auto c = (a.alpha.degree() + a.beta.degree()) <=> (b.alpha.degree() + b.beta.degree()); c != 0)
    return c;
  if (auto c = a.alpha <=> b.alpha; c != 0)
    return c;
  return a.beta <=> b.beta;
}

} // namespace fsrel
