#include "fsrel/germ.hpp"

#include <string>

#include "fsrel/error.hpp"

namespace fsrel {

namespace {

const Scalar kZero{};

} // namespace

TruncatedGerm::TruncatedGerm(std::size_t num_vars, std::uint32_t max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
  if (num_vars == 0 || max_degree == 0)
    throw DomainError("germ needs positive num_vars and max_degree");
}

TruncatedGerm TruncatedGerm::monomial(std::size_t num_vars, std::uint32_t max_degree, const MultiIndex &alpha,
                                      Scalar c) {
  TruncatedGerm g(num_vars, max_degree);
  g.set(alpha, std::move(c));
  return g;
}

TruncatedGerm TruncatedGerm::univariate(std::uint32_t max_degree, const std::vector<Scalar> &coeffs) {
  TruncatedGerm g(1, max_degree);
  for (std::uint32_t j = 0; j < coeffs.size(); ++j)
    g.set(MultiIndex{j}, coeffs[j]);
  return g;
}

void TruncatedGerm::check_index(const MultiIndex &alpha) const {
  if (alpha.num_vars() != num_vars_)
    throw DimensionMismatch("multi-index " + alpha.to_string() + " has wrong variable count");
  if (alpha.degree() > max_degree_)
    throw DomainError("multi-index " + alpha.to_string() + " exceeds germ degree " + std::to_string(max_degree_));
}

void TruncatedGerm::check_compatible(const TruncatedGerm &o) const {
  if (num_vars_ != o.num_vars_ || max_degree_ != o.max_degree_)
    throw DimensionMismatch("germs differ in num_vars or max_degree");
}

const Scalar &TruncatedGerm::coeff(const MultiIndex &alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? kZero : it->second;
}

void TruncatedGerm::set(const MultiIndex &alpha, Scalar c) {
  check_index(alpha);
  if (c.is_zero())
    coeffs_.erase(alpha);
  else
    coeffs_.insert_or_assign(alpha, std::move(c));
}

void TruncatedGerm::add(const MultiIndex &alpha, const Scalar &c) {
  check_index(alpha);
  auto [it, inserted] = coeffs_.try_emplace(alpha, c);
  if (!inserted)
    it->second += c;
  if (it->second.is_zero())
    coeffs_.erase(it);
}

const Scalar &TruncatedGerm::base_point_value() const { return coeff(MultiIndex::zero(num_vars_)); }

bool TruncatedGerm::is_exact() const {
  for (const auto &[alpha, c] : coeffs_)
    if (!c.is_exact())
      return false;
  return true;
}

TruncatedGerm TruncatedGerm::to_approximate() const {
  TruncatedGerm g(num_vars_, max_degree_);
  for (const auto &[alpha, c] : coeffs_)
    g.coeffs_.emplace(alpha, c.to_approximate());
  return g;
}

TruncatedGerm &TruncatedGerm::operator+=(const TruncatedGerm &o) {
  check_compatible(o);
  for (const auto &[alpha, c] : o.coeffs_)
    add(alpha, c);
  return *this;
}

TruncatedGerm &TruncatedGerm::operator-=(const TruncatedGerm &o) {
  check_compatible(o);
  for (const auto &[alpha, c] : o.coeffs_)
    add(alpha, -c);
  return *this;
}

TruncatedGerm &TruncatedGerm::operator*=(const Scalar &c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto &[alpha, v] : coeffs_)
    v *= c;
  return *this;
}

SignedGermSystem::SignedGermSystem(std::size_t num_vars, std::uint32_t max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
  if (num_vars == 0 || max_degree == 0)
    throw DomainError("germ system needs positive num_vars and max_degree");
}

SignedGermSystem::SignedGermSystem(std::vector<TruncatedGerm> germs, std::vector<Rational> weights)
    : num_vars_(0), max_degree_(0) {
  if (germs.empty())
    throw DomainError("germ system constructed from an empty germ list; pass dimensions instead");
  if (germs.size() != weights.size())
    throw DimensionMismatch("germ system has " + std::to_string(germs.size()) + " germs but " +
                            std::to_string(weights.size()) + " weights");
  num_vars_ = germs.front().num_vars();
  max_degree_ = germs.front().max_degree();
  for (std::size_t i = 0; i < germs.size(); ++i)
    push_back(std::move(germs[i]), std::move(weights[i]));
}

void SignedGermSystem::push_back(TruncatedGerm germ, Rational weight) {
  if (germ.num_vars() != num_vars_ || germ.max_degree() != max_degree_)
    throw DimensionMismatch("germ " + std::to_string(germs_.size()) + " differs in num_vars or max_degree");
  if (sgn(weight) == 0)
    throw DomainError("germ system weights must be nonzero");
  weight.canonicalize();
  germs_.push_back(std::move(germ));
  weights_.push_back(std::move(weight));
}

bool SignedGermSystem::is_exact() const {
  for (const auto &g : germs_)
    if (!g.is_exact())
      return false;
  return true;
}

std::size_t SignedGermSystem::positive_count() const {
  std::size_t n = 0;
  for (const auto &w : weights_)
    n += sgn(w) > 0;
  return n;
}

std::size_t exact_rank(std::vector<std::vector<GaussianRational>> rows) {
  if (rows.empty())
    return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero())
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[rank]);
    const GaussianRational inv = GaussianRational(1) / rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero())
        continue;
      const GaussianRational f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

TaylorRank taylor_matrix_rank(std::span<const TruncatedGerm> germs, std::uint32_t degree) {
  if (degree < 1)
    throw DomainError("taylor_matrix_rank: degree must be at least 1");
  if (germs.empty())
    return {0, true};
  const std::size_t n = germs.front().num_vars();
  for (std::size_t i = 0; i < germs.size(); ++i) {
    if (germs[i].num_vars() != n)
      throw DimensionMismatch("taylor_matrix_rank: germ " + std::to_string(i) + " has a different variable count");
    if (!germs[i].is_exact())
      throw ModeError("taylor_matrix_rank requires exact coefficients");
    if (!germs[i].vanishes_at_base_point())
      throw DomainError("taylor_matrix_rank: germ " + std::to_string(i) + " does not vanish at the origin");
  }
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto &alpha : enumerate_indices(n, 1, degree)) {
    std::vector<GaussianRational> row;
    row.reserve(germs.size());
    bool any = false;
    for (const auto &g : germs) {
      row.push_back(g.coeff(alpha).exact_value());
      any = any || !row.back().is_zero();
    }
    if (any)
      rows.push_back(std::move(row));
  }
  const std::size_t rank = exact_rank(std::move(rows));
  return {rank, rank == germs.size()};
}

} // namespace fsrel
