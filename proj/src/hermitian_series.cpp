#include "fsrel/hermitian_series.hpp"

#include <string>
#include <vector>

#include "fsrel/error.hpp"

namespace fsrel {

namespace {

const Scalar kZero{};

std::complex<double> monomial_value(std::span<const std::complex<double>> z, const MultiIndex &alpha) {
  std::complex<double> v = 1.0;
  for (std::size_t i = 0; i < alpha.num_vars(); ++i)
    for (std::uint32_t e = 0; e < alpha[i]; ++e)
      v *= z[i];
  return v;
}

void check_key(std::size_t num_vars, std::uint32_t max_degree, const IndexPair &key) {
  if (key.alpha.num_vars() != num_vars || key.beta.num_vars() != num_vars)
    throw DimensionMismatch("entry index " + key.alpha.to_string() + "," + key.beta.to_string() +
                            " has wrong variable count");
  if (key.alpha.degree() > max_degree || key.beta.degree() > max_degree)
    throw DomainError("entry index " + key.alpha.to_string() + "," + key.beta.to_string() + " exceeds cap " +
                      std::to_string(max_degree));
}

// Exact scalars must mirror exactly; approximate ones up to rounding.
bool conj_matches(const Scalar &c, const Scalar &mirror) {
  if (c.is_exact() && mirror.is_exact())
    return mirror == c.conj();
  return std::abs(mirror.to_complex() - std::conj(c.to_complex())) <= 1e-12 * (1.0 + std::abs(c.to_complex()));
}

} // namespace

HermitianSeries::HermitianSeries(std::size_t num_vars, std::uint32_t max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
  if (num_vars == 0 || max_degree == 0)
    throw DomainError("Hermitian series needs positive num_vars and max_degree");
}

HermitianSeries HermitianSeries::constant(std::size_t num_vars, std::uint32_t max_degree, const Rational &c) {
  HermitianSeries h(num_vars, max_degree);
  h.accumulate({MultiIndex::zero(num_vars), MultiIndex::zero(num_vars)}, Scalar(c));
  return h;
}

HermitianSeries HermitianSeries::fubini_study_base(std::size_t num_vars, std::uint32_t max_degree,
                                                   const Rational &b) {
  HermitianSeries h = constant(num_vars, max_degree, 1);
  for (std::size_t i = 0; i < num_vars; ++i) {
    MultiIndex e = MultiIndex::unit(num_vars, i);
    h.accumulate({e, e}, Scalar(b));
  }
  return h;
}

HermitianSeries HermitianSeries::from_entries(std::size_t num_vars, std::uint32_t max_degree,
                                              const EntryMap &entries) {
  HermitianSeries h(num_vars, max_degree);
  for (const auto &[key, c] : entries) {
    check_key(num_vars, max_degree, key);
    h.accumulate(key, c);
  }
  for (const auto &[key, c] : h.entries_) {
    auto it = h.entries_.find(key.swapped());
    const Scalar &mirror = it == h.entries_.end() ? kZero : it->second;
    if (!conj_matches(c, mirror))
      throw DomainError("entries at " + key.alpha.to_string() + "," + key.beta.to_string() +
                        " violate Hermitian symmetry");
  }
  return h;
}

const Scalar &HermitianSeries::entry(const MultiIndex &alpha, const MultiIndex &beta) const {
  auto it = entries_.find({alpha, beta});
  return it == entries_.end() ? kZero : it->second;
}

const Scalar &HermitianSeries::constant_term() const {
  return entry(MultiIndex::zero(num_vars_), MultiIndex::zero(num_vars_));
}

void HermitianSeries::accumulate(const IndexPair &key, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = entries_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      entries_.erase(it);
  }
}

void HermitianSeries::add_term(const MultiIndex &alpha, const MultiIndex &beta, const Scalar &c) {
  IndexPair key{alpha, beta};
  if (alpha.num_vars() != num_vars_ || beta.num_vars() != num_vars_)
    throw DimensionMismatch("term index has wrong variable count");
  if (alpha.degree() > max_degree_ || beta.degree() > max_degree_)
    return;
  if (alpha == beta) {
    if (!c.is_real())
      throw DomainError("diagonal term " + alpha.to_string() + " must be real");
    accumulate(key, c);
    return;
  }
  accumulate(key, c);
  accumulate(key.swapped(), c.conj());
}

bool HermitianSeries::is_exact() const {
  for (const auto &[key, c] : entries_)
    if (!c.is_exact())
      return false;
  return true;
}

bool HermitianSeries::is_hermitian() const {
  for (const auto &[key, c] : entries_) {
    auto it = entries_.find(key.swapped());
    if (it == entries_.end() || !conj_matches(c, it->second))
      return false;
  }
  return true;
}

HermitianSeries HermitianSeries::with_max_degree(std::uint32_t max_degree) const {
  HermitianSeries h(num_vars_, max_degree);
  for (const auto &[key, c] : entries_)
    if (key.alpha.degree() <= max_degree && key.beta.degree() <= max_degree)
      h.entries_.emplace_hint(h.entries_.end(), key, c);
  return h;
}

HermitianSeries HermitianSeries::to_approximate() const {
  HermitianSeries h(num_vars_, max_degree_);
  for (const auto &[key, c] : entries_)
    h.entries_.emplace_hint(h.entries_.end(), key, c.to_approximate());
  return h;
}

double HermitianSeries::evaluate(std::span<const std::complex<double>> z) const {
  if (z.size() != num_vars_)
    throw DimensionMismatch("evaluation point has wrong dimension");
  std::complex<double> sum = 0.0;
  for (const auto &[key, c] : entries_)
    sum += c.to_complex() * monomial_value(z, key.alpha) * std::conj(monomial_value(z, key.beta));
  return sum.real();
}

void HermitianSeries::check_compatible(const HermitianSeries &o) const {
  if (num_vars_ != o.num_vars_)
    throw DimensionMismatch("Hermitian series differ in num_vars (" + std::to_string(num_vars_) + " vs " +
                            std::to_string(o.num_vars_) + ")");
}

HermitianSeries &HermitianSeries::operator+=(const HermitianSeries &o) {
  check_compatible(o);
  for (const auto &[key, c] : o.entries_)
    if (key.alpha.degree() <= max_degree_ && key.beta.degree() <= max_degree_)
      accumulate(key, c);
  return *this;
}

HermitianSeries &HermitianSeries::operator-=(const HermitianSeries &o) {
  check_compatible(o);
  for (const auto &[key, c] : o.entries_)
    if (key.alpha.degree() <= max_degree_ && key.beta.degree() <= max_degree_)
      accumulate(key, -c);
  return *this;
}

HermitianSeries &HermitianSeries::operator*=(const Rational &c) {
  if (sgn(c) == 0) {
    entries_.clear();
    return *this;
  }
  const Scalar s(c);
  for (auto &[key, v] : entries_)
    v *= s;
  return *this;
}

BiSeries::BiSeries(std::size_t num_vars, std::uint32_t max_degree, EntryMap entries)
    : num_vars_(num_vars), max_degree_(max_degree), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    check_key(num_vars_, max_degree_, it->first);
    it = it->second.is_zero() ? entries_.erase(it) : std::next(it);
  }
}

const Scalar &BiSeries::entry(const MultiIndex &alpha, const MultiIndex &beta) const {
  auto it = entries_.find({alpha, beta});
  return it == entries_.end() ? kZero : it->second;
}

std::complex<double> BiSeries::evaluate(std::span<const std::complex<double>> z,
                                        std::span<const std::complex<double>> w) const {
  if (z.size() != num_vars_ || w.size() != num_vars_)
    throw DimensionMismatch("evaluation point has wrong dimension");
  std::complex<double> sum = 0.0;
  for (const auto &[key, c] : entries_)
    sum += c.to_complex() * monomial_value(z, key.alpha) * std::conj(monomial_value(w, key.beta));
  return sum;
}

HermitianSeries norm_square_system(const SignedGermSystem &system) {
  HermitianSeries h(system.num_vars(), system.max_degree());
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Scalar w(system.weights()[i]);
    const auto &coeffs = system.germs()[i].coefficients();
    for (const auto &[alpha, ca] : coeffs) {
      const Scalar wa = w * ca;
      for (const auto &[beta, cb] : coeffs)
        h.accumulate({alpha, beta}, wa * cb.conj());
    }
  }
  return h;
}

BiSeries polarize(const HermitianSeries &h) { return BiSeries(h.num_vars(), h.max_degree(), h.entries()); }

HermitianSeries restrict_diagonal(const BiSeries &b) {
  return HermitianSeries::from_entries(b.num_vars(), b.max_degree(), b.entries());
}

HermitianSeries hermitian_mul(const HermitianSeries &a, const HermitianSeries &b) {
  a.check_compatible(b);
  const std::uint32_t cap = std::min(a.max_degree(), b.max_degree());
  HermitianSeries out(a.num_vars(), cap);
  for (const auto &[ka, ca] : a.entries()) {
    if (ka.alpha.degree() > cap || ka.beta.degree() > cap)
      continue;
    for (const auto &[kb, cb] : b.entries()) {
      if (ka.alpha.degree() + kb.alpha.degree() > cap || ka.beta.degree() + kb.beta.degree() > cap)
        continue;
      out.accumulate({ka.alpha + kb.alpha, ka.beta + kb.beta}, ca * cb);
    }
  }
  return out;
}

HermitianSeries hermitian_pow(const HermitianSeries &a, std::uint32_t k) {
  if (k == 0)
    return HermitianSeries::constant(a.num_vars(), a.max_degree(), 1);
  // Square-and-multiply; the product is commutative.
  HermitianSeries result = HermitianSeries::constant(a.num_vars(), a.max_degree(), 1);
  HermitianSeries base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : hermitian_mul(result, base);
      first = false;
    }
    k >>= 1u;
    if (k > 0)
      base = hermitian_mul(base, base);
  }
  return result;
}

HermitianSeries log_truncate(const HermitianSeries &h, std::uint32_t degree) {
  const Scalar &c0 = h.constant_term();
  if (c0.is_exact() ? !(c0 == Scalar(1)) : c0.to_complex() != std::complex<double>(1.0))
    throw DomainError("log_truncate: constant term must be exactly 1");
  HermitianSeries u = h.with_max_degree(degree);
  u -= HermitianSeries::constant(h.num_vars(), degree, 1);
  HermitianSeries result(h.num_vars(), degree);
  HermitianSeries power = u;
  // Every entry of u has |a|+|b| >= 1, so u^k vanishes for k > 2*degree.
  for (std::uint32_t k = 1; k <= 2 * degree && !power.is_zero(); ++k) {
    HermitianSeries term = power;
    term *= Rational((k % 2 == 1) ? 1 : -1, k);
    result += term;
    power = hermitian_mul(power, u);
  }
  return result;
}

HermitianSeries exp_truncate(const HermitianSeries &h, std::uint32_t degree) {
  if (!h.constant_term().is_zero())
    throw DomainError("exp_truncate: constant term must be zero");
  HermitianSeries u = h.with_max_degree(degree);
  HermitianSeries result = HermitianSeries::constant(h.num_vars(), degree, 1);
  HermitianSeries term = HermitianSeries::constant(h.num_vars(), degree, 1);
  for (std::uint32_t k = 1; k <= 2 * degree; ++k) {
    term = hermitian_mul(term, u);
    if (term.is_zero())
      break;
    term *= Rational(1, k);
    result += term;
  }
  return result;
}

} // namespace fsrel
