#include "fsrel/calabi_expansion.hpp"

#include "fsrel/error.hpp"

namespace fsrel {

namespace {

unsigned long to_ulong(const Integer &v, const char *what) {
  if (sgn(v) < 0 || !v.fits_ulong_p())
    throw DomainError(std::string(what) + " out of range");
  return v.get_ui();
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational rational_pow(const Rational &x, unsigned long e) {
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

} // namespace

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer binomial(const Integer &n, const Integer &k) {
  if (sgn(k) < 0 || k > n)
    return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), to_ulong(k, "binomial lower index"));
  return out;
}

DiagonalExpansion expand_fubini_power(std::size_t n, const Rational &b, std::uint32_t r) {
  if (n < 1 || r < 1)
    throw DomainError("expand_fubini_power needs n >= 1 and r >= 1");
  if (sgn(b) <= 0)
    throw DomainError("expand_fubini_power needs b > 0");
  DiagonalExpansion out{n, b, r, {}};
  const Integer r_fact = factorial(r);
  for (const auto &alpha : enumerate_indices(n, 1, r)) {
    Integer denom = factorial(r - alpha.degree());
    for (std::size_t i = 0; i < n; ++i)
      denom *= factorial(alpha[i]);
    Rational c = rational_pow(b, alpha.degree()) * Rational(r_fact / denom);
    c.canonicalize();
    out.terms.emplace_back(alpha, std::move(c));
  }
  return out;
}

HermitianSeries DiagonalExpansion::to_hermitian_series() const {
  HermitianSeries h = HermitianSeries::constant(num_vars, power, 1);
  for (const auto &[alpha, c] : terms)
    h.add_term(alpha, alpha, Scalar(c));
  return h;
}

Integer embedding_dimension(const Integer &n, const Integer &r) {
  if (n < 1 || r < 1)
    throw DomainError("embedding_dimension needs n >= 1 and r >= 1");
  return binomial(Integer(r + n), r) - 1;
}

RemarkWitness remark_witness(std::uint32_t q, const Rational &a, std::uint32_t m) {
  if (q < 1 || m < 1 || sgn(a) <= 0)
    throw DomainError("remark_witness needs q >= 1, m >= 1 and a > 0");
  RemarkWitness w{{}, m};
  const Rational am = a * m;
  const Rational qa = a * q;
  for (std::uint32_t j = 1; j <= q; ++j) {
    Rational wj = rational_pow(am, j) * Rational(binomial(q, j)) / qa;
    wj.canonicalize();
    w.host_weights.push_back(std::move(wj));
  }
  return w;
}

} // namespace fsrel
