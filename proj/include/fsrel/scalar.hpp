#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace fsrel {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text or a zero
// denominator. The result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);

// a + b*i with a, b rational.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0);

  const Rational &re() const { return re_; }
  const Rational &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  GaussianRational &operator+=(const GaussianRational &o);
  GaussianRational &operator-=(const GaussianRational &o);
  GaussianRational &operator*=(const GaussianRational &o);
  GaussianRational &operator/=(const GaussianRational &o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
  Rational re_;
  Rational im_;
};

// Coefficient field for every series. Exact mode is a Gaussian rational;
// approximate mode is a pair of doubles. Mixed arithmetic yields approximate.
class Scalar {
public:
  Scalar() : value_(GaussianRational{}) {}
  Scalar(GaussianRational v) : value_(std::move(v)) {}
  Scalar(const Rational &re) : value_(GaussianRational(re)) {}
  Scalar(long v) : value_(GaussianRational(Rational(v))) {}
  Scalar(int v) : value_(GaussianRational(Rational(v))) {}
  explicit Scalar(std::complex<double> v) : value_(v) {}

  static Scalar exact(const Rational &re, const Rational &im = 0) { return GaussianRational(re, im); }
  static Scalar approx(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }

  bool is_exact() const { return std::holds_alternative<GaussianRational>(value_); }
  const GaussianRational &exact_value() const; // throws ModeError when approximate
  std::complex<double> to_complex() const;
  Scalar to_approximate() const { return Scalar(to_complex()); }

  bool is_zero() const;
  bool is_real() const;
  Scalar conj() const;
  // |x|^2, real-valued, same mode.
  Scalar norm() const;
  // Real part as a rational; ModeError when approximate.
  Rational real_rational() const;

  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  Scalar operator-() const;

  // Structural equality: same mode and identical value.
  friend bool operator==(const Scalar &a, const Scalar &b) { return a.value_ == b.value_; }

  friend std::ostream &operator<<(std::ostream &os, const Scalar &s);

private:
  std::variant<GaussianRational, std::complex<double>> value_;
};

} // namespace fsrel
