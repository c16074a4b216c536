#include "fsrel/scalar.hpp"

#include <cctype>
#include <ostream>

#include "fsrel/error.hpp"

namespace fsrel {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  std::string_view num = trim(t.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(t.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  if (num.front() == '+')
    num.remove_prefix(1);
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
  if (o.is_zero())
    throw DomainError("division by zero");
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

const GaussianRational &Scalar::exact_value() const {
  if (auto p = std::get_if<GaussianRational>(&value_))
    return *p;
  throw ModeError("exact value requested from an approximate scalar");
}

std::complex<double> Scalar::to_complex() const {
  if (auto p = std::get_if<GaussianRational>(&value_))
    return p->to_complex();
  return std::get<std::complex<double>>(value_);
}

bool Scalar::is_zero() const {
  if (auto p = std::get_if<GaussianRational>(&value_))
    return p->is_zero();
  return std::get<std::complex<double>>(value_) == std::complex<double>{};
}

bool Scalar::is_real() const {
  if (auto p = std::get_if<GaussianRational>(&value_))
    return p->is_real();
  return std::get<std::complex<double>>(value_).imag() == 0.0;
}

Scalar Scalar::conj() const {
  if (auto p = std::get_if<GaussianRational>(&value_))
    return Scalar(p->conj());
  return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

Scalar Scalar::norm() const {
  if (auto p = std::get_if<GaussianRational>(&value_))
    return Scalar(p->norm());
  return Scalar(std::complex<double>(std::norm(std::get<std::complex<double>>(value_)), 0.0));
}

Rational Scalar::real_rational() const { return exact_value().re(); }

Scalar Scalar::operator-() const {
  if (auto p = std::get_if<GaussianRational>(&value_))
    return Scalar(-*p);
  return Scalar(-std::get<std::complex<double>>(value_));
}

namespace {

template <typename ExactOp, typename ApproxOp>
void combine(std::variant<GaussianRational, std::complex<double>> &lhs,
             const std::variant<GaussianRational, std::complex<double>> &rhs, ExactOp exact_op, ApproxOp approx_op) {
  auto *a = std::get_if<GaussianRational>(&lhs);
  auto *b = std::get_if<GaussianRational>(&rhs);
  if (a && b) {
    exact_op(*a, *b);
    return;
  }
  auto as_complex = [](const auto &v) {
    if (auto p = std::get_if<GaussianRational>(&v))
      return p->to_complex();
    return std::get<std::complex<double>>(v);
  };
  std::complex<double> x = as_complex(lhs);
  approx_op(x, as_complex(rhs));
  lhs = x;
}

} // namespace

Scalar &Scalar::operator+=(const Scalar &o) {
  combine(value_, o.value_, [](auto &a, const auto &b) { a += b; }, [](auto &a, auto b) { a += b; });
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  combine(value_, o.value_, [](auto &a, const auto &b) { a -= b; }, [](auto &a, auto b) { a -= b; });
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  combine(value_, o.value_, [](auto &a, const auto &b) { a *= b; }, [](auto &a, auto b) { a *= b; });
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw DomainError("division by zero");
  combine(value_, o.value_, [](auto &a, const auto &b) { a /= b; }, [](auto &a, auto b) { a /= b; });
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) {
  if (s.is_exact()) {
    const auto &g = s.exact_value();
    os << to_string(g.re());
    if (!g.is_real())
      os << (sgn(g.im()) < 0 ? " - " : " + ") << to_string(abs(g.im())) << "i";
  } else {
    auto c = s.to_complex();
    os << c.real();
    if (c.imag() != 0.0)
      os << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  }
  return os;
}

} // namespace fsrel
