#include "fsrel/space_form.hpp"

#include <cctype>
#include <vector>

#include "fsrel/error.hpp"

namespace fsrel {

std::string_view to_string(FormKind kind) {
  switch (kind) {
  case FormKind::flat:
    return "flat";
  case FormKind::projective:
    return "projective";
  case FormKind::hyperbolic:
    return "hyperbolic";
  }
  return "?";
}

SpaceForm SpaceForm::flat(std::uint32_t dim, std::uint32_t sig_index) {
  SpaceForm f{FormKind::flat, dim, sig_index, Rational(0), {}};
  f.validate();
  return f;
}

SpaceForm SpaceForm::projective(std::uint32_t dim, std::uint32_t sig_index, Rational mag, std::string unit) {
  SpaceForm f{FormKind::projective, dim, sig_index, std::move(mag), std::move(unit)};
  f.curvature_mag.canonicalize();
  f.validate();
  return f;
}

SpaceForm SpaceForm::hyperbolic(std::uint32_t dim, std::uint32_t sig_index, Rational mag, std::string unit) {
  SpaceForm f{FormKind::hyperbolic, dim, sig_index, std::move(mag), std::move(unit)};
  f.curvature_mag.canonicalize();
  f.validate();
  return f;
}

SpaceForm SpaceForm::fubini_study(std::uint32_t dim, const Rational &b, std::string unit) {
  if (sgn(b) == 0)
    throw ValidationError("F(n, b) needs a nonzero curvature");
  if (sgn(b) > 0)
    return projective(dim, 0, b, std::move(unit));
  return hyperbolic(dim, 0, Rational(-b), std::move(unit));
}

void SpaceForm::validate() const {
  if (dim < 1)
    throw ValidationError("space form dimension must be positive");
  if (sig_index > dim)
    throw ValidationError("sig_index " + std::to_string(sig_index) + " exceeds dimension " + std::to_string(dim));
  if (kind == FormKind::flat) {
    if (sgn(curvature_mag) != 0 || !curvature_unit.empty())
      throw ValidationError("flat space forms carry no curvature");
    return;
  }
  if (sgn(curvature_mag) <= 0)
    throw ValidationError("curvature magnitude must be positive");
  for (char c : curvature_unit)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw ValidationError("curvature unit '" + curvature_unit + "' must be alphanumeric");
}

Rational SpaceForm::curvature() const {
  switch (kind) {
  case FormKind::flat:
    return 0;
  case FormKind::projective:
    return curvature_mag;
  case FormKind::hyperbolic:
    return -curvature_mag;
  }
  return 0;
}

int SpaceForm::curvature_sign() const { return kind == FormKind::flat ? 0 : (kind == FormKind::projective ? 1 : -1); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::uint32_t parse_count(std::string_view token, const char *what) {
  token = trim(token);
  if (token.empty() || token.size() > 9)
    throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'");
  std::uint32_t v = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'");
    v = v * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return v;
}

std::string parse_unit(std::string_view token) {
  token = trim(token);
  if (token.empty())
    throw ParseError("empty curvature unit");
  if (!(std::isalpha(static_cast<unsigned char>(token.front())) || token.front() == '_'))
    throw ParseError("bad curvature unit '" + std::string(token) + "'");
  for (char c : token)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw ParseError("bad curvature unit '" + std::string(token) + "'");
  return std::string(token);
}

template <typename F> SpaceForm rethrow_as_parse(std::string_view text, F &&make) {
  try {
    return make();
  } catch (const ParseError &) {
    throw;
  } catch (const ValidationError &e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

} // namespace

SpaceForm parse_form(std::string_view text) {
  std::string_view t = trim(text);
  auto open = t.find('(');
  if (open == std::string_view::npos || t.back() != ')')
    throw ParseError("expected NAME(args) in '" + std::string(text) + "'");
  std::string_view name = trim(t.substr(0, open));
  std::string_view body = t.substr(open + 1, t.size() - open - 2);
  std::vector<std::string_view> args;
  for (std::size_t start = 0;;) {
    auto comma = body.find(',', start);
    args.push_back(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw ParseError(std::string(name) + " takes " + std::to_string(lo) +
                       (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments, got " +
                       std::to_string(args.size()));
  };

  if (name == "FS") {
    arity(2, 3);
    const std::uint32_t n = parse_count(args[0], "dimension");
    const Rational b = parse_rational(args[1]);
    std::string unit = args.size() == 3 ? parse_unit(args[2]) : std::string{};
    return rethrow_as_parse(text, [&] { return SpaceForm::fubini_study(n, b, unit); });
  }
  if (name == "CE") {
    arity(2, 2);
    const std::uint32_t n = parse_count(args[0], "dimension");
    const std::uint32_t s = parse_count(args[1], "signature index");
    return rethrow_as_parse(text, [&] { return SpaceForm::flat(n, s); });
  }
  if (name == "CP" || name == "CH") {
    arity(3, 4);
    const std::uint32_t n = parse_count(args[0], "dimension");
    const std::uint32_t s = parse_count(args[1], "signature index");
    Rational b = parse_rational(args[2]);
    std::string unit = args.size() == 4 ? parse_unit(args[3]) : std::string{};
    if (name == "CP") {
      if (sgn(b) <= 0)
        throw ParseError("CP curvature must be positive, got '" + std::string(trim(args[2])) + "'");
      return rethrow_as_parse(text, [&] { return SpaceForm::projective(n, s, b, unit); });
    }
    if (sgn(b) == 0)
      throw ParseError("CH curvature must be nonzero");
    return rethrow_as_parse(text, [&] { return SpaceForm::hyperbolic(n, s, abs(b), unit); });
  }
  throw ParseError("unknown space form '" + std::string(name) + "'");
}

std::string render(const SpaceForm &form) {
  const std::string unit = form.curvature_unit.empty() ? "" : ", " + form.curvature_unit;
  const std::string n = std::to_string(form.dim);
  const std::string s = std::to_string(form.sig_index);
  switch (form.kind) {
  case FormKind::flat:
    return "CE(" + n + ", " + s + ")";
  case FormKind::projective:
  case FormKind::hyperbolic: {
    Rational b = form.curvature();
    b.canonicalize();
    const std::string bs = b.get_den() == 1 ? b.get_num().get_str() : to_string(b);
    if (form.is_definite())
      return "FS(" + n + ", " + bs + unit + ")";
    return std::string(form.kind == FormKind::projective ? "CP(" : "CH(") + n + ", " + s + ", " + bs + unit + ")";
  }
  }
  return {};
}

} // namespace fsrel
