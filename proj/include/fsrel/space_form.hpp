#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fsrel/scalar.hpp"

namespace fsrel {

enum class FormKind { flat, projective, hyperbolic };

std::string_view to_string(FormKind kind);

// A complex space form: flat C^{N,s}, projective CP_s^N(b) with b > 0, or
// hyperbolic CH_s^N(b) with b < 0. The curvature is curvature_mag times an
// opaque unit; two curvatures are commensurable iff their unit tags match.
// The empty tag is the default unit.
struct SpaceForm {
  FormKind kind = FormKind::flat;
  std::uint32_t dim = 1;
  std::uint32_t sig_index = 0;
  Rational curvature_mag; // zero for flat
  std::string curvature_unit;

  static SpaceForm flat(std::uint32_t dim, std::uint32_t sig_index);
  static SpaceForm projective(std::uint32_t dim, std::uint32_t sig_index, Rational mag, std::string unit = {});
  static SpaceForm hyperbolic(std::uint32_t dim, std::uint32_t sig_index, Rational mag, std::string unit = {});
  // F(n, b): projective for b > 0, hyperbolic for b < 0, definite.
  static SpaceForm fubini_study(std::uint32_t dim, const Rational &b, std::string unit = {});

  // Throws ValidationError when an invariant is violated.
  void validate() const;

  bool is_flat() const { return kind == FormKind::flat; }
  bool is_definite() const { return sig_index == 0; }
  // Signed curvature in the form's unit; zero for flat.
  Rational curvature() const;
  int curvature_sign() const;

  friend bool operator==(const SpaceForm &, const SpaceForm &) = default;
};

// Grammar: FS(n, p/q[, unit]) | CE(N, s) | CP(N, s, p/q[, unit]) |
// CH(N, s, p/q[, unit]). CH accepts the magnitude or the negative
// curvature. Throws ParseError naming the offending token.
SpaceForm parse_form(std::string_view text);

// Canonical text; definite non-flat forms render as FS(...).
std::string render(const SpaceForm &form);

} // namespace fsrel
