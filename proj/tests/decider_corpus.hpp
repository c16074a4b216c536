#pragma once

#include <vector>

#include "fsrel/space_form.hpp"
#include "test_support.hpp"

namespace fsrel::testing {

inline SpaceForm random_form(Rng &rng) {
  const long pick = uniform_int(rng, 0, 9);
  const auto dim = static_cast<std::uint32_t>(uniform_int(rng, 1, 4));
  Rational mag(uniform_int(rng, 1, 6), uniform_int(rng, 1, 3));
  mag.canonicalize();
  std::string unit = uniform_int(rng, 0, 7) == 0 ? "u" : "";
  if (pick == 0)
    return SpaceForm::flat(dim, static_cast<std::uint32_t>(uniform_int(rng, 0, dim)));
  if (pick == 1)
    return SpaceForm::projective(dim, static_cast<std::uint32_t>(uniform_int(rng, 1, dim)), mag, unit);
  if (pick == 2)
    return SpaceForm::fubini_study(dim, -mag, unit);
  return SpaceForm::fubini_study(dim, mag, unit);
}

// Random pairs, biased towards positive definite forms with related
// curvatures so that every rule fires somewhere in the corpus.
inline std::vector<std::pair<SpaceForm, SpaceForm>> decider_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<std::pair<SpaceForm, SpaceForm>> out;
  while (out.size() < count) {
    SpaceForm f1 = random_form(rng);
    SpaceForm f2 = random_form(rng);
    if (uniform_int(rng, 0, 2) == 0 && !f1.is_flat() && !f2.is_flat()) {
      f2.curvature_mag = f1.curvature_mag * Rational(uniform_int(rng, 1, 4), uniform_int(rng, 1, 3));
      f2.curvature_mag.canonicalize();
      f2.curvature_unit = f1.curvature_unit;
    }
    out.emplace_back(f1, f2);
  }
  return out;
}

inline SpaceForm scaled(SpaceForm f, const Rational &lambda) {
  f.curvature_mag *= lambda;
  return f;
}

} // namespace fsrel::testing
