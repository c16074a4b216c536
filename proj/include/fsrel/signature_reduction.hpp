#pragma once

#include <cstddef>

#include "fsrel/germ.hpp"
#include "fsrel/hermitian_series.hpp"

namespace fsrel {

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t rank() const { return positive + negative; }
  friend bool operator==(const Inertia &, const Inertia &) = default;
};

// Signature of the Hermitian coefficient matrix of `h` on its monomial
// support. `h` must be exact, with zero constant term and no purely
// holomorphic or antiholomorphic entries (NormalizationError otherwise).
Inertia inertia(const HermitianSeries &h);

// Linearly independent germs g_i and nonzero rational weights w_i, positive
// weights first, with norm_square_system == h and sign pattern equal to
// inertia(h).
SignedGermSystem signature_reduce(const HermitianSeries &h);

} // namespace fsrel
