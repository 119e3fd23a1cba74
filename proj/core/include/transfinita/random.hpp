#pragma once

// Seeded generators of valid values, for property tests and benchmarks.

#include <cstdint>
#include <random>

#include "transfinita/gaussian.hpp"
#include "transfinita/ordinal.hpp"
#include "transfinita/surinteger.hpp"
#include "transfinita/surrational.hpp"

namespace transfinita {

struct GenBudget {
  /// Exponent nesting depth; 0 yields naturals.
  unsigned depth = 2;
  /// Most terms per normal form.
  unsigned terms = 3;
  /// Largest absolute coefficient.
  std::uint64_t max_coeff = 9;
};

using Rng = std::mt19937_64;

Ordinal random_ordinal(Rng& rng, const GenBudget& budget = {});
/// Nonzero signed coefficients over random_ordinal exponents.
SurInteger random_surinteger(Rng& rng, const GenBudget& budget = {});
/// Random numerator over a random positive denominator.
SurRational random_surrational(Rng& rng, const GenBudget& budget = {});
GaussianSurRational random_gaussian(Rng& rng, const GenBudget& budget = {});

}  // namespace transfinita
