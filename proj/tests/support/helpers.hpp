#pragma once

// Shared helpers for the test suites: literal construction from the
// expression language and an evaluation homomorphism used as an
// independent ring oracle.

#include <cstdint>
#include <string_view>

#include "transfinita/eval.hpp"
#include "transfinita/format.hpp"
#include "transfinita/random.hpp"

namespace tt {

using namespace transfinita;

Value val(std::string_view text);
Ordinal ord(std::string_view text);
SurInteger si(std::string_view text);
SurRational q(std::string_view text);
GaussianSurRational cx(std::string_view text);

/// Image of a under the ring map sending omega^(omega^mu) to an arbitrary
/// residue chosen per mu and per seed, modulo a 61-bit prime. Agreement of
/// images at several seeds is strong evidence of equality in the ring.
std::uint64_t image(const SurInteger& a, std::uint64_t seed);
/// Equality of ring expressions checked through images at several seeds.
bool same_image(const SurInteger& a, const SurInteger& b);

}  // namespace tt
