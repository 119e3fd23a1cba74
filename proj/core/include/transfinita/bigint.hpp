#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace transfinita {

/// Arbitrary-precision signed integer used for every coefficient.
using BigInt = mpz_class;

/// Number of bits in |v|; zero for v = 0.
inline std::uint64_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : static_cast<std::uint64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace transfinita
