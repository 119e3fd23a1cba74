#pragma once

// The transfinite hyperoperation sequence on ordinals below epsilon_0.

#include <cstdint>

#include "transfinita/limits.hpp"
#include "transfinita/ordinal.hpp"

namespace transfinita {

/// Index of a hyperoperation. Finite indices and omega are evaluable.
struct HyperIndex {
  Ordinal index;

  HyperIndex(Ordinal i) : index(std::move(i)) {}  // NOLINT(google-explicit-constructor)
  HyperIndex(std::uint64_t n) : index(Ordinal::from_natural(n)) {}  // NOLINT(google-explicit-constructor)
};

/// H_idx(a, b).
///
/// Index 0 is the successor of a, 1..3 are rec_add, rec_mul, rec_pow.
/// Index n >= 4 unfolds H_n(a, b+1) = H_{n-1}(a, H_n(a, b)) and takes limits
/// at limit b along the canonical cofinal sequence. Index omega is the
/// supremum over finite indices and needs finite arguments.
///
/// Throws NotRepresentable when the value reaches epsilon_0, ResourceExceeded
/// past the limits, Unsupported for other limit indices or when a supremum
/// does not settle into a recognized shape.
Ordinal hyperop(const HyperIndex& idx, const Ordinal& a, const Ordinal& b, const EvalLimits& limits = {});

/// H_4(a, b).
Ordinal tetration(const Ordinal& a, const Ordinal& b, const EvalLimits& limits = {});

/// Whether a is closed under H_n: H_n(x, y) < a for all x, y < a.
/// Throws Undefined for n == 0.
bool is_hyper_number(std::uint64_t n, const Ordinal& a, const EvalLimits& limits = {});

/// Least H_n-number above a, i.e. H_{n+1}(a, omega) for transfinite a.
/// Throws Undefined unless a is an H_n-number.
Ordinal next_hyper_number(std::uint64_t n, const Ordinal& a, const EvalLimits& limits = {});

}  // namespace transfinita
