#pragma once

// Hessenberg natural sum and product, and closure-point predicates.

#include <optional>
#include <span>

#include "transfinita/ordinal.hpp"

namespace transfinita {

/// Coefficientwise merge of two Cantor normal forms. Commutative.
Ordinal nat_add(const Ordinal& a, const Ordinal& b);
/// Distributive product with natural exponent sums. Commutative.
Ordinal nat_mul(const Ordinal& a, const Ordinal& b);
/// Fold of nat_add over the first n entries (missing entries are 0).
Ordinal nat_sum(std::span<const Ordinal> seq, std::size_t n);
/// The x with nat_add(b, x) == a, if one exists (every coefficient of b fits under a's).
std::optional<Ordinal> nat_sub(const Ordinal& a, const Ordinal& b);

enum class ClosureKind {
  GammaAdd,    // beta +. alpha = alpha for every beta < alpha
  DeltaMul,    // beta *. alpha = alpha for every 0 < beta < alpha
  EpsilonExp,  // beta ^ alpha = alpha for every 1 < beta < alpha
  NatAdd,      // beta + gamma < alpha for all beta, gamma < alpha
  NatMul,      // beta x gamma < alpha for all beta, gamma < alpha
};

/// Structural decision of closure membership.
///
/// Small cases, fixed by evaluating each defining formula over every smaller
/// ordinal (the absorption kinds skip the bases that can never be absorbed:
/// 0 for DeltaMul, 0 and 1 for EpsilonExp):
///
///     kind        0  1  2  transfinite members below epsilon_0
///     GammaAdd    y  y  n  omega^z
///     NatAdd      y  y  n  omega^z
///     DeltaMul    y  y  y  omega^(omega^z)
///     NatMul      y  y  y  omega^(omega^z)
///     EpsilonExp  y  y  y  omega only
bool is_closure_number(ClosureKind kind, const Ordinal& a);

/// Least closure number of the given kind strictly above a.
/// Throws Undefined if a is not itself one, NotRepresentable past epsilon_0.
Ordinal next_closure(ClosureKind kind, const Ordinal& a);

}  // namespace transfinita
