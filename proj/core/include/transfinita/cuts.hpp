#pragma once

// Decidable cut predicates over a truncated surrational field.

#include <optional>
#include <variant>

#include "transfinita/surrational.hpp"

namespace transfinita {

/// Left set { p : p < q }.
struct RationalCut {
  SurRational q;
};

/// Left set { p : p <= 0 or p^n < q } for q > 0, n >= 2.
struct RootCut {
  SurRational q;
  unsigned n = 2;
};

struct CutSpec {
  std::variant<RationalCut, RootCut> shape;
  Ordinal lambda;
};

/// Validating constructors. Throw InvalidArgument for q <= 0 or n < 2,
/// InvalidLambda for an unusable lambda.
CutSpec make_rational_cut(SurRational q, Ordinal lambda);
CutSpec make_root_cut(SurRational q, unsigned n, Ordinal lambda);

/// Membership in the left set. Throws OutOfField unless p lies in the lambda-field.
bool cut_member(const CutSpec& cut, const SurRational& p);

enum class CutClass { Surrational, Irrational };

struct RootClassification {
  CutClass kind;
  /// The p with p^n == q, for Surrational.
  std::optional<SurRational> witness;
};

/// Decides whether q is an exact n-th power in the lambda-field.
///
/// Numerator and denominator of the reduced radicand are tested for being
/// n-th powers by leading-term root extraction. A failure is conclusive only
/// when the radicand is provably reduced; otherwise this throws Inconclusive.
RootClassification classify_root_cut(const CutSpec& cut);

/// The r with r^n == a, if a is an n-th power of a surinteger.
std::optional<SurInteger> integer_root(const SurInteger& a, unsigned n);

}  // namespace transfinita
