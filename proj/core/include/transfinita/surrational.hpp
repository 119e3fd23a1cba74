#pragma once

// The ordered field of surrationals: fractions of surintegers with a
// positive denominator. Equality and order go through cross-multiplication,
// so no operation depends on the fraction being reduced.

#include <compare>
#include <optional>

#include "transfinita/surinteger.hpp"

namespace transfinita {

class SurRational {
 public:
  SurRational() : den_(SurInteger::from_integer(1)) {}
  SurRational(const SurInteger& n);  // NOLINT(google-explicit-constructor)
  SurRational(const Ordinal& n) : SurRational(SurInteger(n)) {}  // NOLINT(google-explicit-constructor)
  /// Moves any sign onto the numerator. Throws DivisionByZero if den is zero.
  SurRational(SurInteger num, SurInteger den);

  const SurInteger& num() const noexcept { return num_; }
  const SurInteger& den() const noexcept { return den_; }
  /// Set only by reduce, and only when num and den provably share no factor.
  bool reduced() const noexcept { return reduced_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }
  /// The surinteger this equals, if the denominator divides the numerator.
  std::optional<SurInteger> as_surinteger() const;

  /// Cross-multiplication equality.
  friend bool operator==(const SurRational& p, const SurRational& q);
  friend std::strong_ordering operator<=>(const SurRational& p, const SurRational& q);

 private:
  friend SurRational reduce(const SurRational& p);
  friend SurRational q_add(const SurRational& p, const SurRational& q);
  friend SurRational q_neg(const SurRational& p);
  friend SurRational q_mul(const SurRational& p, const SurRational& q);
  friend SurRational q_inv(const SurRational& p);

  SurInteger num_;
  SurInteger den_;
  bool reduced_ = false;
};

bool q_eq(const SurRational& p, const SurRational& q);
std::strong_ordering q_compare(const SurRational& p, const SurRational& q);
SurRational q_add(const SurRational& p, const SurRational& q);
SurRational q_neg(const SurRational& p);
SurRational q_sub(const SurRational& p, const SurRational& q);
SurRational q_mul(const SurRational& p, const SurRational& q);
/// Reciprocal; the reciprocal of zero is zero.
SurRational q_inv(const SurRational& p);
/// p / q. Throws DivisionByZero for q == 0.
SurRational q_div(const SurRational& p, const SurRational& q);
SurRational q_abs(const SurRational& p);

/// Cancels common factors of num and den, in order:
///   1. integer content;
///   2. the largest common monomial omega^m (m the pointwise minimum of the exponents'
///      normal-form coefficients);
///   3. the gcd in the polynomial ring over the variables omega^(omega^mu), by
///      recursive primitive remainder sequences under a work budget;
///   4. past that budget, a trial exact division in each direction.
/// The result compares equal to p; reduced() reports whether cancellation is provably complete.
SurRational reduce(const SurRational& p);

/// The c with si_mul(b, c) == a, found by leading-term long division; nullopt if none.
/// Throws DivisionByZero if b is zero.
std::optional<SurInteger> exact_divide(const SurInteger& a, const SurInteger& b);

/// Numerator and denominator of the reduced form both lie in the lambda-ring.
bool in_lambda_field(const SurRational& p, const Ordinal& lambda);

/// Least n <= bound with |q| <= n*|p|; nullopt when there is none.
/// Throws Undefined if p is zero.
std::optional<BigInt> archimedean_witness(const SurRational& p, const SurRational& q, const BigInt& bound);

/// (p + q) / 2. Throws Undefined unless p < q.
SurRational midpoint(const SurRational& p, const SurRational& q);

}  // namespace transfinita
