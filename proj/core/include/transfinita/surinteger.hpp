#pragma once

// The discretely ordered ring of surintegers: Cantor normal forms with
// signed coefficients, multiplied with natural exponent sums.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "transfinita/bigint.hpp"
#include "transfinita/ordinal.hpp"

namespace transfinita {

/// sum_i omega^e_i * c_i with e_0 > e_1 > ... and every c_i != 0.
/// The empty term list is zero.
class SurInteger {
 public:
  struct Term {
    Ordinal exponent;
    BigInt coefficient;
    friend bool operator==(const Term& a, const Term& b) {
      return a.coefficient == b.coefficient && a.exponent == b.exponent;
    }
  };

  SurInteger() = default;
  SurInteger(const Ordinal& a);  // NOLINT(google-explicit-constructor)

  static SurInteger from_integer(const BigInt& n);
  /// Validating constructor; throws Error(InvalidArgument) on a non-normal term list.
  static SurInteger from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  std::optional<BigInt> as_integer() const;
  /// The ordinal this equals, if every coefficient is positive.
  std::optional<Ordinal> as_ordinal() const;
  const Term& leading() const;
  /// -1, 0 or 1 by the leading coefficient.
  int sign() const noexcept;

  friend std::strong_ordering operator<=>(const SurInteger& a, const SurInteger& b);
  friend bool operator==(const SurInteger& a, const SurInteger& b) = default;

 private:
  friend class SurIntegerBuilder;
  std::vector<Term> terms_;
};

/// Appends terms in strictly decreasing exponent order, dropping zero coefficients.
class SurIntegerBuilder {
 public:
  void push(Ordinal exponent, BigInt coefficient);
  SurInteger build() &&;

 private:
  std::vector<SurInteger::Term> terms_;
};

/// Negative and positive parts; the two share no exponent.
struct CoordinateForm {
  Ordinal negative;
  Ordinal positive;
  friend bool operator==(const CoordinateForm&, const CoordinateForm&) = default;
};

CoordinateForm to_coordinates(const SurInteger& a);
/// Balances shared exponents: (omega, omega*3) becomes omega*2.
SurInteger from_coordinates(const CoordinateForm& c);

SurInteger si_add(const SurInteger& a, const SurInteger& b);
SurInteger neg(const SurInteger& a);
SurInteger si_sub(const SurInteger& a, const SurInteger& b);
SurInteger si_mul(const SurInteger& a, const SurInteger& b);
/// a^k by repeated si_mul.
SurInteger si_pow(const SurInteger& a, std::uint64_t k);
SurInteger si_abs(const SurInteger& a);
std::strong_ordering si_compare(const SurInteger& a, const SurInteger& b);

/// Whether lambda may index a truncation: omega or a transfinite natural-product closure number.
bool is_valid_lambda(const Ordinal& lambda);
/// Both coordinates below lambda. Throws InvalidLambda for an unusable lambda.
bool in_lambda_ring(const SurInteger& a, const Ordinal& lambda);

struct CyclicForm {
  int sign;  // +1 or -1
  BigInt count;
  friend bool operator==(const CyclicForm&, const CyclicForm&) = default;
};
/// a as a signed finite sum of ones; nullopt (not cyclic) for transfinite a.
std::optional<CyclicForm> cyclic_decompose(const SurInteger& a);

/// gcd of all coefficients (0 for zero).
BigInt content(const SurInteger& a);
/// Every coefficient divided exactly by d.
SurInteger divide_content(const SurInteger& a, const BigInt& d);

}  // namespace transfinita
