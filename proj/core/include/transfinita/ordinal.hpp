#pragma once

// Ordinals below epsilon_0 in iterated Cantor normal form, and their
// recursive (non-commutative) arithmetic.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "transfinita/bigint.hpp"
#include "transfinita/limits.hpp"

namespace transfinita {

/// An ordinal below epsilon_0, stored as its Cantor normal form
///
///     omega^e_0 * c_0 + omega^e_1 * c_1 + ... + omega^e_{m-1} * c_{m-1}
///
/// with e_0 > e_1 > ... (each itself an Ordinal) and every c_i >= 1.
/// The empty term list is 0. Values are immutable once built; every
/// public constructor validates the normal form.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;

  static Ordinal from_natural(const BigInt& n);
  static Ordinal from_natural(std::uint64_t n) { return from_natural(BigInt(static_cast<unsigned long>(n))); }
  static Ordinal omega();
  /// omega^exponent * coefficient; coefficient must be >= 1.
  static Ordinal omega_power(Ordinal exponent, const BigInt& coefficient = 1);
  /// Validating constructor; throws Error(InvalidArgument) on a non-normal term list.
  static Ordinal from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  /// The natural number this ordinal equals, if finite.
  std::optional<BigInt> as_natural() const;

  const Term& leading() const;
  const Ordinal& leading_exponent() const;
  /// Exponent-nesting depth: 0 for finite values, 1 + max over exponents otherwise.
  std::size_t height() const noexcept;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  struct Trusted {};
  Ordinal(std::vector<Term> terms, Trusted) : terms_(std::move(terms)) {}

  friend class OrdinalBuilder;

  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  BigInt coefficient;
};

bool operator==(const Ordinal::Term& a, const Ordinal::Term& b);

/// Appends terms in strictly decreasing exponent order without re-validating
/// the whole list; used by the arithmetic kernels.
class OrdinalBuilder {
 public:
  void push(Ordinal exponent, BigInt coefficient);
  void push(const Ordinal::Term& term) { push(term.exponent, term.coefficient); }
  /// Adds the coefficient onto the last term if the exponent matches, else pushes.
  void push_merge(Ordinal exponent, BigInt coefficient);
  Ordinal build() &&;

 private:
  std::vector<Ordinal::Term> terms_;
};

enum class OrdinalClass { Zero, Successor, Limit };

/// Deep check of every normal-form invariant.
bool is_normal(const Ordinal& a);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
OrdinalClass classify(const Ordinal& a);
Ordinal successor(const Ordinal& a);
/// Largest of a finite sequence (zero for the empty one).
Ordinal max_of(std::span<const Ordinal> values);

/// Recursive (dotted) addition. Absorbs a's terms below b's leading exponent.
Ordinal rec_add(const Ordinal& a, const Ordinal& b);
/// The unique g with rec_add(a, g) == b. Throws Undefined unless a < b.
Ordinal rec_sub_left(const Ordinal& a, const Ordinal& b);
/// Recursive (dotted) multiplication.
Ordinal rec_mul(const Ordinal& a, const Ordinal& b);
/// Recursive exponentiation; finite results above limits.max_bits raise ResourceExceeded.
Ordinal rec_pow(const Ordinal& a, const Ordinal& b, const EvalLimits& limits = {});
/// Left fold of rec_add over the first n entries (missing entries are 0).
Ordinal rec_sum(std::span<const Ordinal> seq, std::size_t n);

/// Left division: a = divisor *. quotient +. remainder, remainder < divisor.
struct OrdinalDivision {
  Ordinal quotient;
  Ordinal remainder;
};
OrdinalDivision rec_divmod(const Ordinal& a, const Ordinal& divisor);

/// k-th element (k >= 1) of the canonical cofinal sequence of a limit ordinal:
/// the last term omega^e*m becomes omega^e*(m-1) + omega^(e-1)*k for successor e,
/// or omega^e*(m-1) + omega^(e[k]) for limit e.
Ordinal cofinal_element(const Ordinal& limit, std::uint64_t k);

/// A base-beta expansion  a = sum_i  beta^exponent_i *. digit_i  with
/// strictly decreasing exponents and 0 < digit_i < beta.
struct BaseExpansion {
  struct Digit {
    Ordinal exponent;
    Ordinal coefficient;
    friend bool operator==(const Digit&, const Digit&) = default;
  };
  Ordinal base;
  std::vector<Digit> digits;
};

/// Throws Undefined if base <= 1 or a == 0.
BaseExpansion base_expand(const Ordinal& a, const Ordinal& base, const EvalLimits& limits = {});
Ordinal recompose(const BaseExpansion& expansion, const EvalLimits& limits = {});

}  // namespace transfinita
