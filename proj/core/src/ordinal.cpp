#include "transfinita/ordinal.hpp"

#include <algorithm>
#include <utility>

#include "transfinita/error.hpp"

namespace transfinita {

namespace {

int cmp_big(const BigInt& a, const BigInt& b) { return cmp(a, b); }

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Predecessor of a successor ordinal.
Ordinal predecessor(const Ordinal& a) {
  OrdinalBuilder b;
  const auto t = a.terms();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) b.push(t[i]);
  b.push(Ordinal{}, t.back().coefficient - 1);
  return std::move(b).build();
}

Ordinal drop_leading(const Ordinal& a) {
  OrdinalBuilder b;
  for (std::size_t i = 1; i < a.size(); ++i) b.push(a.terms()[i]);
  return std::move(b).build();
}

void check_bits(const BigInt& v, const EvalLimits& limits, const char* op) {
  if (bit_length(v) > limits.max_bits) {
    throw Error(ErrorKind::ResourceExceeded, op, "finite value exceeds the magnitude cap");
  }
}

}  // namespace

// ---------------------------------------------------------------- Ordinal

Ordinal Ordinal::from_natural(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "Ordinal::from_natural", "negative natural");
  if (n == 0) return {};
  std::vector<Term> t;
  t.push_back(Term{Ordinal{}, n});
  return Ordinal(std::move(t), Trusted{});
}

Ordinal Ordinal::omega() { return omega_power(from_natural(1)); }

Ordinal Ordinal::omega_power(Ordinal exponent, const BigInt& coefficient) {
  if (coefficient < 1) {
    throw Error(ErrorKind::InvalidArgument, "Ordinal::omega_power", "coefficient must be positive");
  }
  std::vector<Term> t;
  t.push_back(Term{std::move(exponent), coefficient});
  return Ordinal(std::move(t), Trusted{});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  Ordinal out(std::move(terms), Trusted{});
  if (!is_normal(out)) {
    throw Error(ErrorKind::InvalidArgument, "Ordinal::from_terms", "term list is not in Cantor normal form");
  }
  return out;
}

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::optional<BigInt> Ordinal::as_natural() const {
  if (terms_.empty()) return BigInt(0);
  if (!is_finite()) return std::nullopt;
  return terms_[0].coefficient;
}

const Ordinal::Term& Ordinal::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::Undefined, "Ordinal::leading", "zero has no terms");
  return terms_.front();
}

const Ordinal& Ordinal::leading_exponent() const { return leading().exponent; }

std::size_t Ordinal::height() const noexcept {
  if (is_finite()) return 0;
  std::size_t h = 0;
  for (const auto& t : terms_) h = std::max(h, t.exponent.height());
  return h + 1;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (int c = cmp_big(x.coefficient, y.coefficient); c != 0) return to_ordering(c);
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i] == b.terms_[i])) return false;
  }
  return true;
}

bool operator==(const Ordinal::Term& a, const Ordinal::Term& b) {
  return a.coefficient == b.coefficient && a.exponent == b.exponent;
}

// --------------------------------------------------------- OrdinalBuilder

void OrdinalBuilder::push(Ordinal exponent, BigInt coefficient) {
  if (coefficient == 0) return;
  terms_.push_back(Ordinal::Term{std::move(exponent), std::move(coefficient)});
}

void OrdinalBuilder::push_merge(Ordinal exponent, BigInt coefficient) {
  if (coefficient == 0) return;
  if (!terms_.empty() && terms_.back().exponent == exponent) {
    terms_.back().coefficient += coefficient;
    return;
  }
  push(std::move(exponent), std::move(coefficient));
}

Ordinal OrdinalBuilder::build() && { return Ordinal(std::move(terms_), Ordinal::Trusted{}); }

// ------------------------------------------------------------- predicates

bool is_normal(const Ordinal& a) {
  const auto terms = a.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) return false;
    if (!is_normal(terms[i].exponent)) return false;
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) return false;
  }
  return true;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

OrdinalClass classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalClass::Zero;
  return a.terms().back().exponent.is_zero() ? OrdinalClass::Successor : OrdinalClass::Limit;
}

Ordinal successor(const Ordinal& a) { return rec_add(a, Ordinal::from_natural(1)); }

Ordinal max_of(std::span<const Ordinal> values) {
  Ordinal best;
  for (const auto& v : values) {
    if (best < v) best = v;
  }
  return best;
}

// ------------------------------------------------------------- arithmetic

Ordinal rec_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.leading();
  OrdinalBuilder out;
  BigInt carry = 0;
  for (const auto& t : a.terms()) {
    auto c = t.exponent <=> lead.exponent;
    if (c > 0) {
      out.push(t);
    } else {
      if (c == 0) carry = t.coefficient;
      break;
    }
  }
  out.push(lead.exponent, lead.coefficient + carry);
  for (std::size_t i = 1; i < b.size(); ++i) out.push(b.terms()[i]);
  return std::move(out).build();
}

Ordinal rec_sub_left(const Ordinal& a, const Ordinal& b) {
  if (!(a < b)) throw Error(ErrorKind::Undefined, "rec_sub_left", "requires a < b");
  const auto at = a.terms();
  const auto bt = b.terms();
  std::size_t i = 0;
  while (i < at.size() && at[i] == bt[i]) ++i;
  OrdinalBuilder out;
  std::size_t start = i;
  if (i < at.size() && at[i].exponent == bt[i].exponent) {
    // Same exponent, smaller coefficient in a.
    out.push(bt[i].exponent, bt[i].coefficient - at[i].coefficient);
    start = i + 1;
  }
  for (std::size_t j = start; j < bt.size(); ++j) out.push(bt[j]);
  return std::move(out).build();
}

Ordinal rec_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& lead = a.leading();
  OrdinalBuilder out;
  for (const auto& t : b.terms()) {
    if (!t.exponent.is_zero()) {
      // a *. omega^g = omega^(lead +. g) for g > 0.
      out.push(rec_add(lead.exponent, t.exponent), t.coefficient);
    } else {
      out.push(lead.exponent, lead.coefficient * t.coefficient);
      for (std::size_t i = 1; i < a.size(); ++i) out.push(a.terms()[i]);
    }
  }
  return std::move(out).build();
}

namespace {

// 1 +. x = x for transfinite x; this undoes it: x - 1 for finite x >= 1, else x.
Ordinal drop_one_on_left(const Ordinal& x) {
  if (auto n = x.as_natural()) return Ordinal::from_natural(*n - 1);
  return x;
}

Ordinal pow_by_squaring(const Ordinal& a, BigInt k, const EvalLimits& limits) {
  Ordinal result = Ordinal::from_natural(1);
  Ordinal base = a;
  // rec_mul is associative, so left-to-right square-and-multiply over the bits of k is exact.
  const std::uint64_t bits = bit_length(k);
  for (std::uint64_t i = bits; i-- > 0;) {
    result = rec_mul(result, result);
    if (mpz_tstbit(k.get_mpz_t(), i)) result = rec_mul(result, base);
    if (result.size() > limits.max_terms) {
      throw Error(ErrorKind::ResourceExceeded, "rec_pow", "too many terms in power");
    }
  }
  return result;
}

}  // namespace

Ordinal rec_pow(const Ordinal& a, const Ordinal& b, const EvalLimits& limits) {
  const Ordinal one = Ordinal::from_natural(1);
  if (b.is_zero()) return one;
  if (a.is_zero()) {
    // 0^(b+1) = 0^b *. 0 = 0; at limits the supremum of {1, 0, 0, ...} is 1.
    return classify(b) == OrdinalClass::Successor ? Ordinal{} : one;
  }
  if (a == one) return one;

  // b = L + k with L the limit part.
  OrdinalBuilder limit_part;
  BigInt k = 0;
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) {
      k = t.coefficient;
    } else {
      limit_part.push(t);
    }
  }
  const Ordinal L = std::move(limit_part).build();

  Ordinal result = one;
  if (!L.is_zero()) {
    if (a.is_finite()) {
      // n^(omega^g) = omega^(omega^(-1 + g)) for finite n >= 2.
      OrdinalBuilder exponent;
      for (const auto& t : L.terms()) {
        exponent.push(drop_one_on_left(t.exponent), t.coefficient);
      }
      result = Ordinal::omega_power(std::move(exponent).build());
    } else {
      result = Ordinal::omega_power(rec_mul(a.leading_exponent(), L));
    }
  }
  if (k == 0) return result;

  Ordinal power;
  if (auto n = a.as_natural()) {
    // Size estimate before computing: bits(n^k) ~ k * bits(n).
    if (k > BigInt(static_cast<unsigned long>(limits.max_bits)) ||
        BigInt(static_cast<unsigned long>(bit_length(*n) - 1)) * k > BigInt(static_cast<unsigned long>(limits.max_bits))) {
      throw Error(ErrorKind::ResourceExceeded, "rec_pow", "finite power exceeds the magnitude cap");
    }
    BigInt v;
    mpz_pow_ui(v.get_mpz_t(), n->get_mpz_t(), k.get_ui());
    check_bits(v, limits, "rec_pow");
    power = Ordinal::from_natural(v);
  } else {
    power = pow_by_squaring(a, k, limits);
  }
  return rec_mul(result, power);
}

Ordinal rec_sum(std::span<const Ordinal> seq, std::size_t n) {
  Ordinal acc;
  const std::size_t m = std::min(n, seq.size());
  for (std::size_t i = 0; i < m; ++i) acc = rec_add(acc, seq[i]);
  return acc;
}

OrdinalDivision rec_divmod(const Ordinal& a, const Ordinal& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "rec_divmod");
  const auto& d_lead = divisor.leading();
  OrdinalBuilder quotient;
  Ordinal rem = a;
  while (!(rem < divisor)) {
    const auto& r_lead = rem.leading();
    if (r_lead.exponent > d_lead.exponent) {
      // divisor *. omega^e * m = omega^(t +. e) * m for e > 0, matching rem's leading term exactly.
      Ordinal e = rec_sub_left(d_lead.exponent, r_lead.exponent);
      quotient.push(std::move(e), r_lead.coefficient);
      rem = drop_leading(rem);
      continue;
    }
    BigInt j = r_lead.coefficient / d_lead.coefficient;
    if (rem < rec_mul(divisor, Ordinal::from_natural(j))) j -= 1;
    if (j > 0) {
      const Ordinal taken = rec_mul(divisor, Ordinal::from_natural(j));
      quotient.push(Ordinal{}, j);
      rem = taken == rem ? Ordinal{} : rec_sub_left(taken, rem);
    }
    break;
  }
  return {std::move(quotient).build(), std::move(rem)};
}

Ordinal cofinal_element(const Ordinal& limit, std::uint64_t k) {
  if (classify(limit) != OrdinalClass::Limit) {
    throw Error(ErrorKind::Undefined, "cofinal_element", "argument is not a limit ordinal");
  }
  const auto terms = limit.terms();
  const auto& last = terms.back();
  OrdinalBuilder out;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) out.push(terms[i]);
  out.push(last.exponent, last.coefficient - 1);
  const BigInt kk(static_cast<unsigned long>(k));
  if (classify(last.exponent) == OrdinalClass::Successor) {
    out.push(predecessor(last.exponent), kk);
  } else {
    out.push(cofinal_element(last.exponent, k), 1);
  }
  return std::move(out).build();
}

// --------------------------------------------------------- base expansion

namespace {

// Largest g with base^g <= a (a > 0, base > 1).
Ordinal log_floor(const Ordinal& a, const Ordinal& base, const EvalLimits& limits) {
  const auto& lead = a.leading();
  if (auto b = base.as_natural()) {
    // base^(omega*z + r) = omega^z * base^r for finite base.
    BigInt r = 0;
    BigInt p = *b;
    while (p <= lead.coefficient) {
      p *= *b;
      r += 1;
    }
    return rec_add(rec_mul(Ordinal::omega(), lead.exponent), Ordinal::from_natural(r));
  }
  // Leading exponent of base^g is theta *. g where theta is base's leading exponent.
  const auto [q, r] = rec_divmod(lead.exponent, base.leading_exponent());
  if (r.is_zero() && classify(q) == OrdinalClass::Successor && a < rec_pow(base, q, limits)) {
    return predecessor(q);
  }
  return q;
}

}  // namespace

BaseExpansion base_expand(const Ordinal& a, const Ordinal& base, const EvalLimits& limits) {
  if (!(Ordinal::from_natural(1) < base)) throw Error(ErrorKind::Undefined, "base_expand", "base must exceed 1");
  if (a.is_zero()) throw Error(ErrorKind::Undefined, "base_expand", "cannot expand 0");
  BaseExpansion out{base, {}};
  Ordinal rest = a;
  while (!rest.is_zero()) {
    Ordinal g = log_floor(rest, base, limits);
    auto [digit, rem] = rec_divmod(rest, rec_pow(base, g, limits));
    out.digits.push_back({std::move(g), std::move(digit)});
    rest = std::move(rem);
  }
  return out;
}

Ordinal recompose(const BaseExpansion& expansion, const EvalLimits& limits) {
  Ordinal acc;
  for (const auto& d : expansion.digits) {
    acc = rec_add(acc, rec_mul(rec_pow(expansion.base, d.exponent, limits), d.coefficient));
  }
  return acc;
}

}  // namespace transfinita
