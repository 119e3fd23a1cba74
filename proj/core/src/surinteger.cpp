#include "transfinita/surinteger.hpp"

#include <map>

#include "transfinita/error.hpp"
#include "transfinita/natural.hpp"

namespace transfinita {

SurInteger::SurInteger(const Ordinal& a) {
  terms_.reserve(a.size());
  for (const auto& t : a.terms()) terms_.push_back(Term{t.exponent, t.coefficient});
}

SurInteger SurInteger::from_integer(const BigInt& n) {
  SurIntegerBuilder b;
  b.push(Ordinal{}, n);
  return std::move(b).build();
}

SurInteger SurInteger::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool ok = terms[i].coefficient != 0 && is_normal(terms[i].exponent) &&
                    (i == 0 || terms[i].exponent < terms[i - 1].exponent);
    if (!ok) throw Error(ErrorKind::InvalidArgument, "SurInteger::from_terms", "term list is not in normal form");
  }
  SurInteger out;
  out.terms_ = std::move(terms);
  return out;
}

bool SurInteger::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::optional<BigInt> SurInteger::as_integer() const {
  if (terms_.empty()) return BigInt(0);
  if (!is_finite()) return std::nullopt;
  return terms_[0].coefficient;
}

std::optional<Ordinal> SurInteger::as_ordinal() const {
  OrdinalBuilder b;
  for (const auto& t : terms_) {
    if (t.coefficient < 0) return std::nullopt;
    b.push(t.exponent, t.coefficient);
  }
  return std::move(b).build();
}

const SurInteger::Term& SurInteger::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::Undefined, "SurInteger::leading", "zero has no terms");
  return terms_.front();
}

int SurInteger::sign() const noexcept { return terms_.empty() ? 0 : sgn(terms_.front().coefficient); }

std::strong_ordering operator<=>(const SurInteger& a, const SurInteger& b) {
  // The first exponent (in descending order) where the coefficients differ decides;
  // a missing term has coefficient 0.
  const auto& at = a.terms_;
  const auto& bt = b.terms_;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < at.size() || j < bt.size()) {
    int c;
    if (j == bt.size() || (i < at.size() && at[i].exponent > bt[j].exponent)) {
      c = sgn(at[i].coefficient);
    } else if (i == at.size() || bt[j].exponent > at[i].exponent) {
      c = -sgn(bt[j].coefficient);
    } else {
      c = cmp(at[i].coefficient, bt[j].coefficient);
      ++i;
      ++j;
      if (c == 0) continue;
    }
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void SurIntegerBuilder::push(Ordinal exponent, BigInt coefficient) {
  if (coefficient == 0) return;
  terms_.push_back(SurInteger::Term{std::move(exponent), std::move(coefficient)});
}

SurInteger SurIntegerBuilder::build() && {
  SurInteger out;
  out.terms_ = std::move(terms_);
  return out;
}

CoordinateForm to_coordinates(const SurInteger& a) {
  OrdinalBuilder negative;
  OrdinalBuilder positive;
  for (const auto& t : a.terms()) {
    if (t.coefficient < 0) {
      negative.push(t.exponent, -t.coefficient);
    } else {
      positive.push(t.exponent, t.coefficient);
    }
  }
  return {std::move(negative).build(), std::move(positive).build()};
}

SurInteger from_coordinates(const CoordinateForm& c) {
  return si_sub(SurInteger(c.positive), SurInteger(c.negative));
}

SurInteger si_add(const SurInteger& a, const SurInteger& b) {
  const auto at = a.terms();
  const auto bt = b.terms();
  SurIntegerBuilder out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size() || (i < at.size() && at[i].exponent > bt[j].exponent)) {
      out.push(at[i].exponent, at[i].coefficient);
      ++i;
    } else if (i == at.size() || bt[j].exponent > at[i].exponent) {
      out.push(bt[j].exponent, bt[j].coefficient);
      ++j;
    } else {
      out.push(at[i].exponent, at[i].coefficient + bt[j].coefficient);
      ++i;
      ++j;
    }
  }
  return std::move(out).build();
}

SurInteger neg(const SurInteger& a) {
  SurIntegerBuilder out;
  for (const auto& t : a.terms()) out.push(t.exponent, -t.coefficient);
  return std::move(out).build();
}

SurInteger si_sub(const SurInteger& a, const SurInteger& b) { return si_add(a, neg(b)); }

SurInteger si_mul(const SurInteger& a, const SurInteger& b) {
  std::map<Ordinal, BigInt, std::greater<>> acc;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) acc[nat_add(x.exponent, y.exponent)] += x.coefficient * y.coefficient;
  }
  SurIntegerBuilder out;
  for (auto& [e, c] : acc) out.push(e, std::move(c));
  return std::move(out).build();
}

SurInteger si_pow(const SurInteger& a, std::uint64_t k) {
  SurInteger result = SurInteger::from_integer(1);
  SurInteger base = a;
  while (k > 0) {
    if (k & 1) result = si_mul(result, base);
    k >>= 1;
    if (k > 0) base = si_mul(base, base);
  }
  return result;
}

SurInteger si_abs(const SurInteger& a) { return a.sign() < 0 ? neg(a) : a; }

std::strong_ordering si_compare(const SurInteger& a, const SurInteger& b) { return a <=> b; }

bool is_valid_lambda(const Ordinal& lambda) {
  return !lambda.is_finite() && is_closure_number(ClosureKind::NatMul, lambda);
}

bool in_lambda_ring(const SurInteger& a, const Ordinal& lambda) {
  if (!is_valid_lambda(lambda)) {
    throw Error(ErrorKind::InvalidLambda, "in_lambda_ring", "lambda must be omega or a transfinite x-number");
  }
  // Both coordinates stay below lambda iff every exponent does, since lambda = omega^(omega^z).
  const auto& bound = lambda.leading_exponent();
  for (const auto& t : a.terms()) {
    if (!(t.exponent < bound)) return false;
  }
  return true;
}

std::optional<CyclicForm> cyclic_decompose(const SurInteger& a) {
  auto n = a.as_integer();
  if (!n) return std::nullopt;
  return CyclicForm{*n < 0 ? -1 : 1, abs(*n)};
}

BigInt content(const SurInteger& a) {
  BigInt g = 0;
  for (const auto& t : a.terms()) g = gcd(g, t.coefficient);
  return g;
}

SurInteger divide_content(const SurInteger& a, const BigInt& d) {
  SurIntegerBuilder out;
  for (const auto& t : a.terms()) out.push(t.exponent, t.coefficient / d);
  return std::move(out).build();
}

}  // namespace transfinita
