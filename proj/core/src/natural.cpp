#include "transfinita/natural.hpp"

#include <map>

#include "transfinita/error.hpp"

namespace transfinita {

Ordinal nat_add(const Ordinal& a, const Ordinal& b) {
  const auto at = a.terms();
  const auto bt = b.terms();
  OrdinalBuilder out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size() || (i < at.size() && at[i].exponent > bt[j].exponent)) {
      out.push(at[i++]);
    } else if (i == at.size() || bt[j].exponent > at[i].exponent) {
      out.push(bt[j++]);
    } else {
      out.push(at[i].exponent, at[i].coefficient + bt[j].coefficient);
      ++i;
      ++j;
    }
  }
  return std::move(out).build();
}

Ordinal nat_mul(const Ordinal& a, const Ordinal& b) {
  std::map<Ordinal, BigInt, std::greater<>> acc;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      acc[nat_add(x.exponent, y.exponent)] += x.coefficient * y.coefficient;
    }
  }
  OrdinalBuilder out;
  for (auto& [e, c] : acc) out.push(e, std::move(c));
  return std::move(out).build();
}

Ordinal nat_sum(std::span<const Ordinal> seq, std::size_t n) {
  Ordinal acc;
  const std::size_t m = std::min(n, seq.size());
  for (std::size_t i = 0; i < m; ++i) acc = nat_add(acc, seq[i]);
  return acc;
}

std::optional<Ordinal> nat_sub(const Ordinal& a, const Ordinal& b) {
  const auto at = a.terms();
  const auto bt = b.terms();
  OrdinalBuilder out;
  std::size_t j = 0;
  for (const auto& t : at) {
    if (j < bt.size() && bt[j].exponent > t.exponent) return std::nullopt;
    if (j < bt.size() && bt[j].exponent == t.exponent) {
      if (bt[j].coefficient > t.coefficient) return std::nullopt;
      out.push(t.exponent, t.coefficient - bt[j].coefficient);
      ++j;
    } else {
      out.push(t);
    }
  }
  if (j != bt.size()) return std::nullopt;
  return std::move(out).build();
}

namespace {

bool is_omega_power(const Ordinal& a) { return a.size() == 1 && a.leading().coefficient == 1; }

bool is_omega_omega_power(const Ordinal& a) {
  return is_omega_power(a) && is_omega_power(a.leading_exponent());
}

}  // namespace

bool is_closure_number(ClosureKind kind, const Ordinal& a) {
  const auto n = a.as_natural();
  switch (kind) {
    case ClosureKind::GammaAdd:
    case ClosureKind::NatAdd:
      return a.is_zero() || is_omega_power(a);
    case ClosureKind::DeltaMul:
    case ClosureKind::NatMul:
      if (n) return *n <= 2;
      return is_omega_omega_power(a);
    case ClosureKind::EpsilonExp:
      if (n) return *n <= 2;
      return a == Ordinal::omega();
  }
  return false;
}

Ordinal next_closure(ClosureKind kind, const Ordinal& a) {
  if (!is_closure_number(kind, a)) {
    throw Error(ErrorKind::Undefined, "next_closure", "argument is not a closure number of this kind");
  }
  const auto n = a.as_natural();
  switch (kind) {
    case ClosureKind::GammaAdd:
    case ClosureKind::NatAdd:
      if (a.is_zero()) return Ordinal::from_natural(1);
      return rec_mul(a, Ordinal::omega());
    case ClosureKind::DeltaMul:
    case ClosureKind::NatMul:
      if (n) return *n < 2 ? Ordinal::from_natural(*n + 1) : Ordinal::omega();
      return rec_pow(a, Ordinal::omega());
    case ClosureKind::EpsilonExp:
      if (n) return *n < 2 ? Ordinal::from_natural(*n + 1) : Ordinal::omega();
      throw Error(ErrorKind::NotRepresentable, "next_closure", "the next epsilon-number is epsilon_0");
  }
  return a;
}

}  // namespace transfinita
