#include "transfinita/random.hpp"

#include <algorithm>
#include <vector>

namespace transfinita {

namespace {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Distinct exponents in strictly decreasing order.
std::vector<Ordinal> random_exponents(Rng& rng, const GenBudget& budget) {
  const unsigned count = static_cast<unsigned>(uniform(rng, 0, budget.terms));
  std::vector<Ordinal> exps;
  if (budget.depth == 0) {
    if (count > 0) exps.push_back(Ordinal{});
    return exps;
  }
  GenBudget inner = budget;
  inner.depth -= 1;
  for (unsigned i = 0; i < count; ++i) exps.push_back(random_ordinal(rng, inner));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  return exps;
}

}  // namespace

Ordinal random_ordinal(Rng& rng, const GenBudget& budget) {
  if (budget.depth == 0) return Ordinal::from_natural(uniform(rng, 0, budget.max_coeff));
  OrdinalBuilder b;
  for (auto& e : random_exponents(rng, budget)) b.push(std::move(e), big(uniform(rng, 1, budget.max_coeff)));
  return std::move(b).build();
}

SurInteger random_surinteger(Rng& rng, const GenBudget& budget) {
  SurIntegerBuilder b;
  for (auto& e : random_exponents(rng, budget)) {
    BigInt c = big(uniform(rng, 1, budget.max_coeff));
    if (uniform(rng, 0, 1) == 1) c = -c;
    b.push(std::move(e), std::move(c));
  }
  return std::move(b).build();
}

SurRational random_surrational(Rng& rng, const GenBudget& budget) {
  SurInteger num = random_surinteger(rng, budget);
  SurInteger den;
  while (den.is_zero()) den = random_surinteger(rng, budget);
  return SurRational(std::move(num), std::move(den));
}

GaussianSurRational random_gaussian(Rng& rng, const GenBudget& budget) {
  SurRational re = random_surrational(rng, budget);
  SurRational im = random_surrational(rng, budget);
  return {std::move(re), std::move(im)};
}

}  // namespace transfinita
