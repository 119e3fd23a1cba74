#include "helpers.hpp"

#include <map>
#include <random>

namespace tt {

Value val(std::string_view text) { return eval_text(text, Env{}); }
Ordinal ord(std::string_view text) { return to_ordinal(val(text), "test"); }
SurInteger si(std::string_view text) { return to_surinteger(val(text)); }
SurRational q(std::string_view text) { return to_surrational(val(text)); }
GaussianSurRational cx(std::string_view text) { return to_gaussian(val(text)); }

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t b, BigInt e) {
  BigInt r;
  mpz_class m(static_cast<unsigned long>(kPrime));
  mpz_powm(r.get_mpz_t(), BigInt(static_cast<unsigned long>(b)).get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

std::uint64_t residue(const BigInt& c) {
  BigInt r = c % BigInt(static_cast<unsigned long>(kPrime));
  if (r < 0) r += BigInt(static_cast<unsigned long>(kPrime));
  return r.get_ui();
}

}  // namespace

std::uint64_t image(const SurInteger& a, std::uint64_t seed) {
  std::map<Ordinal, std::uint64_t> point;
  auto at = [&](const Ordinal& mu) {
    auto it = point.find(mu);
    if (it != point.end()) return it->second;
    std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(to_string(mu)))};
    std::mt19937_64 rng(seq);
    const std::uint64_t v = rng() % (kPrime - 2) + 2;
    point.emplace(mu, v);
    return v;
  };
  std::uint64_t total = 0;
  for (const auto& t : a.terms()) {
    std::uint64_t m = residue(t.coefficient);
    for (const auto& x : t.exponent.terms()) m = mulmod(m, powmod(at(x.exponent), x.coefficient));
    total = (total + m) % kPrime;
  }
  return total;
}

bool same_image(const SurInteger& a, const SurInteger& b) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    if (image(a, seed) != image(b, seed)) return false;
  }
  return true;
}

}  // namespace tt
