#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "transfinita/oracle.hpp"

using namespace tt;
using oracle::SmallOrdinal;

namespace {

Ordinal n(std::uint64_t v) { return Ordinal::from_natural(v); }

bool valid_surinteger(const SurInteger& a) {
  try {
    std::vector<SurInteger::Term> terms(a.terms().begin(), a.terms().end());
    for (const auto& t : terms) {
      if (!is_normal(t.exponent)) return false;
    }
    return SurInteger::from_terms(std::move(terms)) == a;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("definitional addition") {
  CHECK(oracle::def_rec_add({0, 1}, {1, 0}) == SmallOrdinal{1, 0});
  CHECK(oracle::def_rec_add({1, 0}, {0, 1}) == SmallOrdinal{1, 1});
  CHECK(oracle::def_rec_add({1, 2}, {1, 3}) == SmallOrdinal{2, 3});
  CHECK(oracle::def_rec_add({3, 3}, {0, 0}) == SmallOrdinal{3, 3});
  CHECK_THROWS_AS(oracle::def_rec_add({8, 0}, {1, 0}), Error);
}

TEST_CASE("definitional multiplication") {
  CHECK(oracle::def_rec_mul({0, 2}, {1, 0}) == SmallOrdinal{1, 0});
  CHECK(oracle::def_rec_mul({1, 0}, {0, 2}) == SmallOrdinal{2, 0});
  CHECK(oracle::def_rec_mul({5, 5}, {0, 0}) == SmallOrdinal{0, 0});
  CHECK(oracle::def_rec_mul({1, 1}, {0, 3}) == SmallOrdinal{3, 1});
  CHECK_THROWS_AS(oracle::def_rec_mul({1, 0}, {1, 0}), Error);
}

TEST_CASE("definitional exponentiation") {
  CHECK(oracle::def_rec_pow({0, 2}, {1, 0}) == SmallOrdinal{1, 0});
  CHECK(oracle::def_rec_pow({0, 2}, {0, 3}) == SmallOrdinal{0, 8});
  CHECK(oracle::def_rec_pow({0, 0}, {1, 0}) == SmallOrdinal{0, 1});
  CHECK(oracle::def_rec_pow({1, 0}, {0, 1}) == SmallOrdinal{1, 0});
  CHECK(oracle::def_rec_pow({0, 2}, {1, 2}, 16) == SmallOrdinal{4, 0});
}

TEST_CASE("embedding") {
  CHECK(oracle::embed({2, 3}) == ord("w*2 + 3"));
  CHECK(oracle::embed({0, 0}) == n(0));
  CHECK(oracle::project(ord("w*5")) == SmallOrdinal{5, 0});
  CHECK(!oracle::project(ord("w^2")).has_value());
}

TEST_CASE("exhaustive agreement on the degree-one fragment") {
  constexpr std::uint64_t kMax = 6;
  oracle::Unfolder u(oracle::kDefaultBound);
  std::size_t add_checked = 0;
  std::size_t mul_checked = 0;
  for (std::uint64_t xa = 0; xa <= kMax; ++xa) {
    for (std::uint64_t xb = 0; xb <= kMax; ++xb) {
      for (std::uint64_t ya = 0; ya <= kMax; ++ya) {
        for (std::uint64_t yb = 0; yb <= kMax; ++yb) {
          const SmallOrdinal x{xa, xb};
          const SmallOrdinal y{ya, yb};
          const Ordinal ex = oracle::embed(x);
          const Ordinal ey = oracle::embed(y);
          const Ordinal add = rec_add(ex, ey);
          const Ordinal mul = rec_mul(ex, ey);
          try {
            const SmallOrdinal v = u.add(x, y);
            CHECK(oracle::embed(v) == add);
            ++add_checked;
          } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::FragmentExceeded);
            const auto p = oracle::project(add);
            const bool outside = !p || p->a > oracle::kDefaultBound || p->b > oracle::kDefaultBound;
            CHECK(outside);
          }
          try {
            const SmallOrdinal v = u.mul(x, y);
            CHECK(oracle::embed(v) == mul);
            ++mul_checked;
          } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::FragmentExceeded);
          }
        }
      }
    }
  }
  CHECK(add_checked > 1800);
  CHECK(mul_checked > 300);
}

TEST_CASE("exponentiation agrees where it stays in the fragment") {
  oracle::Unfolder u(oracle::kDefaultBound);
  std::size_t checked = 0;
  for (std::uint64_t xa = 0; xa <= 6; ++xa) {
    for (std::uint64_t xb = 0; xb <= 6; ++xb) {
      for (std::uint64_t ya = 0; ya <= 6; ++ya) {
        for (std::uint64_t yb = 0; yb <= 6; ++yb) {
          const SmallOrdinal x{xa, xb};
          const SmallOrdinal y{ya, yb};
          SmallOrdinal v;
          try {
            v = u.pow(x, y);
          } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::FragmentExceeded);
            continue;
          }
          CHECK(oracle::embed(v) == rec_pow(oracle::embed(x), oracle::embed(y)));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
  CHECK(rec_pow(n(2), ord("w")) == ord("w"));
  for (std::uint64_t b = 0; b <= 6; ++b) {
    for (std::uint64_t k = 0; k <= 6; ++k) CHECK(rec_pow(n(b), n(k)).is_finite());
  }
}

TEST_CASE("generators produce valid, reproducible values") {
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    Rng rng(seed);
    const Ordinal a = random_ordinal(rng);
    const SurInteger b = random_surinteger(rng);
    const SurRational c = random_surrational(rng);
    const GaussianSurRational d = random_gaussian(rng);
    REQUIRE(is_normal(a));
    REQUIRE(valid_surinteger(b));
    REQUIRE(valid_surinteger(c.num()));
    REQUIRE(valid_surinteger(c.den()));
    REQUIRE(c.den() > SurInteger{});
    REQUIRE(d.re.den() > SurInteger{});
    REQUIRE(d.im.den() > SurInteger{});
    if (seed % 97 == 0) {
      Rng again(seed);
      CHECK(random_ordinal(again) == a);
      CHECK(random_surinteger(again) == b);
    }
  }
}

TEST_CASE("generator budgets are respected") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Ordinal a = random_ordinal(rng, {1, 2, 4});
    CHECK(a.height() <= 1);
    CHECK(a.size() <= 2);
    for (const auto& t : a.terms()) CHECK(t.coefficient <= 4);
    CHECK(random_ordinal(rng, {0, 3, 9}).is_finite());
  }
}
