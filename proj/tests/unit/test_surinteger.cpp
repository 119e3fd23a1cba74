#include <doctest.h>

#include "helpers.hpp"

using namespace tt;

namespace {

constexpr int kTrials = 3000;

SurInteger z(long v) { return SurInteger::from_integer(BigInt(v)); }

}  // namespace

TEST_CASE("coordinate form") {
  const SurInteger a = si("w^5*4 - w^4*2 - w^2*7 + w*3 - 1");
  const CoordinateForm c = to_coordinates(a);
  CHECK(c.negative == ord("w^4*2 + w^2*7 + 1"));
  CHECK(c.positive == ord("w^5*4 + w*3"));
  CHECK(from_coordinates(c) == a);

  CHECK(to_coordinates(SurInteger{}) == CoordinateForm{});
  CHECK(to_coordinates(z(-5)) == CoordinateForm{ord("5"), ord("0")});
  CHECK(from_coordinates({ord("3"), ord("5")}) == z(2));
  CHECK(from_coordinates({ord("w"), ord("w*3")}) == si("w*2"));
  CHECK(from_coordinates({ord("w*3 + 1"), ord("w")}) == si("-(w*2) - 1"));
  CHECK(from_coordinates({ord("0"), ord("w^2")}) == si("w^2"));
}

TEST_CASE("ring operations") {
  CHECK(si_add(si("w*3 - 2"), si("-w + 5")) == si("w*2 + 3"));
  CHECK(si_add(si("w^2 - w"), neg(si("w^2 - w"))).is_zero());
  CHECK(neg(si("w - 1")) == si("1 - w"));
  CHECK(neg(SurInteger{}).is_zero());
  CHECK(si_mul(si("w - 1"), si("w + 1")) == si("w^2 - 1"));
  CHECK(si_mul(z(-2), z(-3)) == z(6));
  CHECK(si_mul(si("w^w - 3"), z(1)) == si("w^w - 3"));
  CHECK(si_mul(si("w^w + w"), si("w^2")) == si("w^(w + 2) + w^3"));
  CHECK(si_pow(si("w - 1"), 3) == si("w^3 - w^2*3 + w*3 - 1"));
  CHECK(si_abs(si("-w + 100")) == si("w - 100"));
  CHECK(si_sub(si("w"), si("w")).is_zero());
}

TEST_CASE("order") {
  CHECK(si_compare(si("w - 5"), z(100)) == std::strong_ordering::greater);
  CHECK(si_compare(si("-w"), z(-5)) == std::strong_ordering::less);
  CHECK(si_compare(si("w^2 - w"), si("w^2 - w")) == std::strong_ordering::equal);
  CHECK(si("w^2 - w*1000") > si("w*1000"));
  CHECK(si("w - 1") < si("w"));
  CHECK(si("-(w^2) + w") < si("-w"));
  CHECK(z(0) > si("-1"));
  CHECK(SurInteger{}.sign() == 0);
}

TEST_CASE("lambda truncations") {
  CHECK(in_lambda_ring(si("w*3 - 2"), ord("w^w")));
  CHECK(!in_lambda_ring(si("w"), ord("w")));
  CHECK(in_lambda_ring(z(-7), ord("w")));
  CHECK(!in_lambda_ring(si("w^w - 1"), ord("w^w")));
  CHECK(in_lambda_ring(si("w^(w*5 + 2) - w^w"), ord("w^(w^2)")));
  CHECK(is_valid_lambda(ord("w")));
  CHECK(!is_valid_lambda(ord("w^2")));
  CHECK(!is_valid_lambda(ord("2")));
  CHECK_THROWS_AS(in_lambda_ring(z(1), ord("w^2")), Error);
}

TEST_CASE("cyclic decomposition") {
  CHECK(cyclic_decompose(z(-3)) == CyclicForm{-1, 3});
  CHECK(cyclic_decompose(z(4)) == CyclicForm{1, 4});
  CHECK(cyclic_decompose(SurInteger{}) == CyclicForm{1, 0});
  CHECK(!cyclic_decompose(si("w")).has_value());
  CHECK(!cyclic_decompose(si("w - 7")).has_value());
}

TEST_CASE("content") {
  CHECK(content(si("w*6 - 4")) == 2);
  CHECK(content(SurInteger{}) == 0);
  CHECK(divide_content(si("w*6 - 4"), BigInt(2)) == si("w*3 - 2"));
}

TEST_CASE("from_terms validates") {
  std::vector<SurInteger::Term> zero{{ord("1"), BigInt(0)}};
  CHECK_THROWS_AS(SurInteger::from_terms(zero), Error);
  std::vector<SurInteger::Term> unordered{{ord("0"), BigInt(1)}, {ord("1"), BigInt(-1)}};
  CHECK_THROWS_AS(SurInteger::from_terms(unordered), Error);
}

TEST_CASE("the image map is a ring homomorphism") {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const SurInteger a = random_surinteger(rng);
    const SurInteger b = random_surinteger(rng);
    for (std::uint64_t seed : {3u, 4u}) {
      const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
      CHECK(image(si_add(a, b), seed) == (image(a, seed) + image(b, seed)) % p);
      CHECK(image(si_mul(a, b), seed) ==
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(image(a, seed)) * image(b, seed) % p));
    }
  }
}

TEST_CASE("properties: ordered ring axioms") {
  Rng rng(2718);
  const SurInteger zero;
  const SurInteger one = z(1);
  for (int i = 0; i < kTrials; ++i) {
    const SurInteger a = random_surinteger(rng);
    const SurInteger b = random_surinteger(rng);
    const SurInteger c = random_surinteger(rng);
    CHECK(si_add(si_add(a, b), c) == si_add(a, si_add(b, c)));
    CHECK(si_add(a, b) == si_add(b, a));
    CHECK(si_add(a, zero) == a);
    CHECK(si_add(a, neg(a)).is_zero());
    CHECK(neg(neg(a)) == a);
    const SurInteger ab_c = si_mul(si_mul(a, b), c);
    CHECK(ab_c == si_mul(a, si_mul(b, c)));
    CHECK(same_image(ab_c, si_mul(a, si_mul(b, c))));
    CHECK(si_mul(a, b) == si_mul(b, a));
    CHECK(si_mul(a, one) == a);
    const SurInteger lhs = si_mul(a, si_add(b, c));
    CHECK(lhs == si_add(si_mul(a, b), si_mul(a, c)));
    CHECK(same_image(lhs, si_add(si_mul(a, b), si_mul(a, c))));

    // Order: trichotomy, transitivity, translation, positivity of products.
    const int rel = (a < b) + (a == b) + (a > b);
    CHECK(rel == 1);
    if (a < b && b < c) CHECK(a < c);
    if (a < b) CHECK(si_add(a, c) < si_add(b, c));
    if (a > zero && b > zero) {
      CHECK(si_mul(a, b) > zero);
      CHECK(si_add(a, b) > zero);
    }
    if (a < zero && b < zero) CHECK(si_add(a, b) < zero);
    // Discreteness.
    CHECK(!(a < b && b < si_add(a, one)));

    CHECK(from_coordinates(to_coordinates(a)) == a);
    const CoordinateForm cf = to_coordinates(a);
    for (const auto& t : cf.negative.terms()) {
      for (const auto& u : cf.positive.terms()) CHECK(!(t.exponent == u.exponent));
    }
  }
}

TEST_CASE("properties: lambda rings are closed") {
  Rng rng(161);
  const Ordinal lambdas[] = {ord("w"), ord("w^w"), ord("w^(w^2)")};
  for (const auto& lambda : lambdas) {
    int pairs = 0;
    for (int i = 0; i < kTrials && pairs < 300; ++i) {
      const SurInteger a = random_surinteger(rng);
      const SurInteger b = random_surinteger(rng);
      if (!in_lambda_ring(a, lambda) || !in_lambda_ring(b, lambda)) continue;
      ++pairs;
      CHECK(in_lambda_ring(si_add(a, b), lambda));
      CHECK(in_lambda_ring(si_mul(a, b), lambda));
    }
    CHECK(pairs > 0);
  }
}
