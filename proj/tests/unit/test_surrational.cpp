#include <doctest.h>

#include "helpers.hpp"

using namespace tt;

namespace {

constexpr int kTrials = 1000;

SurRational r(long n, long d = 1) {
  return SurRational(SurInteger::from_integer(BigInt(n)), SurInteger::from_integer(BigInt(d)));
}

/// Equality of fractions through the image homomorphism: a/b = c/d iff ad = cb.
bool same_fraction_image(const SurRational& p, const SurRational& q) {
  return same_image(si_mul(p.num(), q.den()), si_mul(q.num(), p.den()));
}

mpq_class to_mpq(const SurRational& p) {
  mpq_class out(*p.num().as_integer(), *p.den().as_integer());
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("construction") {
  const SurRational p(SurInteger::from_integer(3), SurInteger::from_integer(-6));
  CHECK(p.den() > SurInteger{});
  CHECK(p == r(-1, 2));
  CHECK_THROWS_AS(SurRational(SurInteger::from_integer(1), SurInteger{}), Error);
  CHECK(SurRational{}.is_zero());
}

TEST_CASE("equality and order") {
  CHECK(q_eq(r(2, 4), r(1, 2)));
  CHECK(q_eq(q("w/2"), q("w/2")));
  CHECK(!q_eq(q("1/w"), r(0)));
  CHECK(q_compare(r(5), q("w/3")) == std::strong_ordering::less);
  CHECK(q_compare(q("w/3"), q("w - 5")) == std::strong_ordering::less);
  CHECK(q_compare(q("1/w"), q("1/w^2")) == std::strong_ordering::greater);
  CHECK(q("1/w") > r(0));
  CHECK(q("1/w") < r(1, 1000000));
  CHECK(q("-1/w") > r(-1, 1000000));
}

TEST_CASE("field operations") {
  CHECK(q_add(r(1, 2), r(1, 3)) == r(5, 6));
  CHECK(q_add(q("1/w"), q("1/w")) == q("2/w"));
  CHECK(q_add(q("(w + 1)/3"), r(0)) == q("(w + 1)/3"));
  CHECK(q_neg(r(1, 2)) == r(-1, 2));
  CHECK(q_neg(r(0)).is_zero());
  CHECK(q_mul(r(2, 3), r(3, 2)) == r(1));
  CHECK(q_mul(q("w/2"), q("2/w")) == r(1));
  CHECK(q_inv(r(2, 3)) == r(3, 2));
  CHECK(q_inv(r(-2, 3)) == r(-3, 2));
  CHECK(q_inv(r(0)).is_zero());
  CHECK(q_div(q("w^2 - 1"), q("w + 1")) == q("w - 1"));
  CHECK_THROWS_AS(q_div(r(1), r(0)), Error);
  CHECK(q_abs(q("-w/7")) == q("w/7"));
}

TEST_CASE("reduce") {
  const SurRational a = reduce(SurRational(SurInteger::from_integer(2), SurInteger::from_integer(4)));
  CHECK(a.num() == SurInteger::from_integer(1));
  CHECK(a.den() == SurInteger::from_integer(2));
  CHECK(a.reduced());

  const SurRational b = reduce(SurRational(si("w*2"), si("w*4")));
  CHECK(b == r(1, 2));
  CHECK(b.reduced());
  CHECK(b.den() == SurInteger::from_integer(2));

  const SurRational c = reduce(SurRational(si("1"), si("w")));
  CHECK(c.num() == SurInteger::from_integer(1));
  CHECK(c.den() == si("w"));

  const SurRational d = reduce(SurRational(si("w^2 - 1"), si("w^2 + w*2 + 1")));
  CHECK(d.num() == si("w - 1"));
  CHECK(d.den() == si("w + 1"));
  CHECK(d.reduced());

  // Two independent variables (omega and omega^omega).
  const SurRational e = reduce(SurRational(si_mul(si("w^w + w"), si("w + 2")), si_mul(si("w^w + w"), si("w^w - 3"))));
  CHECK(e.num() == si("w + 2"));
  CHECK(e.den() == si("w^w - 3"));
}

TEST_CASE("exact_divide") {
  CHECK(exact_divide(si("w^2 - 1"), si("w + 1")) == si("w - 1"));
  CHECK(!exact_divide(si("w"), si("2")).has_value());
  CHECK(exact_divide(si("w^w*3 - 7"), si("1")) == si("w^w*3 - 7"));
  CHECK(!exact_divide(si("w^2 + 1"), si("w + 1")).has_value());
  CHECK(exact_divide(si("w^(w + 1) - w^w"), si("w^w")) == si("w - 1"));
  CHECK_THROWS_AS(exact_divide(si("w"), SurInteger{}), Error);
}

TEST_CASE("lambda fields") {
  CHECK(in_lambda_field(q("1/w"), ord("w^w")));
  CHECK(!in_lambda_field(q("1/w"), ord("w")));
  CHECK(in_lambda_field(r(3, 4), ord("w")));
  CHECK(in_lambda_field(q("(w*2)/(w*4)"), ord("w")));
  CHECK_THROWS_AS(in_lambda_field(r(1), ord("w^2")), Error);
}

TEST_CASE("archimedean witness") {
  CHECK(archimedean_witness(r(2, 3), r(7, 2), BigInt(100)) == BigInt(6));
  CHECK(!archimedean_witness(r(1), q("w"), BigInt(1000000)).has_value());
  CHECK(archimedean_witness(q("1/w"), r(0), BigInt(5)) == BigInt(0));
  CHECK(archimedean_witness(q("w"), q("w*5 - 1"), BigInt(10)) == BigInt(5));
  CHECK(!archimedean_witness(q("1/w"), r(1), BigInt(1000000)).has_value());
  CHECK_THROWS_AS(archimedean_witness(r(0), r(1), BigInt(5)), Error);
}

TEST_CASE("midpoint") {
  CHECK(midpoint(r(0), r(1)) == r(1, 2));
  CHECK(midpoint(q("1/w"), q("2/w")) == q("3/(w*2)"));
  const SurRational m = midpoint(r(4), q("4 + 1/w"));
  CHECK(m == q("4 + 1/(w*2)"));
  CHECK_THROWS_AS(midpoint(r(1), r(1)), Error);
  CHECK_THROWS_AS(midpoint(r(2), r(1)), Error);
}

TEST_CASE("properties: ordered field axioms") {
  Rng rng(16180);
  const SurRational zero;
  const SurRational one = r(1);
  for (int i = 0; i < kTrials; ++i) {
    const SurRational a = random_surrational(rng);
    const SurRational b = random_surrational(rng);
    const SurRational c = random_surrational(rng);
    CHECK(q_add(q_add(a, b), c) == q_add(a, q_add(b, c)));
    CHECK(q_add(a, b) == q_add(b, a));
    CHECK(q_add(a, zero) == a);
    CHECK(q_add(a, q_neg(a)).is_zero());
    const SurRational abc = q_mul(q_mul(a, b), c);
    CHECK(abc == q_mul(a, q_mul(b, c)));
    CHECK(same_fraction_image(abc, q_mul(a, q_mul(b, c))));
    CHECK(q_mul(a, b) == q_mul(b, a));
    CHECK(q_mul(a, one) == a);
    if (!a.is_zero()) CHECK(q_mul(a, q_inv(a)) == one);
    const SurRational lhs = q_mul(a, q_add(b, c));
    CHECK(lhs == q_add(q_mul(a, b), q_mul(a, c)));
    CHECK(same_fraction_image(lhs, q_add(q_mul(a, b), q_mul(a, c))));

    const SurRational d = random_surrational(rng);
    if (a < b && c < d) CHECK(q_add(a, c) < q_add(b, d));
    if (a > zero && b > zero) CHECK(q_mul(a, b) > zero);
    if (a < b) {
      const SurRational m = midpoint(a, b);
      CHECK(a < m);
      CHECK(m < b);
    }
    // Equivalence laws on differently scaled representatives.
    const SurRational a2(si_mul(a.num(), c.den()), si_mul(a.den(), c.den()));
    CHECK(q_eq(a, a));
    CHECK(q_eq(a, a2) == q_eq(a2, a));
    CHECK(q_eq(a, a2));
    if (q_eq(a, a2) && q_eq(a2, b)) CHECK(q_eq(a, b));

    const SurRational red = reduce(a);
    CHECK(red == a);
    CHECK(red.den() > SurInteger{});
    CHECK(same_fraction_image(red, a));
  }
}

TEST_CASE("properties: exact_divide round-trips") {
  Rng rng(99);
  for (int i = 0; i < kTrials; ++i) {
    const SurInteger a = random_surinteger(rng, {2, 3, 5});
    const SurInteger b = random_surinteger(rng, {2, 3, 5});
    if (b.is_zero()) continue;
    const auto c = exact_divide(si_mul(a, b), b);
    REQUIRE(c.has_value());
    CHECK(*c == a);
    if (auto d = exact_divide(a, b)) CHECK(si_mul(*d, b) == a);
  }
}

TEST_CASE("properties: finite fractions match exact rational arithmetic") {
  Rng rng(4);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int i = 0; i < kTrials; ++i) {
    long d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0) d1 = 7;
    if (d2 == 0) d2 = -3;
    const SurRational a = r(dist(rng), d1);
    const SurRational b = r(dist(rng), d2);
    const mpq_class x = to_mpq(a);
    const mpq_class y = to_mpq(b);
    CHECK(to_mpq(q_add(a, b)) == x + y);
    CHECK(to_mpq(q_sub(a, b)) == x - y);
    CHECK(to_mpq(q_mul(a, b)) == x * y);
    if (y != 0) CHECK(to_mpq(q_div(a, b)) == x / y);
    CHECK((a < b) == (x < y));
    const SurRational s = q_add(a, b);
    CHECK(s.reduced());
    CHECK(s.num() == SurInteger::from_integer(mpq_class(x + y).get_num()));
  }
}

TEST_CASE("properties: infinitesimal gap") {
  Rng rng(77);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::uniform_int_distribution<long> pos(1, 1000);
  const SurRational eps = q("1/w");
  for (int i = 0; i < kTrials; ++i) {
    const SurRational base = r(dist(rng), pos(rng));
    const SurRational step = r(pos(rng), pos(rng));
    const SurRational p = q_add(base, step);
    CHECK(!(base < p && p < q_add(base, eps)));
    CHECK(base < q_add(base, eps));
  }
}
