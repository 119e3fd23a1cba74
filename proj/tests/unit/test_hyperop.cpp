#include <doctest.h>

#include "helpers.hpp"
#include "transfinita/hyperop.hpp"
#include "transfinita/oracle.hpp"

using namespace tt;

namespace {

Ordinal n(std::uint64_t v) { return Ordinal::from_natural(v); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("low indices") {
  CHECK(hyperop(0, ord("w"), n(7)) == ord("w + 1"));
  CHECK(hyperop(1, n(1), ord("w")) == ord("w"));
  CHECK(hyperop(2, ord("w + 1"), n(3)) == ord("w*3 + 1"));
  CHECK(hyperop(3, n(2), n(3)) == n(8));
  CHECK(hyperop(3, n(2), ord("w")) == ord("w"));
}

TEST_CASE("tetration") {
  CHECK(tetration(n(2), n(3)) == n(16));
  CHECK(tetration(n(2), n(4)) == n(65536));
  CHECK(tetration(n(3), n(0)) == n(1));
  CHECK(tetration(n(3), n(1)) == n(3));
  CHECK(tetration(ord("w"), n(2)) == ord("w^w"));
  CHECK(tetration(ord("w"), n(3)) == ord("w^(w^w)"));
  CHECK(tetration(n(2), ord("w")) == ord("w"));
  CHECK(tetration(n(0), n(3)) == n(0));
  CHECK(tetration(n(0), n(4)) == n(1));
  CHECK(kind_of([] { tetration(ord("w"), ord("w")); }) == ErrorKind::NotRepresentable);
}

TEST_CASE("four-fold tower") {
  for (const char* text : {"2", "w", "w + 1", "w^2"}) {
    const Ordinal a = ord(text);
    const Ordinal tower = rec_pow(a, rec_pow(a, rec_pow(a, a)));
    CHECK(hyperop(4, a, n(4)) == tower);
  }
}

TEST_CASE("index omega") {
  CHECK(hyperop(ord("w"), n(3), n(3)) == ord("w"));
  CHECK(hyperop(ord("w"), n(2), n(2)) == n(4));
  CHECK(hyperop(ord("w"), n(5), n(1)) == n(5));
  CHECK(hyperop(ord("w"), n(5), n(0)) == n(1));
  CHECK(kind_of([] { hyperop(ord("w"), ord("w"), n(2)); }) == ErrorKind::Unsupported);
  CHECK(kind_of([] { hyperop(ord("w*2"), n(2), n(2)); }) == ErrorKind::Unsupported);
}

TEST_CASE("resource limits") {
  CHECK(kind_of([] { hyperop(5, n(3), n(3)); }) == ErrorKind::ResourceExceeded);
  CHECK(kind_of([] { hyperop(4, ord("w"), ord("w")); }) == ErrorKind::NotRepresentable);
}

TEST_CASE("hyper-numbers") {
  CHECK(is_hyper_number(1, ord("w^2")));
  CHECK(is_hyper_number(2, ord("w^w")));
  CHECK(!is_hyper_number(2, ord("w^3")));
  CHECK(is_hyper_number(3, ord("w")));
  CHECK(!is_hyper_number(3, ord("w^w")));
  CHECK(is_hyper_number(1, n(1)));
  CHECK(!is_hyper_number(1, n(3)));
  CHECK(kind_of([] { is_hyper_number(0, ord("w")); }) == ErrorKind::Undefined);

  CHECK(next_hyper_number(1, ord("w")) == ord("w^2"));
  CHECK(next_hyper_number(2, ord("w")) == ord("w^w"));
  CHECK(next_hyper_number(2, ord("w^w")) == ord("w^(w^2)"));
  CHECK(kind_of([] { next_hyper_number(3, ord("w")); }) == ErrorKind::NotRepresentable);
  CHECK(kind_of([] { next_hyper_number(1, ord("w + 1")); }) == ErrorKind::Undefined);
}

TEST_CASE("properties: agreement with the recursive operations") {
  Rng rng(31337);
  const GenBudget budget{2, 2, 5};
  for (int i = 0; i < 1500; ++i) {
    const Ordinal a = random_ordinal(rng, budget);
    const Ordinal b = random_ordinal(rng, budget);
    CHECK(hyperop(1, a, b) == rec_add(a, b));
    CHECK(hyperop(2, a, b) == rec_mul(a, b));
    const Ordinal e = random_ordinal(rng, {1, 2, 3});
    CHECK(hyperop(3, a, e) == rec_pow(a, e));
  }
}

TEST_CASE("properties: successor clause builds towers") {
  Rng rng(8);
  EvalLimits limits;
  limits.max_bits = 1 << 12;
  for (int i = 0; i < 400; ++i) {
    const std::uint64_t idx = 2 + rng() % 3;
    const Ordinal a = rng() % 3 == 0 ? random_ordinal(rng, {1, 2, 3}) : n(rng() % 5);
    const Ordinal k = n(2 + rng() % 3);
    Ordinal lhs;
    Ordinal rhs;
    try {
      lhs = hyperop(idx + 1, a, k, limits);
      rhs = hyperop(idx, a, hyperop(idx + 1, a, rec_sub_left(n(1), k), limits), limits);
    } catch (const Error& e) {
      CHECK((e.kind() == ErrorKind::ResourceExceeded || e.kind() == ErrorKind::NotRepresentable));
      continue;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("properties: finite arguments give finite values") {
  for (std::uint64_t i = 0; i <= 6; ++i) {
    for (std::uint64_t m = 0; m <= 4; ++m) {
      for (std::uint64_t k = 0; k <= 4; ++k) {
        Ordinal v;
        try {
          v = hyperop(i, n(m), n(k));
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::ResourceExceeded);
          continue;
        }
        CHECK(v.is_finite());
      }
    }
  }
}

TEST_CASE("properties: hyper-numbers are closed") {
  Rng rng(64);
  const Ordinal cands[] = {ord("w"), ord("w^2"), ord("w^w"), ord("w^(w^2)"), ord("w^(w + 1)"), ord("w^3")};
  for (std::uint64_t level = 1; level <= 3; ++level) {
    for (const auto& lambda : cands) {
      if (!is_hyper_number(level, lambda)) continue;
      for (int j = 0; j < 200; ++j) {
        const Ordinal x = random_ordinal(rng, {2, 2, 4});
        const Ordinal y = random_ordinal(rng, {2, 2, 4});
        if (!(x < lambda && y < lambda)) continue;
        Ordinal v;
        try {
          v = hyperop(level, x, y);
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::ResourceExceeded);
          continue;
        }
        CHECK(v < lambda);
      }
    }
  }
}

TEST_CASE("definitional unfolding agrees on the fragment") {
  int compared = 0;
  oracle::Unfolder u(64);
  for (std::uint64_t xa = 0; xa <= 4; ++xa) {
    for (std::uint64_t xb = 0; xb <= 6; ++xb) {
      for (std::uint64_t ya = 0; ya <= 4; ++ya) {
        for (std::uint64_t yb = 0; yb <= 6; ++yb) {
          const oracle::SmallOrdinal x{xa, xb};
          const oracle::SmallOrdinal y{ya, yb};
          const Ordinal ex = oracle::embed(x);
          const Ordinal ey = oracle::embed(y);
          for (std::uint64_t idx = 1; idx <= 3; ++idx) {
            oracle::SmallOrdinal expected;
            try {
              expected = idx == 1 ? u.add(x, y) : idx == 2 ? u.mul(x, y) : u.pow(x, y);
            } catch (const Error& e) {
              CHECK(e.kind() == ErrorKind::FragmentExceeded);
              continue;
            }
            CHECK(oracle::embed(expected) == hyperop(idx, ex, ey));
            ++compared;
          }
        }
      }
    }
  }
  CHECK(compared > 1000);
}
