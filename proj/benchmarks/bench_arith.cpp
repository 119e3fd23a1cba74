#include <benchmark/benchmark.h>

#include <vector>

#include "transfinita/eval.hpp"
#include "transfinita/format.hpp"
#include "transfinita/hyperop.hpp"
#include "transfinita/natural.hpp"
#include "transfinita/oracle.hpp"
#include "transfinita/parser.hpp"
#include "transfinita/random.hpp"

namespace {

using namespace transfinita;

constexpr std::size_t kPool = 256;

template <typename T, typename Gen>
std::vector<T> pool(Gen gen, GenBudget budget = {}) {
  Rng rng(42);
  std::vector<T> out;
  for (std::size_t i = 0; i < kPool; ++i) out.push_back(gen(rng, budget));
  return out;
}

void BM_RecAdd(benchmark::State& state) {
  const auto xs = pool<Ordinal>(random_ordinal);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rec_add(xs[i % kPool], xs[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_RecAdd);

void BM_RecMul(benchmark::State& state) {
  const auto xs = pool<Ordinal>(random_ordinal);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rec_mul(xs[i % kPool], xs[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_RecMul);

void BM_NatMul(benchmark::State& state) {
  const auto xs = pool<Ordinal>(random_ordinal);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nat_mul(xs[i % kPool], xs[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_NatMul);

void BM_RecPowFinite(benchmark::State& state) {
  const Ordinal base = Ordinal::from_natural(3);
  const Ordinal exp = Ordinal::from_natural(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rec_pow(base, exp));
}
BENCHMARK(BM_RecPowFinite)->Arg(64)->Arg(4096)->Arg(262144);

void BM_Tetration(benchmark::State& state) {
  const Ordinal w = Ordinal::omega();
  const Ordinal k = Ordinal::from_natural(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tetration(w, k));
}
BENCHMARK(BM_Tetration)->Arg(2)->Arg(4)->Arg(8);

void BM_SurIntegerMul(benchmark::State& state) {
  const auto xs = pool<SurInteger>(random_surinteger, {2, static_cast<unsigned>(state.range(0)), 9});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(si_mul(xs[i % kPool], xs[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_SurIntegerMul)->Arg(3)->Arg(8)->Arg(16);

void BM_SurRationalAdd(benchmark::State& state) {
  const auto xs = pool<SurRational>(random_surrational);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_add(xs[i % kPool], xs[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_SurRationalAdd);

void BM_SurRationalMul(benchmark::State& state) {
  const auto xs = pool<SurRational>(random_surrational);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_mul(xs[i % kPool], xs[(i + 1) % kPool]));
    ++i;
  }
}
BENCHMARK(BM_SurRationalMul);

void BM_Reduce(benchmark::State& state) {
  Rng rng(7);
  std::vector<SurRational> xs;
  for (std::size_t i = 0; i < kPool; ++i) {
    const SurInteger f = random_surinteger(rng, {1, 3, 9});
    const SurInteger a = random_surinteger(rng, {1, 3, 9});
    SurInteger b = random_surinteger(rng, {1, 3, 9});
    if (b.is_zero()) b = SurInteger::from_integer(1);
    xs.emplace_back(si_mul(f, a), si_mul(f.is_zero() ? b : f, b));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(xs[i % kPool]));
    ++i;
  }
}
BENCHMARK(BM_Reduce);

void BM_OracleFragmentSweep(benchmark::State& state) {
  for (auto _ : state) {
    oracle::Unfolder u(oracle::kDefaultBound);
    for (std::uint64_t a = 0; a <= 6; ++a) {
      for (std::uint64_t b = 0; b <= 6; ++b) {
        try {
          benchmark::DoNotOptimize(u.mul({a, b}, {b, a}));
        } catch (const Error&) {
        }
      }
    }
  }
}
BENCHMARK(BM_OracleFragmentSweep);

void BM_ParseEval(benchmark::State& state) {
  const std::string text = "(w^5*4 - w^4*2 - w^2*7 + w*3 - 1) * (w + 1) / (w^2 - 1)";
  const Env env;
  for (auto _ : state) benchmark::DoNotOptimize(eval_text(text, env));
}
BENCHMARK(BM_ParseEval);

void BM_PrintCanonical(benchmark::State& state) {
  const auto xs = pool<SurRational>(random_surrational);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(print_canonical(xs[i % kPool]));
    ++i;
  }
}
BENCHMARK(BM_PrintCanonical);

}  // namespace

BENCHMARK_MAIN();
