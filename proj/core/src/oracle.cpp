#include "transfinita/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "transfinita/error.hpp"

namespace transfinita::oracle {

namespace {

constexpr const char* kOp = "oracle";
// Points sampled along the cofinal sequence omega*(a-1) + n, n = 0..kSamples-1.
constexpr std::uint64_t kSamples = 8;
// Limit clauses recurse once per omega in the argument, so the omega
// component of every argument stays below this cap to bound stack depth.
constexpr std::uint64_t kMaxOmegaDepth = 4096;

[[noreturn]] void exceeded(const char* why) { throw Error(ErrorKind::FragmentExceeded, kOp, why); }

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  if (y > std::numeric_limits<std::uint64_t>::max() - x) exceeded("component overflow");
  return x + y;
}

}  // namespace

SmallOrdinal Unfolder::bounded(SmallOrdinal v) const {
  if (v.a > bound_ || v.b > bound_) exceeded("result outside the fragment bound");
  return v;
}

SmallOrdinal Unfolder::add(SmallOrdinal x, SmallOrdinal y) { return bounded(run(Op::Add, x, y)); }
SmallOrdinal Unfolder::mul(SmallOrdinal x, SmallOrdinal y) { return bounded(run(Op::Mul, x, y)); }
SmallOrdinal Unfolder::pow(SmallOrdinal x, SmallOrdinal y) { return bounded(run(Op::Pow, x, y)); }

SmallOrdinal Unfolder::run(Op op, SmallOrdinal x, SmallOrdinal y) {
  const auto key = std::make_tuple(op, x, y);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (y.a > kMaxOmegaDepth) exceeded("argument too deep for literal unfolding");

  SmallOrdinal v;
  if (y.a == 0 && y.b == 0) {
    // Zero clauses: x +. 0 = x, x *. 0 = 0, x ^ 0 = 1.
    switch (op) {
      case Op::Add: v = x; break;
      case Op::Mul: v = {0, 0}; break;
      case Op::Pow: v = {0, 1}; break;
    }
  } else if (y.b > 0) {
    // Successor clauses.
    const SmallOrdinal prev = run(op, x, {y.a, y.b - 1});
    switch (op) {
      case Op::Add: v = {prev.a, checked_add(prev.b, 1)}; break;
      case Op::Mul: v = run(Op::Add, prev, x); break;
      case Op::Pow: v = run(Op::Mul, prev, x); break;
    }
  } else {
    v = limit(op, x, y);
  }
  memo_.emplace(key, v);
  return v;
}

// Supremum of f(d) over d < omega*a: the value at omega*(a-1) (itself the
// supremum below it when a > 1) joined with the tail omega*(a-1) + n.
SmallOrdinal Unfolder::limit(Op op, SmallOrdinal x, SmallOrdinal y) {
  const std::uint64_t base = y.a - 1;
  std::vector<SmallOrdinal> tail;
  for (std::uint64_t n = 0; n < kSamples; ++n) tail.push_back(run(op, x, {base, n}));

  const SmallOrdinal& p = tail[kSamples - 3];
  const SmallOrdinal& q = tail[kSamples - 2];
  const SmallOrdinal& r = tail[kSamples - 1];
  SmallOrdinal sup;
  if (p == q && q == r) {
    sup = r;
  } else if (p.a == q.a && q.a == r.a && p.b < q.b && q.b < r.b) {
    sup = {checked_add(r.a, 1), 0};
  } else {
    exceeded("supremum leaves degree 1");
  }
  for (const auto& t : tail) sup = std::max(sup, t);
  return sup;
}

SmallOrdinal def_rec_add(SmallOrdinal x, SmallOrdinal y, std::uint64_t bound) { return Unfolder(bound).add(x, y); }
SmallOrdinal def_rec_mul(SmallOrdinal x, SmallOrdinal y, std::uint64_t bound) { return Unfolder(bound).mul(x, y); }
SmallOrdinal def_rec_pow(SmallOrdinal x, SmallOrdinal y, std::uint64_t bound) { return Unfolder(bound).pow(x, y); }

Ordinal embed(SmallOrdinal x) {
  OrdinalBuilder b;
  if (x.a > 0) b.push(Ordinal::from_natural(1), BigInt(static_cast<unsigned long>(x.a)));
  if (x.b > 0) b.push(Ordinal{}, BigInt(static_cast<unsigned long>(x.b)));
  return std::move(b).build();
}

std::optional<SmallOrdinal> project(const Ordinal& a) {
  SmallOrdinal out;
  const Ordinal one = Ordinal::from_natural(1);
  for (const auto& t : a.terms()) {
    if (!t.coefficient.fits_ulong_p()) return std::nullopt;
    if (t.exponent == one) {
      out.a = t.coefficient.get_ui();
    } else if (t.exponent.is_zero()) {
      out.b = t.coefficient.get_ui();
    } else {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace transfinita::oracle
