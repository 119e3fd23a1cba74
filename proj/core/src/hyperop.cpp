#include "transfinita/hyperop.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "transfinita/error.hpp"

namespace transfinita {

namespace {

constexpr const char* kOp = "hyperop";

Ordinal limit_of(const std::vector<Ordinal>& values);

// Values of H_n(a, .) for one fixed left argument, memoized across the
// recursive unfolding of a single top-level call.
class FixedBase {
 public:
  FixedBase(const Ordinal& a, const EvalLimits& limits) : a_(a), limits_(limits) {}

  Ordinal eval(std::uint64_t n, const Ordinal& b) {
    switch (n) {
      case 0: return successor(a_);
      case 1: return rec_add(a_, b);
      case 2: return rec_mul(a_, b);
      case 3: return checked(rec_pow(a_, b, limits_));
      default: break;
    }
    const Ordinal one = Ordinal::from_natural(1);
    if (b.is_zero()) return one;
    if (b == one) return a_;
    if (a_.is_zero()) return finite_part_is_even(b) ? one : Ordinal{};
    if (a_ == one) return one;

    auto key = std::make_pair(n, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Ordinal v = classify(b) == OrdinalClass::Limit ? sup_along(n, b) : unfold(n, b);
    memo_.emplace(std::move(key), v);
    return v;
  }

 private:
  static bool finite_part_is_even(const Ordinal& b) {
    const auto& last = b.terms().back();
    if (!last.exponent.is_zero()) return true;
    return mpz_even_p(last.coefficient.get_mpz_t()) != 0;
  }

  Ordinal checked(Ordinal v) const {
    if (v.height() > limits_.max_height || v.size() > limits_.max_terms) {
      throw Error(ErrorKind::ResourceExceeded, kOp, "value exceeds the height or term budget");
    }
    return v;
  }

  // b = L + k with k >= 1: H_n(a, L) followed by k applications of H_{n-1}(a, .).
  Ordinal unfold(std::uint64_t n, const Ordinal& b) {
    OrdinalBuilder limit_part;
    BigInt k = 0;
    for (const auto& t : b.terms()) {
      if (t.exponent.is_zero()) {
        k = t.coefficient;
      } else {
        limit_part.push(t);
      }
    }
    const Ordinal L = std::move(limit_part).build();
    Ordinal v;
    if (L.is_zero()) {
      v = a_;
      k -= 1;
    } else {
      v = eval(n, L);
    }
    for (; k > 0; k -= 1) {
      Ordinal next = checked(eval(n - 1, v));
      if (next == v) break;
      v = std::move(next);
    }
    return v;
  }

  Ordinal sup_along(std::uint64_t n, const Ordinal& b) {
    std::vector<Ordinal> values;
    for (unsigned k = 1; k <= limits_.sup_samples; ++k) {
      try {
        values.push_back(eval(n, cofinal_element(b, k)));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ResourceExceeded && finite_and_increasing(values)) return Ordinal::omega();
        throw;
      }
    }
    return limit_of(values);
  }

  static bool finite_and_increasing(const std::vector<Ordinal>& values) {
    if (values.empty()) return false;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i].is_finite()) return false;
      if (i > 0 && !(values[i - 1] < values[i])) return false;
    }
    return true;
  }

  const Ordinal& a_;
  const EvalLimits& limits_;
  std::map<std::pair<std::uint64_t, Ordinal>, Ordinal> memo_;
};

// Supremum of a non-decreasing sequence read off its last three samples.
Ordinal limit_of(const Ordinal& x, const Ordinal& y, const Ordinal& z) {
  if (y == z) return z;
  if (!(x <= y && y < z)) throw Error(ErrorKind::Unsupported, kOp, "supremum sequence is not increasing");
  if (x.height() < y.height() && y.height() < z.height()) {
    throw Error(ErrorKind::NotRepresentable, kOp, "supremum reaches epsilon_0");
  }
  const auto xt = x.terms();
  const auto yt = y.terms();
  const auto zt = z.terms();
  std::size_t i = 0;
  while (i < xt.size() && i < yt.size() && i < zt.size() && xt[i] == yt[i] && yt[i] == zt[i]) ++i;
  if (i >= xt.size() || i >= yt.size() || i >= zt.size()) {
    throw Error(ErrorKind::Unsupported, kOp, "supremum sequence has no recognized shape");
  }
  OrdinalBuilder prefix;
  for (std::size_t j = 0; j < i; ++j) prefix.push(zt[j]);
  const Ordinal p = std::move(prefix).build();
  const auto& ex = xt[i].exponent;
  const auto& ey = yt[i].exponent;
  const auto& ez = zt[i].exponent;
  if (ex == ey && ey == ez) {
    if (xt[i].coefficient < yt[i].coefficient && yt[i].coefficient < zt[i].coefficient) {
      return rec_add(p, Ordinal::omega_power(successor(ez)));
    }
  } else if (ex < ey && ey < ez) {
    return rec_add(p, Ordinal::omega_power(limit_of(ex, ey, ez)));
  }
  throw Error(ErrorKind::Unsupported, kOp, "supremum sequence has no recognized shape");
}

Ordinal limit_of(const std::vector<Ordinal>& values) {
  if (values.size() < 3) throw Error(ErrorKind::Unsupported, kOp, "too few supremum samples");
  const auto n = values.size();
  return limit_of(values[n - 3], values[n - 2], values[n - 1]);
}

// Supremum over finite indices for finite arguments.
Ordinal omega_index(const Ordinal& a, const Ordinal& b, const EvalLimits& limits) {
  if (!a.is_finite() || !b.is_finite()) {
    throw Error(ErrorKind::Unsupported, kOp, "index omega needs finite arguments");
  }
  if (b.is_zero()) return Ordinal::from_natural(1);
  if (b == Ordinal::from_natural(1)) return a;
  constexpr unsigned kStableRun = 8;
  Ordinal best;
  unsigned unchanged = 0;
  for (unsigned rho = 0; rho <= limits.index_depth; ++rho) {
    Ordinal v;
    try {
      v = hyperop(HyperIndex(std::uint64_t{rho}), a, b, limits);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ResourceExceeded) return Ordinal::omega();
      throw;
    }
    if (best < v) {
      best = std::move(v);
      unchanged = 0;
    } else if (++unchanged >= kStableRun) {
      return best;
    }
  }
  throw Error(ErrorKind::Unsupported, kOp, "finite-index values did not settle");
}

}  // namespace

Ordinal hyperop(const HyperIndex& idx, const Ordinal& a, const Ordinal& b, const EvalLimits& limits) {
  if (idx.index == Ordinal::omega()) return omega_index(a, b, limits);
  const auto n = idx.index.as_natural();
  if (!n) throw Error(ErrorKind::Unsupported, kOp, "limit index other than omega");
  if (!n->fits_ulong_p()) throw Error(ErrorKind::ResourceExceeded, kOp, "index too large");
  FixedBase f(a, limits);
  return f.eval(n->get_ui(), b);
}

Ordinal tetration(const Ordinal& a, const Ordinal& b, const EvalLimits& limits) {
  return hyperop(HyperIndex(std::uint64_t{4}), a, b, limits);
}

namespace {

bool is_omega_power(const Ordinal& a) { return a.size() == 1 && a.leading().coefficient == 1; }

// Finite arguments below 5 are decided by evaluating every pair below them.
bool finite_closed(std::uint64_t n, std::uint64_t a, const EvalLimits& limits) {
  if (a >= 5) return false;
  const Ordinal bound = Ordinal::from_natural(a);
  for (std::uint64_t x = 0; x < a; ++x) {
    for (std::uint64_t y = 0; y < a; ++y) {
      try {
        if (!(hyperop(HyperIndex(n), Ordinal::from_natural(x), Ordinal::from_natural(y), limits) < bound)) {
          return false;
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ResourceExceeded) return false;
        throw;
      }
    }
  }
  return true;
}

}  // namespace

bool is_hyper_number(std::uint64_t n, const Ordinal& a, const EvalLimits& limits) {
  if (n == 0) throw Error(ErrorKind::Undefined, "is_hyper_number", "index 0 has no closure numbers");
  if (auto v = a.as_natural()) return v->fits_ulong_p() && finite_closed(n, v->get_ui(), limits);
  switch (n) {
    case 1: return is_omega_power(a);
    case 2: return is_omega_power(a) && is_omega_power(a.leading_exponent());
    default: return a == Ordinal::omega();
  }
}

Ordinal next_hyper_number(std::uint64_t n, const Ordinal& a, const EvalLimits& limits) {
  if (!is_hyper_number(n, a, limits)) {
    throw Error(ErrorKind::Undefined, "next_hyper_number", "argument is not a closure number of this index");
  }
  if (auto v = a.as_natural()) {
    for (std::uint64_t c = v->get_ui() + 1; c < 5; ++c) {
      if (is_hyper_number(n, Ordinal::from_natural(c), limits)) return Ordinal::from_natural(c);
    }
    return Ordinal::omega();
  }
  return hyperop(HyperIndex(n + 1), a, Ordinal::omega(), limits);
}

}  // namespace transfinita
