#pragma once

// Literal successor/limit recursion for +., *. and ^ on ordinals below
// omega^2. Shares no code with the closed forms in ordinal.hpp and serves as
// an independent check on them.

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "transfinita/ordinal.hpp"

namespace transfinita::oracle {

/// omega*a + b.
struct SmallOrdinal {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend auto operator<=>(const SmallOrdinal&, const SmallOrdinal&) = default;
};

/// Largest a and b a returned value may carry. Intermediate values are unbounded.
inline constexpr std::uint64_t kDefaultBound = 8;

/// Evaluates the recursive definitions, memoizing every intermediate value.
/// A result outside the fragment (degree 2 or above, or a component above
/// the bound) throws FragmentExceeded.
class Unfolder {
 public:
  explicit Unfolder(std::uint64_t bound = kDefaultBound) : bound_(bound) {}

  SmallOrdinal add(SmallOrdinal x, SmallOrdinal y);
  SmallOrdinal mul(SmallOrdinal x, SmallOrdinal y);
  SmallOrdinal pow(SmallOrdinal x, SmallOrdinal y);

 private:
  enum class Op { Add, Mul, Pow };

  SmallOrdinal run(Op op, SmallOrdinal x, SmallOrdinal y);
  SmallOrdinal limit(Op op, SmallOrdinal x, SmallOrdinal y);
  SmallOrdinal bounded(SmallOrdinal v) const;

  std::uint64_t bound_;
  std::map<std::tuple<Op, SmallOrdinal, SmallOrdinal>, SmallOrdinal> memo_;
};

SmallOrdinal def_rec_add(SmallOrdinal x, SmallOrdinal y, std::uint64_t bound = kDefaultBound);
SmallOrdinal def_rec_mul(SmallOrdinal x, SmallOrdinal y, std::uint64_t bound = kDefaultBound);
SmallOrdinal def_rec_pow(SmallOrdinal x, SmallOrdinal y, std::uint64_t bound = kDefaultBound);

Ordinal embed(SmallOrdinal x);
/// The fragment element equal to a, if a < omega^2 and fits.
std::optional<SmallOrdinal> project(const Ordinal& a);

}  // namespace transfinita::oracle
