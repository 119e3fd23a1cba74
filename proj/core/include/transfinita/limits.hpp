#pragma once

#include <cstddef>
#include <cstdint>

namespace transfinita {

/// Evaluation budget, passed explicitly to anything that can blow up.
struct EvalLimits {
  /// Largest finite coefficient (in bits) an operation may produce.
  std::uint64_t max_bits = std::uint64_t{1} << 22;
  /// Largest exponent-nesting height of a produced ordinal.
  std::size_t max_height = 4096;
  /// Largest number of CNF terms in a produced value.
  std::size_t max_terms = std::size_t{1} << 16;
  /// Samples taken along a cofinal sequence when evaluating a supremum clause.
  unsigned sup_samples = 6;
  /// Highest finite hyperoperation index tried when evaluating a limit index.
  unsigned index_depth = 48;
};

}  // namespace transfinita
