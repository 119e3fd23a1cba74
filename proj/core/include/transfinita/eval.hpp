#pragma once

// Evaluation of parsed expressions.
//
// "+" and "*" are the natural (commutative) operations on ordinals and the
// ring/field operations above them; "+.", "*." and "-." are the recursive
// ordinal operations; "^" is recursive exponentiation between ordinals and a
// repeated product otherwise; "^^" is tetration; "/" forms surrationals.
// Operands are promoted to the higher of their two levels, never demoted,
// except that the ordinal-only operators accept any value equal to an ordinal.

#include <map>
#include <string>
#include <vector>

#include "transfinita/error.hpp"
#include "transfinita/expr.hpp"
#include "transfinita/limits.hpp"
#include "transfinita/value.hpp"

namespace transfinita {

struct Env {
  std::map<std::string, Value> vars;
  /// Ambient truncation index for member(...) and classify(...).
  Ordinal lambda = Ordinal::omega_power(Ordinal::omega());
  EvalLimits limits;
  /// Cross-check recursive operations on fragment arguments against the definitional oracle.
  bool oracle = false;
  /// Receives one line per oracle comparison when set.
  std::vector<std::string>* oracle_log = nullptr;
};

/// An arithmetic error tagged with the position of the sub-expression that raised it.
class EvalError : public Error {
 public:
  EvalError(const Error& e, SourcePos pos) : Error(e.kind(), e.op(), e.detail()), pos_(pos) {}
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

/// Throws EvalError.
Value eval(const Expr& e, const Env& env);

/// parse then eval; a parse failure throws EvalError(InvalidArgument) at the diagnostic position.
Value eval_text(std::string_view text, const Env& env);

}  // namespace transfinita
