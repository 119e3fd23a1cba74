#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transfinita {

enum class ErrorKind {
  NotRepresentable,  // value would reach or exceed epsilon_0
  ResourceExceeded,  // finite but beyond the configured magnitude cap
  DivisionByZero,
  Undefined,         // operation outside its domain (e.g. left subtraction with a >= b)
  Unsupported,       // well-defined, but outside the evaluable fragment
  InvalidLambda,     // truncation index is neither omega nor a x-number
  OutOfField,        // value not a member of the ambient Q_lambda
  FragmentExceeded,  // oracle result leaves the omega*a+b fragment
  Inconclusive,      // bounded search exhausted without a decision
  InvalidArgument,   // malformed input value (bad normal form, bad literal)
  OracleMismatch,    // closed form and definitional unfolding disagree
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Arithmetic failure. Carries the kind and the name of the operation that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string op, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& op() const noexcept { return op_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string op_;
  std::string detail_;
};

}  // namespace transfinita
