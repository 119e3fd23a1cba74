#pragma once

// Recursive-descent parser for the expression language.
//
//   sum     := term (("+" | "+." | "-" | "-.") term)*
//   term    := unary (("*" | "*." | "/") unary)*
//   unary   := "-" unary | power
//   power   := primary [("^" | "^^") unary]
//   primary := NUMBER | "w" | "eps0" | "i" | IDENT
//            | IDENT "(" sum ("," sum)* ")"
//            | IDENT "[" sum "]" "(" sum ("," sum)* ")"
//            | "(" sum ")" | "(" sum "," sum ")"
//
// "H[n](a, b)" is the hyperoperation; other bracketed calls such as
// "sqrt[n](q)" keep the bracket argument as Call::index.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "transfinita/expr.hpp"

namespace transfinita {

struct Diagnostic {
  SourcePos pos;
  std::string message;
  /// Token kinds that would have been accepted at pos.
  std::vector<std::string> expected;

  /// "line:column: message (expected ...)".
  std::string to_string() const;
};

/// Deepest allowed nesting of sub-expressions.
inline constexpr std::size_t kMaxParseDepth = 256;

std::variant<ExprPtr, Diagnostic> parse(std::string_view input);

}  // namespace transfinita
