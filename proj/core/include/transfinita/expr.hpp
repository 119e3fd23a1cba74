#pragma once

// Abstract syntax of the expression language.

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "transfinita/bigint.hpp"

namespace transfinita {

/// 1-based source position.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class BinaryOp {
  NatAdd,  // +
  NatMul,  // *
  RecAdd,  // +.
  RecMul,  // *.
  Pow,     // ^
  Tetra,   // ^^
  Frac,    // /
  RecSub,  // -.
  Sub,     // -
};

std::string_view symbol(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct NatLiteral {
    BigInt value;
  };
  struct Omega {};
  struct Eps0 {};
  struct ImagUnit {};
  struct Var {
    std::string name;
  };
  struct Neg {
    ExprPtr operand;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  /// H[index](a, b)
  struct Hyper {
    ExprPtr index;
    ExprPtr a;
    ExprPtr b;
  };
  /// name(args) or name[index](args); index is null when absent.
  struct Call {
    std::string name;
    ExprPtr index;
    std::vector<ExprPtr> args;
  };
  /// (re, im)
  struct Complex {
    ExprPtr re;
    ExprPtr im;
  };

  std::variant<NatLiteral, Omega, Eps0, ImagUnit, Var, Neg, Binary, Hyper, Call, Complex> node;
  SourcePos pos;
};

/// Fully parenthesized rendering of the tree, for diagnostics and tests.
std::string dump(const Expr& e);

}  // namespace transfinita
