#include "transfinita/parser.hpp"

#include <cctype>
#include <utility>

namespace transfinita {

std::string_view symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::NatAdd: return "+";
    case BinaryOp::NatMul: return "*";
    case BinaryOp::RecAdd: return "+.";
    case BinaryOp::RecMul: return "*.";
    case BinaryOp::Pow: return "^";
    case BinaryOp::Tetra: return "^^";
    case BinaryOp::Frac: return "/";
    case BinaryOp::RecSub: return "-.";
    case BinaryOp::Sub: return "-";
  }
  return "?";
}

std::string dump(const Expr& e) {
  struct Visitor {
    std::string operator()(const Expr::NatLiteral& n) const { return to_decimal(n.value); }
    std::string operator()(const Expr::Omega&) const { return "w"; }
    std::string operator()(const Expr::Eps0&) const { return "eps0"; }
    std::string operator()(const Expr::ImagUnit&) const { return "i"; }
    std::string operator()(const Expr::Var& v) const { return v.name; }
    std::string operator()(const Expr::Neg& n) const { return "(-" + dump(*n.operand) + ")"; }
    std::string operator()(const Expr::Binary& b) const {
      return "(" + dump(*b.lhs) + " " + std::string(symbol(b.op)) + " " + dump(*b.rhs) + ")";
    }
    std::string operator()(const Expr::Hyper& h) const {
      return "H[" + dump(*h.index) + "](" + dump(*h.a) + ", " + dump(*h.b) + ")";
    }
    std::string operator()(const Expr::Call& c) const {
      std::string s = c.name;
      if (c.index) s += "[" + dump(*c.index) + "]";
      s += "(";
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i > 0) s += ", ";
        s += dump(*c.args[i]);
      }
      return s + ")";
    }
    std::string operator()(const Expr::Complex& c) const { return "(" + dump(*c.re) + ", " + dump(*c.im) + ")"; }
  };
  return std::visit(Visitor{}, e.node);
}

std::string Diagnostic::to_string() const {
  std::string s = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) s += i + 1 == expected.size() ? " or " : ", ";
      s += expected[i];
    }
    s += ")";
  }
  return s;
}

namespace {

enum class Tok { Number, Ident, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

struct ParseFailure {
  Diagnostic diag;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const SourcePos at = pos_;
      if (i_ == src_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      const char c = src_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Tok::Number, take_while([](char x) { return std::isdigit(static_cast<unsigned char>(x)) != 0; }), at});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back({Tok::Ident, take_while([](char x) { return std::isalnum(static_cast<unsigned char>(x)) || x == '_'; }), at});
      } else {
        out.push_back({Tok::Symbol, symbol_at(at), at});
      }
    }
  }

 private:
  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
  }

  template <class Pred>
  std::string take_while(Pred pred) {
    std::string s;
    while (i_ < src_.size() && pred(src_[i_])) {
      s += src_[i_];
      advance();
    }
    return s;
  }

  std::string symbol_at(SourcePos at) {
    const char c = src_[i_];
    const char next = i_ + 1 < src_.size() ? src_[i_ + 1] : '\0';
    std::string s(1, c);
    if ((c == '+' || c == '*' || c == '-') && next == '.') {
      s += '.';
    } else if (c == '^' && next == '^') {
      s += '^';
    } else if (std::string_view("+-*/^()[],").find(c) == std::string_view::npos) {
      throw ParseFailure{{at, "unexpected character '" + std::string(1, c) + "'", {}}};
    }
    for (std::size_t k = 0; k < s.size(); ++k) advance();
    return s;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = sum();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()), {"operator", "end of input"});
    return e;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxParseDepth) p_.fail("expression nested too deeply", {});
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_ == toks_.size() - 1 ? i_ : i_++]; }
  bool at_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Number: return "number '" + t.text + "'";
      case Tok::Ident: return "identifier '" + t.text + "'";
      case Tok::Symbol: return "'" + t.text + "'";
      case Tok::End: return "end of input";
    }
    return "token";
  }

  [[noreturn]] void fail(std::string message, std::vector<std::string> expected) const {
    throw ParseFailure{{peek().pos, std::move(message), std::move(expected)}};
  }

  void expect(std::string_view s) {
    if (!at_symbol(s)) fail("unexpected " + describe(peek()), {"'" + std::string(s) + "'"});
    next();
  }

  static ExprPtr make(Expr::Binary b, SourcePos pos) { return std::make_shared<const Expr>(Expr{std::move(b), pos}); }

  ExprPtr sum() {
    DepthGuard guard(*this);
    ExprPtr lhs = term();
    for (;;) {
      BinaryOp op;
      if (at_symbol("+")) {
        op = BinaryOp::NatAdd;
      } else if (at_symbol("+.")) {
        op = BinaryOp::RecAdd;
      } else if (at_symbol("-")) {
        op = BinaryOp::Sub;
      } else if (at_symbol("-.")) {
        op = BinaryOp::RecSub;
      } else {
        return lhs;
      }
      const SourcePos pos = next().pos;
      lhs = make({op, lhs, term()}, pos);
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      BinaryOp op;
      if (at_symbol("*")) {
        op = BinaryOp::NatMul;
      } else if (at_symbol("*.")) {
        op = BinaryOp::RecMul;
      } else if (at_symbol("/")) {
        op = BinaryOp::Frac;
      } else {
        return lhs;
      }
      const SourcePos pos = next().pos;
      lhs = make({op, lhs, unary()}, pos);
    }
  }

  ExprPtr unary() {
    DepthGuard guard(*this);
    if (at_symbol("-")) {
      const SourcePos pos = next().pos;
      return std::make_shared<const Expr>(Expr{Expr::Neg{unary()}, pos});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (at_symbol("^") || at_symbol("^^")) {
      const Token op = next();
      return make({op.text == "^" ? BinaryOp::Pow : BinaryOp::Tetra, base, unary()}, op.pos);
    }
    return base;
  }

  std::vector<ExprPtr> arguments() {
    expect("(");
    std::vector<ExprPtr> args;
    if (at_symbol(")")) {
      next();
      return args;
    }
    args.push_back(sum());
    while (at_symbol(",")) {
      next();
      args.push_back(sum());
    }
    if (!at_symbol(")")) fail("unexpected " + describe(peek()), {"','", "')'"});
    next();
    return args;
  }

  ExprPtr primary() {
    const Token t = peek();
    auto leaf = [&](auto node) { return std::make_shared<const Expr>(Expr{std::move(node), t.pos}); };
    switch (t.kind) {
      case Tok::Number:
        next();
        return leaf(Expr::NatLiteral{BigInt(t.text, 10)});
      case Tok::Ident: {
        next();
        if (at_symbol("[")) {
          next();
          ExprPtr index = sum();
          expect("]");
          std::vector<ExprPtr> args = arguments();
          if (t.text == "H") {
            if (args.size() != 2) throw ParseFailure{{t.pos, "H[n](a, b) takes two arguments", {}}};
            return leaf(Expr::Hyper{index, args[0], args[1]});
          }
          return leaf(Expr::Call{t.text, index, std::move(args)});
        }
        if (at_symbol("(")) return leaf(Expr::Call{t.text, nullptr, arguments()});
        if (t.text == "w") return leaf(Expr::Omega{});
        if (t.text == "eps0") return leaf(Expr::Eps0{});
        if (t.text == "i") return leaf(Expr::ImagUnit{});
        return leaf(Expr::Var{t.text});
      }
      case Tok::Symbol:
        if (t.text == "(") {
          next();
          ExprPtr first = sum();
          if (at_symbol(",")) {
            next();
            ExprPtr second = sum();
            expect(")");
            return leaf(Expr::Complex{first, second});
          }
          if (!at_symbol(")")) fail("unexpected " + describe(peek()), {"','", "')'"});
          next();
          return first;
        }
        break;
      case Tok::End:
        break;
    }
    fail("unexpected " + describe(t), {"number", "'w'", "identifier", "'('", "'-'"});
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

std::variant<ExprPtr, Diagnostic> parse(std::string_view input) {
  try {
    return Parser(Lexer(input).run()).run();
  } catch (const ParseFailure& f) {
    return f.diag;
  }
}

}  // namespace transfinita
