#include "transfinita/eval.hpp"

#include <algorithm>

#include "transfinita/cuts.hpp"
#include "transfinita/format.hpp"
#include "transfinita/hyperop.hpp"
#include "transfinita/natural.hpp"
#include "transfinita/oracle.hpp"
#include "transfinita/parser.hpp"

namespace transfinita {

namespace {

// Oracle comparisons accept results up to omega*64 + 64.
constexpr std::uint64_t kOracleBound = 64;

Value promote_to(const Value& v, std::size_t level) {
  switch (level) {
    case 0: return v;
    case 1: return to_surinteger(v);
    case 2: return to_surrational(v);
    default: return to_gaussian(v);
  }
}

void require_numeric(const Value& v, const char* op) {
  if (!is_numeric(v)) {
    throw Error(ErrorKind::InvalidArgument, op, std::string("expected a number, got ") + std::string(type_name(v)));
  }
}

BigInt to_integer(const Value& v, const char* op) {
  if (is_numeric(v)) {
    const GaussianSurRational g = to_gaussian(v);
    if (g.im.is_zero()) {
      if (auto s = g.re.as_surinteger()) {
        if (auto n = s->as_integer()) return *n;
      }
    }
  }
  throw Error(ErrorKind::InvalidArgument, op, "expected an integer");
}

std::uint64_t to_small_natural(const Value& v, const char* op) {
  const BigInt n = to_integer(v, op);
  if (n < 0 || !n.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, op, "expected a small natural number");
  return n.get_ui();
}

class Evaluator {
 public:
  explicit Evaluator(const Env& env) : env_(env) {}

  Value eval(const Expr& e) {
    try {
      return std::visit([&](const auto& node) { return this->node(node, e); }, e.node);
    } catch (const EvalError&) {
      throw;
    } catch (const Error& err) {
      throw EvalError(err, e.pos);
    }
  }

 private:
  Value node(const Expr::NatLiteral& n, const Expr&) { return Ordinal::from_natural(n.value); }
  Value node(const Expr::Omega&, const Expr&) { return Ordinal::omega(); }
  Value node(const Expr::Eps0&, const Expr&) {
    throw Error(ErrorKind::NotRepresentable, "eps0", "epsilon_0 is outside the representable range");
  }
  Value node(const Expr::ImagUnit&, const Expr&) { return cx_i(); }

  Value node(const Expr::Var& v, const Expr&) {
    auto it = env_.vars.find(v.name);
    if (it == env_.vars.end()) throw Error(ErrorKind::InvalidArgument, "eval", "unknown name '" + v.name + "'");
    return it->second;
  }

  Value node(const Expr::Neg& n, const Expr&) {
    const Value v = eval(*n.operand);
    require_numeric(v, "-");
    switch (std::max<std::size_t>(v.index(), 1)) {
      case 1: return neg(to_surinteger(v));
      case 2: return q_neg(to_surrational(v));
      default: return cx_neg(to_gaussian(v));
    }
  }

  Value node(const Expr::Binary& b, const Expr&) {
    const Value lhs = eval(*b.lhs);
    const Value rhs = eval(*b.rhs);
    const std::string op(symbol(b.op));
    require_numeric(lhs, op.c_str());
    require_numeric(rhs, op.c_str());
    switch (b.op) {
      case BinaryOp::NatAdd: return add(lhs, rhs, 0);
      case BinaryOp::Sub: return add(lhs, rhs, 1);
      case BinaryOp::NatMul: return mul(lhs, rhs);
      case BinaryOp::Frac: return divide(lhs, rhs);
      case BinaryOp::RecAdd: {
        const Ordinal x = to_ordinal(lhs, "+.");
        const Ordinal y = to_ordinal(rhs, "+.");
        return checked(OracleOp::Add, x, y, rec_add(x, y));
      }
      case BinaryOp::RecMul: {
        const Ordinal x = to_ordinal(lhs, "*.");
        const Ordinal y = to_ordinal(rhs, "*.");
        return checked(OracleOp::Mul, x, y, rec_mul(x, y));
      }
      case BinaryOp::RecSub: {
        // x -. y is the g with y +. g = x.
        const Ordinal x = to_ordinal(lhs, "-.");
        const Ordinal y = to_ordinal(rhs, "-.");
        if (x == y) return Ordinal{};
        return rec_sub_left(y, x);
      }
      case BinaryOp::Tetra: return tetration(to_ordinal(lhs, "^^"), to_ordinal(rhs, "^^"), env_.limits);
      case BinaryOp::Pow: return power(lhs, rhs);
    }
    return lhs;
  }

  Value node(const Expr::Hyper& h, const Expr&) {
    const Ordinal idx = to_ordinal(eval(*h.index), "H");
    const Ordinal a = to_ordinal(eval(*h.a), "H");
    const Ordinal b = to_ordinal(eval(*h.b), "H");
    return hyperop(HyperIndex(idx), a, b, env_.limits);
  }

  Value node(const Expr::Complex& c, const Expr&) {
    const Value re = eval(*c.re);
    const Value im = eval(*c.im);
    require_numeric(re, "complex");
    require_numeric(im, "complex");
    if (re.index() > 2 || im.index() > 2) {
      throw Error(ErrorKind::InvalidArgument, "complex", "components must be surrational");
    }
    return GaussianSurRational{to_surrational(re), to_surrational(im)};
  }

  Value node(const Expr::Call& c, const Expr&) {
    const std::string& f = c.name;
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (c.args.size() < lo || c.args.size() > hi) {
        throw Error(ErrorKind::InvalidArgument, f, "wrong number of arguments");
      }
    };
    if (c.index && f != "sqrt") throw Error(ErrorKind::InvalidArgument, f, "unexpected bracket argument");
    if (f == "succ") {
      arity(1, 1);
      return successor(to_ordinal(eval(*c.args[0]), "succ"));
    }
    if (f == "kind") {
      arity(1, 1);
      return classify(to_ordinal(eval(*c.args[0]), "kind"));
    }
    if (f == "inv") {
      arity(1, 1);
      const Value v = eval(*c.args[0]);
      require_numeric(v, "inv");
      if (v.index() == 3) return cx_inv(std::get<GaussianSurRational>(v));
      return q_inv(to_surrational(v));
    }
    if (f == "member") {
      arity(2, 3);
      const Ordinal lambda = c.args.size() == 3 ? to_ordinal(eval(*c.args[2]), "member") : env_.lambda;
      const CutSpec cut = cut_of(*c.args[0], lambda);
      const Value p = eval(*c.args[1]);
      require_numeric(p, "member");
      if (p.index() > 2) throw Error(ErrorKind::InvalidArgument, "member", "cut members are surrational");
      return cut_member(cut, to_surrational(p));
    }
    if (f == "classify") {
      arity(1, 1);
      const auto* call = std::get_if<Expr::Call>(&c.args[0]->node);
      if (!call || call->name != "sqrt") throw Error(ErrorKind::InvalidArgument, "classify", "expected sqrt[n](q)");
      return classify_root_cut(cut_of(*c.args[0], env_.lambda));
    }
    if (f == "sqrt") throw Error(ErrorKind::InvalidArgument, "sqrt", "sqrt[n](q) names a cut; use it inside member or classify");
    throw Error(ErrorKind::InvalidArgument, "eval", "unknown function '" + f + "'");
  }

  CutSpec cut_of(const Expr& e, const Ordinal& lambda) {
    if (const auto* call = std::get_if<Expr::Call>(&e.node); call && call->name == "sqrt") {
      if (call->args.size() != 1) throw Error(ErrorKind::InvalidArgument, "sqrt", "wrong number of arguments");
      const unsigned n = call->index ? static_cast<unsigned>(to_small_natural(eval(*call->index), "sqrt")) : 2;
      const Value q = eval(*call->args[0]);
      require_numeric(q, "sqrt");
      return make_root_cut(to_surrational(q), n, lambda);
    }
    const Value q = eval(e);
    require_numeric(q, "member");
    return make_rational_cut(to_surrational(q), lambda);
  }

  // sign 0 adds, sign 1 subtracts.
  static Value add(const Value& x, const Value& y, int subtract) {
    const std::size_t level = std::max({x.index(), y.index(), static_cast<std::size_t>(subtract)});
    const Value a = promote_to(x, level);
    const Value b = promote_to(y, level);
    switch (level) {
      case 0: return nat_add(std::get<Ordinal>(a), std::get<Ordinal>(b));
      case 1: {
        const auto& p = std::get<SurInteger>(a);
        const auto& q = std::get<SurInteger>(b);
        return subtract ? si_sub(p, q) : si_add(p, q);
      }
      case 2: {
        const auto& p = std::get<SurRational>(a);
        const auto& q = std::get<SurRational>(b);
        return subtract ? q_sub(p, q) : q_add(p, q);
      }
      default: {
        const auto& p = std::get<GaussianSurRational>(a);
        const auto& q = std::get<GaussianSurRational>(b);
        return subtract ? cx_sub(p, q) : cx_add(p, q);
      }
    }
  }

  static Value mul(const Value& x, const Value& y) {
    const std::size_t level = std::max(x.index(), y.index());
    const Value a = promote_to(x, level);
    const Value b = promote_to(y, level);
    switch (level) {
      case 0: return nat_mul(std::get<Ordinal>(a), std::get<Ordinal>(b));
      case 1: return si_mul(std::get<SurInteger>(a), std::get<SurInteger>(b));
      case 2: return q_mul(std::get<SurRational>(a), std::get<SurRational>(b));
      default: return cx_mul(std::get<GaussianSurRational>(a), std::get<GaussianSurRational>(b));
    }
  }

  static Value divide(const Value& x, const Value& y) {
    if (std::max(x.index(), y.index()) == 3) {
      const auto d = to_gaussian(y);
      if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "/");
      return cx_div(to_gaussian(x), d);
    }
    const SurRational d = to_surrational(y);
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "/");
    return q_div(to_surrational(x), d);
  }

  Value power(const Value& x, const Value& y) {
    if (x.index() == 0) {
      // Recursive exponentiation whenever the exponent is an ordinal.
      std::optional<Ordinal> b;
      try {
        b = to_ordinal(y, "^");
      } catch (const Error&) {
      }
      if (b) {
        const Ordinal& a = std::get<Ordinal>(x);
        return checked(OracleOp::Pow, a, *b, rec_pow(a, *b, env_.limits));
      }
    }
    const BigInt k = to_integer(y, "^");
    if (abs(k) > BigInt(static_cast<unsigned long>(env_.limits.max_terms))) {
      throw Error(ErrorKind::ResourceExceeded, "^", "exponent too large for a repeated product");
    }
    const std::uint64_t m = BigInt(abs(k)).get_ui();
    std::size_t level = std::max<std::size_t>(x.index(), 1);
    if (k < 0) level = std::max<std::size_t>(level, 2);
    Value result;
    switch (level) {
      case 1: result = si_pow(to_surinteger(x), m); break;
      case 2: {
        const SurRational q = to_surrational(x);
        if (k < 0 && q.is_zero()) throw Error(ErrorKind::DivisionByZero, "^");
        result = reduce(SurRational(si_pow(q.num(), m), si_pow(q.den(), m)));
        if (k < 0) result = q_inv(std::get<SurRational>(result));
        break;
      }
      default: {
        const GaussianSurRational z = to_gaussian(x);
        GaussianSurRational acc{SurRational(SurInteger::from_integer(1)), SurRational{}};
        for (std::uint64_t i = 0; i < m; ++i) acc = cx_mul(acc, z);
        result = k < 0 ? cx_inv(acc) : acc;
        break;
      }
    }
    return result;
  }

  enum class OracleOp { Add, Mul, Pow };

  Ordinal checked(OracleOp op, const Ordinal& x, const Ordinal& y, Ordinal closed) {
    if (!env_.oracle) return closed;
    const auto sx = oracle::project(x);
    const auto sy = oracle::project(y);
    if (!sx || !sy) {
      log("oracle: outside fragment");
      return closed;
    }
    oracle::Unfolder unfold(kOracleBound);
    oracle::SmallOrdinal v;
    try {
      switch (op) {
        case OracleOp::Add: v = unfold.add(*sx, *sy); break;
        case OracleOp::Mul: v = unfold.mul(*sx, *sy); break;
        case OracleOp::Pow: v = unfold.pow(*sx, *sy); break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::FragmentExceeded) throw;
      log("oracle: outside fragment");
      return closed;
    }
    const Ordinal expected = oracle::embed(v);
    if (!(expected == closed)) {
      throw Error(ErrorKind::OracleMismatch, "oracle",
                  "closed form gave " + to_string(closed) + ", unfolding gave " + to_string(expected));
    }
    log("oracle: agree " + to_string(closed));
    return closed;
  }

  void log(std::string line) const {
    if (env_.oracle_log) env_.oracle_log->push_back(std::move(line));
  }

  const Env& env_;
};

}  // namespace

Value eval(const Expr& e, const Env& env) { return Evaluator(env).eval(e); }

Value eval_text(std::string_view text, const Env& env) {
  auto parsed = parse(text);
  if (auto* d = std::get_if<Diagnostic>(&parsed)) {
    throw EvalError(Error(ErrorKind::InvalidArgument, "parse", d->to_string()), d->pos);
  }
  return eval(*std::get<ExprPtr>(parsed), env);
}

}  // namespace transfinita
