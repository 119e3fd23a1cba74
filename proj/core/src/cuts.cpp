#include "transfinita/cuts.hpp"

#include <utility>

#include "transfinita/error.hpp"
#include "transfinita/natural.hpp"

namespace transfinita {

namespace {

constexpr std::size_t kMaxRootSteps = std::size_t{1} << 12;

void check_lambda(const Ordinal& lambda, const char* op) {
  if (!is_valid_lambda(lambda)) throw Error(ErrorKind::InvalidLambda, op, "lambda must be omega or a transfinite x-number");
}

// e / n under natural arithmetic: every normal-form coefficient divided by n.
std::optional<Ordinal> divide_exponent(const Ordinal& e, unsigned n) {
  OrdinalBuilder out;
  for (const auto& t : e.terms()) {
    if (!mpz_divisible_ui_p(t.coefficient.get_mpz_t(), n)) return std::nullopt;
    out.push(t.exponent, t.coefficient / n);
  }
  return std::move(out).build();
}

Ordinal times(const Ordinal& e, unsigned n) { return nat_mul(e, Ordinal::from_natural(std::uint64_t{n})); }

SurInteger monomial(Ordinal e, BigInt c) {
  SurIntegerBuilder b;
  b.push(std::move(e), std::move(c));
  return std::move(b).build();
}

}  // namespace

CutSpec make_rational_cut(SurRational q, Ordinal lambda) {
  check_lambda(lambda, "make_rational_cut");
  return CutSpec{RationalCut{std::move(q)}, std::move(lambda)};
}

CutSpec make_root_cut(SurRational q, unsigned n, Ordinal lambda) {
  check_lambda(lambda, "make_root_cut");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "make_root_cut", "root degree must be at least 2");
  if (q.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "make_root_cut", "radicand must be positive");
  return CutSpec{RootCut{std::move(q), n}, std::move(lambda)};
}

bool cut_member(const CutSpec& cut, const SurRational& p) {
  check_lambda(cut.lambda, "cut_member");
  if (!in_lambda_field(p, cut.lambda)) throw Error(ErrorKind::OutOfField, "cut_member", "value is outside the lambda-field");
  if (const auto* rc = std::get_if<RationalCut>(&cut.shape)) return p < rc->q;
  const auto& root = std::get<RootCut>(cut.shape);
  if (p.sign() <= 0) return true;
  const SurInteger lhs = si_mul(si_pow(p.num(), root.n), root.q.den());
  const SurInteger rhs = si_mul(si_pow(p.den(), root.n), root.q.num());
  return lhs < rhs;
}

std::optional<SurInteger> integer_root(const SurInteger& a, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "integer_root", "root degree must be positive");
  if (a.is_zero()) return a;
  const auto& lead = a.leading();
  if (lead.coefficient < 0 && n % 2 == 0) return std::nullopt;
  auto e0 = divide_exponent(lead.exponent, n);
  if (!e0) return std::nullopt;
  BigInt c0;
  if (mpz_root(c0.get_mpz_t(), lead.coefficient.get_mpz_t(), n) == 0) return std::nullopt;

  // Each correction term t satisfies lt(a - r^n) = n * lt(r)^(n-1) * t.
  const SurInteger r0 = monomial(*e0, c0);
  const SurInteger step_div = si_mul(SurInteger::from_integer(n), si_pow(r0, n - 1));
  const auto& sd = step_div.leading();
  const Ordinal& lowest = a.terms().back().exponent;

  SurInteger r = r0;
  for (std::size_t step = 0; step < kMaxRootSteps; ++step) {
    const SurInteger rest = si_sub(a, si_pow(r, n));
    if (rest.is_zero()) return r;
    const auto& lr = rest.leading();
    auto e = nat_sub(lr.exponent, sd.exponent);
    if (!e || !(*e < r.terms().back().exponent) || times(*e, n) < lowest) return std::nullopt;
    if (!mpz_divisible_p(lr.coefficient.get_mpz_t(), sd.coefficient.get_mpz_t())) return std::nullopt;
    r = si_add(r, monomial(std::move(*e), lr.coefficient / sd.coefficient));
  }
  throw Error(ErrorKind::Inconclusive, "integer_root", "root extraction did not terminate within its budget");
}

RootClassification classify_root_cut(const CutSpec& cut) {
  const auto* root = std::get_if<RootCut>(&cut.shape);
  if (!root) throw Error(ErrorKind::InvalidArgument, "classify_root_cut", "not a root cut");
  check_lambda(cut.lambda, "classify_root_cut");
  const SurRational q = reduce(root->q);
  auto rn = integer_root(q.num(), root->n);
  auto rd = rn ? integer_root(q.den(), root->n) : std::nullopt;
  if (rn && rd) {
    SurRational w(std::move(*rn), std::move(*rd));
    if (in_lambda_field(w, cut.lambda)) return {CutClass::Surrational, std::move(w)};
    return {CutClass::Irrational, std::nullopt};
  }
  if (q.reduced()) return {CutClass::Irrational, std::nullopt};
  throw Error(ErrorKind::Inconclusive, "classify_root_cut", "radicand could not be fully reduced");
}

}  // namespace transfinita
