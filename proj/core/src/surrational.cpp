#include "transfinita/surrational.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "transfinita/error.hpp"
#include "transfinita/natural.hpp"

namespace transfinita {

namespace {

// Long-division steps before exact_divide gives up.
constexpr std::size_t kMaxDivisionSteps = std::size_t{1} << 16;

std::optional<SurInteger> common_factor(const SurInteger& a, const SurInteger& b);

const SurInteger& one() {
  static const SurInteger v = SurInteger::from_integer(1);
  return v;
}

}  // namespace

SurRational::SurRational(const SurInteger& n) : num_(n), den_(one()) {}

SurRational::SurRational(SurInteger num, SurInteger den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "SurRational", "zero denominator");
  if (den_.sign() < 0) {
    num_ = neg(num_);
    den_ = neg(den_);
  }
}

std::optional<SurInteger> SurRational::as_surinteger() const { return exact_divide(num_, den_); }

bool operator==(const SurRational& p, const SurRational& q) {
  return si_mul(p.num_, q.den_) == si_mul(q.num_, p.den_);
}

std::strong_ordering operator<=>(const SurRational& p, const SurRational& q) {
  return si_mul(p.num_, q.den_) <=> si_mul(q.num_, p.den_);
}

bool q_eq(const SurRational& p, const SurRational& q) { return p == q; }

std::strong_ordering q_compare(const SurRational& p, const SurRational& q) { return p <=> q; }

SurRational q_add(const SurRational& p, const SurRational& q) {
  if (p.reduced_ && q.reduced_) {
    // With d = gcd(den p, den q), any common factor of the sum lies in d.
    if (const auto d = common_factor(p.den(), q.den())) {
      const SurInteger pd = *exact_divide(p.den(), *d);
      const SurInteger qd = *exact_divide(q.den(), *d);
      const SurInteger num = si_add(si_mul(p.num(), qd), si_mul(q.num(), pd));
      if (num.is_zero()) return reduce(SurRational{});
      if (const auto g = common_factor(num, *d)) {
        SurRational out(*exact_divide(num, *g), si_mul(pd, *exact_divide(q.den(), *g)));
        out.reduced_ = true;
        return out;
      }
    }
  }
  if (p.den() == q.den()) return reduce(SurRational(si_add(p.num(), q.num()), p.den()));
  return reduce(SurRational(si_add(si_mul(p.num(), q.den()), si_mul(q.num(), p.den())), si_mul(p.den(), q.den())));
}

SurRational q_neg(const SurRational& p) {
  SurRational out(neg(p.num()), p.den());
  out.reduced_ = p.reduced_;
  return out;
}

SurRational q_sub(const SurRational& p, const SurRational& q) { return q_add(p, q_neg(q)); }

SurRational q_mul(const SurRational& p, const SurRational& q) {
  if (p.is_zero() || q.is_zero()) return reduce(SurRational{});
  if (p.reduced_ && q.reduced_) {
    // Cancelling across the two fractions leaves a reduced product.
    const auto g1 = common_factor(p.num(), q.den());
    const auto g2 = common_factor(q.num(), p.den());
    if (g1 && g2) {
      SurRational out(si_mul(*exact_divide(p.num(), *g1), *exact_divide(q.num(), *g2)),
                      si_mul(*exact_divide(p.den(), *g2), *exact_divide(q.den(), *g1)));
      out.reduced_ = true;
      return out;
    }
  }
  return reduce(SurRational(si_mul(p.num(), q.num()), si_mul(p.den(), q.den())));
}

SurRational q_inv(const SurRational& p) {
  if (p.is_zero()) return {};
  SurRational out(p.den(), p.num());
  out.reduced_ = p.reduced_;
  return out;
}

SurRational q_div(const SurRational& p, const SurRational& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "q_div");
  return q_mul(p, q_inv(q));
}

SurRational q_abs(const SurRational& p) { return p.sign() < 0 ? q_neg(p) : p; }

std::optional<SurInteger> exact_divide(const SurInteger& a, const SurInteger& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_divide");
  const auto& lb = b.leading();
  SurIntegerBuilder quotient;
  SurInteger rest = a;
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    if (step == kMaxDivisionSteps) throw Error(ErrorKind::ResourceExceeded, "exact_divide", "too many division steps");
    const auto& lr = rest.leading();
    auto e = nat_sub(lr.exponent, lb.exponent);
    if (!e || !mpz_divisible_p(lr.coefficient.get_mpz_t(), lb.coefficient.get_mpz_t())) return std::nullopt;
    BigInt c = lr.coefficient / lb.coefficient;
    SurIntegerBuilder t;
    t.push(*e, c);
    // Quotient exponents strictly decrease because natural sum is strictly monotone.
    quotient.push(std::move(*e), std::move(c));
    rest = si_sub(rest, si_mul(std::move(t).build(), b));
  }
  return std::move(quotient).build();
}

// ------------------------------------------------------------------ reduce

namespace {

using ExponentCoords = std::map<Ordinal, BigInt>;

ExponentCoords coords_of(const Ordinal& e) {
  ExponentCoords out;
  for (const auto& t : e.terms()) out.emplace(t.exponent, t.coefficient);
  return out;
}

// Largest m with omega^m dividing every term of both arguments.
Ordinal common_monomial(const SurInteger& a, const SurInteger& b) {
  std::optional<ExponentCoords> acc;
  auto fold = [&acc](const SurInteger& x) {
    for (const auto& t : x.terms()) {
      ExponentCoords c = coords_of(t.exponent);
      if (!acc) {
        acc = std::move(c);
        continue;
      }
      for (auto it = acc->begin(); it != acc->end();) {
        auto jt = c.find(it->first);
        if (jt == c.end()) {
          it = acc->erase(it);
        } else {
          if (jt->second < it->second) it->second = jt->second;
          ++it;
        }
      }
    }
  };
  fold(a);
  fold(b);
  OrdinalBuilder m;
  if (acc) {
    for (auto it = acc->rbegin(); it != acc->rend(); ++it) m.push(it->first, it->second);
  }
  return std::move(m).build();
}

SurInteger divide_monomial(const SurInteger& a, const Ordinal& m) {
  SurIntegerBuilder out;
  for (const auto& t : a.terms()) out.push(*nat_sub(t.exponent, m), t.coefficient);
  return std::move(out).build();
}

// A surinteger is a polynomial over the integers in the variables
// x_mu = omega^(omega^mu): the monomial omega^e is the product of x_mu^k over
// the terms omega^mu * k of e. The gcd below runs over that polynomial ring.

struct GcdBudgetExceeded {};

// Polynomial in one variable x_mu with surinteger coefficients free of x_mu.
using Univariate = std::map<BigInt, SurInteger>;

SurInteger sorted_surinteger(std::vector<SurInteger::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return r.exponent < l.exponent; });
  return SurInteger::from_terms(std::move(terms));
}

// Largest variable index occurring in a or b.
std::optional<Ordinal> main_variable(const SurInteger& a, const SurInteger& b) {
  std::optional<Ordinal> mu;
  for (const SurInteger* x : {&a, &b}) {
    for (const auto& t : x->terms()) {
      if (!t.exponent.is_zero() && (!mu || *mu < t.exponent.leading_exponent())) mu = t.exponent.leading_exponent();
    }
  }
  return mu;
}

Univariate split(const SurInteger& a, const Ordinal& mu) {
  std::map<BigInt, std::vector<SurInteger::Term>> parts;
  for (const auto& t : a.terms()) {
    OrdinalBuilder rest;
    BigInt degree = 0;
    for (const auto& u : t.exponent.terms()) {
      if (u.exponent == mu) {
        degree = u.coefficient;
      } else {
        rest.push(u);
      }
    }
    parts[degree].push_back({std::move(rest).build(), t.coefficient});
  }
  Univariate out;
  for (auto& [d, terms] : parts) out.emplace(d, sorted_surinteger(std::move(terms)));
  return out;
}

SurInteger x_power(const Ordinal& mu, const BigInt& k) {
  if (k == 0) return one();
  return SurInteger(Ordinal::omega_power(Ordinal::omega_power(mu, k)));
}

SurInteger join(const Univariate& p, const Ordinal& mu) {
  SurInteger out;
  for (const auto& [d, c] : p) out = si_add(out, si_mul(c, x_power(mu, d)));
  return out;
}

// Dense integer polynomial, index = degree.
using Dense = std::vector<BigInt>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense primitive_dense(Dense p) {
  trim(p);
  BigInt g = 0;
  for (const auto& c : p) g = ::gcd(g, c);
  if (g > 1) {
    for (auto& c : p) c /= g;
  }
  return p;
}

Dense pseudo_remainder_dense(Dense a, const Dense& d) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  while (a.size() >= d.size()) {
    const BigInt c = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (auto& x : a) x *= d.back();
    for (std::size_t i = 0; i <= dd; ++i) a[shift + i] -= c * d[i];
    a = primitive_dense(std::move(a));
  }
  return a;
}

// Degree of gcd(a, b) over the rationals.
std::size_t dense_gcd_degree(Dense a, Dense b) {
  a = primitive_dense(std::move(a));
  b = primitive_dense(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder_dense(a, b);
    a = std::move(b);
    b = primitive_dense(std::move(r));
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Largest degree or substituted power the certificate works with.
constexpr unsigned long kMaxCertificateDegree = 256;

// Specialization of a to a dense polynomial in x_mu, every other variable
// replaced by its value; nullopt when a degree is too large to expand.
std::optional<Dense> specialize(const SurInteger& a, const Ordinal& mu, const std::map<Ordinal, BigInt>& values) {
  Dense out;
  for (const auto& t : a.terms()) {
    BigInt c = t.coefficient;
    unsigned long degree = 0;
    for (const auto& u : t.exponent.terms()) {
      if (!u.coefficient.fits_ulong_p() || u.coefficient.get_ui() > kMaxCertificateDegree) return std::nullopt;
      const unsigned long k = u.coefficient.get_ui();
      if (u.exponent == mu) {
        degree = k;
      } else {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), values.at(u.exponent).get_mpz_t(), k);
        c *= power;
      }
    }
    if (out.size() <= degree) out.resize(degree + 1);
    out[degree] += c;
  }
  return out;
}

BigInt max_degree(const SurInteger& a, const Ordinal& mu) {
  BigInt d = 0;
  for (const auto& t : a.terms()) {
    for (const auto& u : t.exponent.terms()) {
      if (u.exponent == mu && d < u.coefficient) d = u.coefficient;
    }
  }
  return d;
}

// Proof that a and b, both of content 1, share no nonconstant factor.
// A common factor of degree k in x_mu survives any substitution for the
// other variables that keeps both leading coefficients in x_mu nonzero, so a
// constant specialized gcd rules out x_mu from every common factor.
bool coprime_certificate(const SurInteger& a, const SurInteger& b) {
  std::map<Ordinal, BigInt> values;
  for (const SurInteger* x : {&a, &b}) {
    for (const auto& t : x->terms()) {
      for (const auto& u : t.exponent.terms()) values.emplace(u.exponent, 0);
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (const auto& [mu, unused] : values) {
    const BigInt da = max_degree(a, mu);
    const BigInt db = max_degree(b, mu);
    if (da == 0 || db == 0) continue;
    bool eliminated = false;
    for (int attempt = 0; attempt < 3 && !eliminated; ++attempt) {
      for (auto& [nu, v] : values) v = BigInt(static_cast<unsigned long>(2 + rng() % 97));
      const auto sa = specialize(a, mu, values);
      const auto sb = specialize(b, mu, values);
      if (!sa || !sb) return false;
      Dense fa = *sa;
      Dense fb = *sb;
      trim(fa);
      trim(fb);
      if (fa.size() != da.get_ui() + 1 || fb.size() != db.get_ui() + 1) continue;
      eliminated = dense_gcd_degree(std::move(fa), std::move(fb)) == 0;
    }
    if (!eliminated) return false;
  }
  return true;
}

class GcdEngine {
 public:
  SurInteger gcd(const SurInteger& a, const SurInteger& b) {
    if (a.is_zero()) return si_abs(b);
    if (b.is_zero()) return si_abs(a);
    charge(a.size() + b.size());
    const auto mu = main_variable(a, b);
    if (!mu || coprime_certificate(a, b)) return SurInteger::from_integer(::gcd(content(a), content(b)));

    const Univariate pa = split(a, *mu);
    const Univariate pb = split(b, *mu);
    const SurInteger ca = content_of(pa);
    const SurInteger cb = content_of(pb);
    const SurInteger c = gcd(ca, cb);

    Univariate f = divide_all(pa, ca);
    Univariate g = divide_all(pb, cb);
    if (degree(f) < degree(g)) std::swap(f, g);
    while (!g.empty() && degree(g) > 0) {
      Univariate r = primitive(pseudo_remainder(f, g));
      f = std::move(g);
      g = std::move(r);
    }
    if (!g.empty()) return c;  // the primitive parts are coprime
    SurInteger h = join(f, *mu);
    if (h.sign() < 0) h = neg(h);
    return si_mul(c, h);
  }

 private:
  // Bound on the total term count handled across the whole computation.
  static constexpr std::size_t kBudget = std::size_t{1} << 12;

  void charge(std::size_t work) {
    spent_ += work;
    if (spent_ > kBudget) throw GcdBudgetExceeded{};
  }

  static BigInt degree(const Univariate& p) { return p.rbegin()->first; }

  SurInteger content_of(const Univariate& p) {
    SurInteger c;
    for (const auto& [d, coeff] : p) c = gcd(c, coeff);
    return c;
  }

  Univariate divide_all(const Univariate& p, const SurInteger& c) {
    Univariate out;
    for (const auto& [d, coeff] : p) {
      auto q = exact_divide(coeff, c);
      if (!q) throw GcdBudgetExceeded{};
      out.emplace(d, std::move(*q));
    }
    return out;
  }

  Univariate primitive(const Univariate& p) {
    if (p.empty()) return p;
    return divide_all(p, content_of(p));
  }

  // lc(g)^k * f modulo g, with k large enough to stay in the coefficient ring.
  Univariate pseudo_remainder(Univariate f, const Univariate& g) {
    const BigInt dg = degree(g);
    const SurInteger& lg = g.rbegin()->second;
    while (!f.empty() && degree(f) >= dg) {
      const BigInt shift = degree(f) - dg;
      const SurInteger lf = f.rbegin()->second;
      Univariate next;
      for (const auto& [d, coeff] : f) next.emplace(d, si_mul(coeff, lg));
      for (const auto& [d, coeff] : g) {
        const BigInt at = d + shift;
        SurInteger v = si_sub(next[at], si_mul(coeff, lf));
        if (v.is_zero()) {
          next.erase(at);
        } else {
          next[at] = std::move(v);
        }
      }
      for (const auto& [d, coeff] : next) charge(coeff.size());
      f = std::move(next);
    }
    return f;
  }

  std::size_t spent_ = 0;
};

// gcd(a, b) for nonzero a and b; nullopt past the work budget.
std::optional<SurInteger> common_factor(const SurInteger& a, const SurInteger& b) {
  try {
    return GcdEngine{}.gcd(a, b);
  } catch (const GcdBudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

SurRational reduce(const SurRational& p) {
  if (p.num().is_zero()) {
    SurRational z;
    z.reduced_ = true;
    return z;
  }
  SurInteger num = p.num();
  SurInteger den = p.den();

  const BigInt g = gcd(content(num), content(den));
  if (g > 1) {
    num = divide_content(num, g);
    den = divide_content(den, g);
  }
  const Ordinal m = common_monomial(num, den);
  if (!m.is_zero()) {
    num = divide_monomial(num, m);
    den = divide_monomial(den, m);
  }

  bool complete = num.size() == 1 || den.size() == 1;
  if (!complete) {
    try {
      const SurInteger common = GcdEngine{}.gcd(num, den);
      auto qn = exact_divide(num, common);
      auto qd = exact_divide(den, common);
      if (!qn || !qd) throw GcdBudgetExceeded{};
      num = std::move(*qn);
      den = std::move(*qd);
      complete = true;
    } catch (const GcdBudgetExceeded&) {
      if (auto q = exact_divide(num, den)) {
        num = std::move(*q);
        den = one();
        complete = true;
      } else if (auto r = exact_divide(den, num)) {
        num = one();
        den = std::move(*r);
        complete = true;
      }
    }
  }
  SurRational out(std::move(num), std::move(den));
  out.reduced_ = complete;
  return out;
}

bool in_lambda_field(const SurRational& p, const Ordinal& lambda) {
  if (!is_valid_lambda(lambda)) {
    throw Error(ErrorKind::InvalidLambda, "in_lambda_field", "lambda must be omega or a transfinite x-number");
  }
  const SurRational r = reduce(p);
  return in_lambda_ring(r.num(), lambda) && in_lambda_ring(r.den(), lambda);
}

std::optional<BigInt> archimedean_witness(const SurRational& p, const SurRational& q, const BigInt& bound) {
  if (p.is_zero()) throw Error(ErrorKind::Undefined, "archimedean_witness", "p must be nonzero");
  if (q.is_zero()) return BigInt(0);
  const SurRational ap = q_abs(p);
  const SurRational aq = q_abs(q);
  auto covers = [&](const BigInt& n) {
    return aq <= SurRational(si_mul(ap.num(), SurInteger::from_integer(n)), ap.den());
  };
  if (bound < 1 || !covers(bound)) return std::nullopt;
  BigInt lo = 1;
  BigInt hi = bound;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (covers(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

SurRational midpoint(const SurRational& p, const SurRational& q) {
  if (!(p < q)) throw Error(ErrorKind::Undefined, "midpoint", "requires p < q");
  return q_mul(q_add(p, q), SurRational(one(), SurInteger::from_integer(2)));
}

}  // namespace transfinita
