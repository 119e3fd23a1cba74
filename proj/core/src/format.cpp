#include "transfinita/format.hpp"

namespace transfinita {

namespace {

std::string exponent_text(const Ordinal& e) {
  if (e.is_finite() || e == Ordinal::omega()) return to_string(e);
  return "(" + to_string(e) + ")";
}

// omega^e * |c| without sign.
std::string term_text(const Ordinal& e, const BigInt& c) {
  const BigInt mag = abs(c);
  if (e.is_zero()) return to_decimal(mag);
  std::string s = e == Ordinal::from_natural(1) ? "w" : "w^" + exponent_text(e);
  if (mag != 1) s += "*" + to_decimal(mag);
  return s;
}

template <class Terms>
std::string signed_sum(const Terms& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool negative = terms[i].coefficient < 0;
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    s += term_text(terms[i].exponent, terms[i].coefficient);
  }
  return s;
}

// Denominators that bind tighter than "/": naturals and bare powers of omega.
bool atomic_denominator(const SurInteger& d) {
  return d.size() == 1 && (d.leading().exponent.is_zero() || d.leading().coefficient == 1);
}

}  // namespace

std::string to_string(const Ordinal& a) { return signed_sum(a.terms()); }

std::string to_string(const SurInteger& a) { return signed_sum(a.terms()); }

std::string to_string(const SurRational& p) {
  const SurRational r = reduce(p);
  if (r.den() == SurInteger::from_integer(1)) return to_string(r.num());
  std::string num = to_string(r.num());
  if (r.num().size() > 1) num = "(" + num + ")";
  std::string den = to_string(r.den());
  if (!atomic_denominator(r.den())) den = "(" + den + ")";
  return num + "/" + den;
}

std::string to_string(const GaussianSurRational& z) { return "(" + to_string(z.re) + ", " + to_string(z.im) + ")"; }

std::string to_string(OrdinalClass c) {
  switch (c) {
    case OrdinalClass::Zero: return "Zero";
    case OrdinalClass::Successor: return "Successor";
    case OrdinalClass::Limit: return "Limit";
  }
  return "?";
}

std::string to_string(const RootClassification& c) {
  if (c.kind == CutClass::Surrational && c.witness) return "Surrational(" + to_string(*c.witness) + ")";
  return "Irrational";
}

std::string print_canonical(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return to_string(x);
        }
      },
      v);
}

namespace {

template <class Terms>
nlohmann::json terms_json(const Terms& terms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms) arr.push_back({{"exp", to_json(t.exponent)}, {"coeff", to_decimal(t.coefficient)}});
  return {{"terms", std::move(arr)}};
}

}  // namespace

nlohmann::json to_json(const Ordinal& a) { return terms_json(a.terms()); }

nlohmann::json to_json(const SurInteger& a) { return terms_json(a.terms()); }

nlohmann::json to_json(const SurRational& p) {
  return {{"num", to_json(p.num())}, {"den", to_json(p.den())}, {"reduced", p.reduced()}};
}

nlohmann::json to_json(const GaussianSurRational& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

nlohmann::json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x;
        } else if constexpr (std::is_same_v<T, OrdinalClass>) {
          return to_string(x);
        } else if constexpr (std::is_same_v<T, RootClassification>) {
          nlohmann::json j = {{"kind", x.kind == CutClass::Surrational ? "Surrational" : "Irrational"}};
          if (x.witness) j["witness"] = to_json(*x.witness);
          return j;
        } else {
          return to_json(x);
        }
      },
      v);
}

}  // namespace transfinita
