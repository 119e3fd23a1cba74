#include "transfinita/value.hpp"

#include <algorithm>

#include "transfinita/error.hpp"

namespace transfinita {

std::string_view type_name(const Value& v) {
  static constexpr std::string_view names[] = {"ordinal", "surinteger", "surrational", "gaussian",
                                                "boolean", "ordinal-class", "cut-class"};
  return names[v.index()];
}

bool is_numeric(const Value& v) { return v.index() <= 3; }

namespace {

[[noreturn]] void not_numeric(const Value& v, const char* op) {
  throw Error(ErrorKind::InvalidArgument, op, std::string("expected a number, got ") + std::string(type_name(v)));
}

}  // namespace

SurInteger to_surinteger(const Value& v) {
  if (const auto* o = std::get_if<Ordinal>(&v)) return SurInteger(*o);
  if (const auto* s = std::get_if<SurInteger>(&v)) return *s;
  not_numeric(v, "to_surinteger");
}

SurRational to_surrational(const Value& v) {
  if (const auto* q = std::get_if<SurRational>(&v)) return *q;
  if (v.index() <= 1) return SurRational(to_surinteger(v));
  not_numeric(v, "to_surrational");
}

GaussianSurRational to_gaussian(const Value& v) {
  if (const auto* g = std::get_if<GaussianSurRational>(&v)) return *g;
  if (v.index() <= 2) return {to_surrational(v), SurRational{}};
  not_numeric(v, "to_gaussian");
}

Ordinal to_ordinal(const Value& v, const char* op) {
  if (const auto* o = std::get_if<Ordinal>(&v)) return *o;
  std::optional<SurInteger> s;
  if (const auto* si = std::get_if<SurInteger>(&v)) {
    s = *si;
  } else if (const auto* q = std::get_if<SurRational>(&v)) {
    s = q->as_surinteger();
  } else if (const auto* g = std::get_if<GaussianSurRational>(&v)) {
    if (g->im.is_zero()) s = g->re.as_surinteger();
  }
  if (s) {
    if (auto o = s->as_ordinal()) return *o;
  }
  throw Error(ErrorKind::InvalidArgument, op, std::string("expected an ordinal, got ") + std::string(type_name(v)));
}

bool value_equal(const Value& a, const Value& b) {
  if (is_numeric(a) && is_numeric(b)) {
    switch (std::max(a.index(), b.index())) {
      case 0: return std::get<Ordinal>(a) == std::get<Ordinal>(b);
      case 1: return to_surinteger(a) == to_surinteger(b);
      case 2: return to_surrational(a) == to_surrational(b);
      default: return to_gaussian(a) == to_gaussian(b);
    }
  }
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<bool>(&a)) return *x == std::get<bool>(b);
  if (const auto* x = std::get_if<OrdinalClass>(&a)) return *x == std::get<OrdinalClass>(b);
  const auto& x = std::get<RootClassification>(a);
  const auto& y = std::get<RootClassification>(b);
  return x.kind == y.kind && x.witness.has_value() == y.witness.has_value() && (!x.witness || *x.witness == *y.witness);
}

}  // namespace transfinita
