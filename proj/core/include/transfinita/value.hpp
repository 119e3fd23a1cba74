#pragma once

// Result values of the expression language.

#include <string_view>
#include <variant>

#include "transfinita/cuts.hpp"
#include "transfinita/gaussian.hpp"
#include "transfinita/ordinal.hpp"
#include "transfinita/surinteger.hpp"
#include "transfinita/surrational.hpp"

namespace transfinita {

/// Numeric alternatives are ordered by promotion level; arithmetic only ever
/// moves a value rightwards through the first four.
using Value = std::variant<Ordinal, SurInteger, SurRational, GaussianSurRational, bool, OrdinalClass, RootClassification>;

/// "ordinal", "surinteger", "surrational", "gaussian", "boolean", "ordinal-class", "cut-class".
std::string_view type_name(const Value& v);

bool is_numeric(const Value& v);
/// Equality across promotion levels (an Ordinal equals the SurInteger with the same terms).
bool value_equal(const Value& a, const Value& b);

SurInteger to_surinteger(const Value& v);
SurRational to_surrational(const Value& v);
GaussianSurRational to_gaussian(const Value& v);
/// The ordinal a value equals, if any; throws InvalidArgument otherwise.
Ordinal to_ordinal(const Value& v, const char* op);

}  // namespace transfinita
