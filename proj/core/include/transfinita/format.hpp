#pragma once

// Canonical text and JSON trees. Canonical text parses back to an equal value.

#include <string>

#include <nlohmann/json.hpp>

#include "transfinita/value.hpp"

namespace transfinita {

/// e.g. "w^(w^2)*3 + w*2 + 7"; zero prints as "0".
std::string to_string(const Ordinal& a);
/// e.g. "w^5*4 - w^4*2 + w*3 - 1".
std::string to_string(const SurInteger& a);
/// Reduced first; "num/den", with a multi-term numerator or compound denominator parenthesized.
std::string to_string(const SurRational& p);
/// "(re, im)".
std::string to_string(const GaussianSurRational& z);
std::string to_string(OrdinalClass c);
/// "Surrational(<witness>)" or "Irrational".
std::string to_string(const RootClassification& c);

std::string print_canonical(const Value& v);

/// {terms:[{exp:<tree>, coeff:"<decimal>"}]}
nlohmann::json to_json(const Ordinal& a);
/// As for Ordinal, with signed coefficient strings.
nlohmann::json to_json(const SurInteger& a);
/// {num:<tree>, den:<tree>, reduced:<bool>}
nlohmann::json to_json(const SurRational& p);
/// {re:<tree>, im:<tree>}
nlohmann::json to_json(const GaussianSurRational& z);
nlohmann::json to_json(const Value& v);

}  // namespace transfinita
