#pragma once

#include "transfinita/surrational.hpp"

namespace transfinita {

/// re + i*im over the surrationals.
struct GaussianSurRational {
  SurRational re;
  SurRational im;

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  /// Componentwise cross-multiplication equality.
  friend bool operator==(const GaussianSurRational&, const GaussianSurRational&) = default;
};

GaussianSurRational cx_i();
GaussianSurRational cx_add(const GaussianSurRational& a, const GaussianSurRational& b);
GaussianSurRational cx_neg(const GaussianSurRational& a);
GaussianSurRational cx_sub(const GaussianSurRational& a, const GaussianSurRational& b);
GaussianSurRational cx_mul(const GaussianSurRational& a, const GaussianSurRational& b);
/// (re / (re^2 + im^2), -im / (re^2 + im^2)). Throws DivisionByZero on zero.
GaussianSurRational cx_inv(const GaussianSurRational& a);
GaussianSurRational cx_div(const GaussianSurRational& a, const GaussianSurRational& b);

}  // namespace transfinita
