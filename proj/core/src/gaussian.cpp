#include "transfinita/gaussian.hpp"

#include "transfinita/error.hpp"

namespace transfinita {

GaussianSurRational cx_i() { return {SurRational{}, SurRational(SurInteger::from_integer(1))}; }

GaussianSurRational cx_add(const GaussianSurRational& a, const GaussianSurRational& b) {
  return {q_add(a.re, b.re), q_add(a.im, b.im)};
}

GaussianSurRational cx_neg(const GaussianSurRational& a) { return {q_neg(a.re), q_neg(a.im)}; }

GaussianSurRational cx_sub(const GaussianSurRational& a, const GaussianSurRational& b) {
  return cx_add(a, cx_neg(b));
}

GaussianSurRational cx_mul(const GaussianSurRational& a, const GaussianSurRational& b) {
  return {q_sub(q_mul(a.re, b.re), q_mul(a.im, b.im)), q_add(q_mul(a.re, b.im), q_mul(a.im, b.re))};
}

GaussianSurRational cx_inv(const GaussianSurRational& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "cx_inv");
  const SurRational norm = q_add(q_mul(a.re, a.re), q_mul(a.im, a.im));
  return {q_div(a.re, norm), q_div(q_neg(a.im), norm)};
}

GaussianSurRational cx_div(const GaussianSurRational& a, const GaussianSurRational& b) {
  return cx_mul(a, cx_inv(b));
}

}  // namespace transfinita
