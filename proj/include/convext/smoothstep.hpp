#pragma once

// Flat-at-endpoints transition profile
//   step(u) = s(u) / (s(u) + s(1-u)),   s(u) = exp(-1/u) for u > 0, else 0,
// so step == 0 for u <= 0, step == 1 for u >= 1, and every derivative
// vanishes at both ends. Derivatives come from jet arithmetic.
//
// bump(t) is the standing mollifier built from it: == 1 on [-1/2, 1/2],
// == 0 outside (-3/4, 3/4).

#include <cmath>

#include "convext/jet.hpp"

namespace convext {

inline double smoothstep_value(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

// jet of step at u0
inline Jet1 smoothstep_jet(double u0, int order) {
  if (u0 <= 1e-9) return Jet1::constant(0.0, order);
  if (u0 >= 1.0 - 1e-9) return Jet1::constant(1.0, order);
  const Jet1 u = Jet1::variable(u0, order);
  const Jet1 a = jet_exp(-jet_recip(u, order), order);
  const Jet1 b = jet_exp(-jet_recip(1.0 - u, order), order);
  return a * jet_recip(a + b, order);
}

// derivative list step^(j)(u0), j = 0..order
inline std::vector<double> smoothstep_derivs(double u0, int order) {
  const Jet1 j = smoothstep_jet(u0, order);
  std::vector<double> d(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) d[static_cast<size_t>(k)] = j.derivative(k);
  return d;
}

inline double bump_value(double t) {
  const double a = std::fabs(t);
  if (a <= 0.5) return 1.0;
  if (a >= 0.75) return 0.0;
  return smoothstep_value(3.0 - 4.0 * a);
}

// jet of bump at t0
inline Jet1 bump_jet(double t0, int order) {
  const double a = std::fabs(t0);
  if (a <= 0.5) return Jet1::constant(1.0, order);
  if (a >= 0.75) return Jet1::constant(0.0, order);
  // inner u = 3 - 4|t|, affine on each side
  Jet1 inner(order);
  inner.coeff(0) = 3.0 - 4.0 * a;
  if (order >= 1) inner.coeff(1) = t0 > 0.0 ? -4.0 : 4.0;
  return apply_analytic(inner, smoothstep_derivs(inner.constant_term(), order), order);
}

}  // namespace convext
