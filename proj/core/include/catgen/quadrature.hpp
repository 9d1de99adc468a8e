#pragma once

#include <functional>

namespace catgen::quad {

/// Accuracy/effort knobs shared by the integration routines.
struct Options {
  double rel_tol = 1e-11;  ///< target relative accuracy of the result
  double abs_tol = 1e-300; ///< absolute floor used when the result is ~0
  int max_depth = 15;      ///< adaptive bisection depth per smooth panel
  int max_panels = 96;     ///< oscillatory panels before giving up
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integral of f over the finite interval [a, b].
double integrate(const Integrand& f, double a, double b, const Options& opt = {});

/// Integral of a smooth, decaying f over [0, inf), computed through the
/// compactifying map w = scale * tan(u), u in [0, pi/2). `scale` should match
/// the natural width of f (the decay rate of the damped linewidths here).
/// Throws convergence_error if the requested accuracy cannot be certified.
double integrate_half_line(const Integrand& f, double scale, const Options& opt = {});

/// Cosine transform integral( f(w) * cos(w * delta), w = 0..inf ) for smooth,
/// decaying f and delta >= 0.
///
/// delta == 0 reduces to integrate_half_line. Otherwise the axis is split at
/// the zeros of the cosine, each panel is integrated in the compactified
/// variable, and the alternating partial sums are extrapolated with a Wynn
/// epsilon table. Throws convergence_error (with panel diagnostics) if the
/// accelerated tail fails to settle.
double cosine_transform_half_line(const Integrand& f, double delta, double scale,
                                  const Options& opt = {});

} // namespace catgen::quad
