#pragma once

#include "catgen/channel.hpp"
#include "catgen/conditional.hpp"

#include <Eigen/Dense>

#include <vector>

namespace catgen::wigner {

/// Sampled Wigner function on a rectangular grid with trapezoid weights.
/// values(i, j) = W(x_axis[i], p_axis[j]).
struct WignerGrid {
  std::vector<double> x_axis;
  std::vector<double> p_axis;
  Eigen::MatrixXd values;
  Eigen::VectorXd x_weights;
  Eigen::VectorXd p_weights;

  /// Phase-space integral of the sampled function.
  double integral() const;
};

/// n evenly spaced points covering [lo, hi].
std::vector<double> linspace(double lo, double hi, int n);

/// Trapezoid weights for a sorted axis.
Eigen::VectorXd trapezoid_weights(const std::vector<double>& axis);

/// 2π ∬ a·b — the phase-space overlap of two grids sampled on identical axes
/// (equals Tr[ρ_a ρ_b]; the purity when a and b coincide).
double grid_overlap(const WignerGrid& a, const WignerGrid& b);

/// Characteristic function Tr[|φ><φ| e^{i(uX+vP)}] of the two-term state
/// |φ> = c2|2> + c0|0>, derived analytically:
///   {1 − c2²(u²+v²) + (c2²/8)(u²+v²)² − (c0 c2/√2)(u²−v²)} e^{−(u²+v²)/4}.
double chi_phi(double u, double v, double c2, double c0);

/// Characteristic function of the full conditional output state: the
/// weight-C_phi branch is chi_phi evaluated at the gain-scaled arguments
/// times the excess-noise Gaussian, plus the weight-C_v branch
/// exp[−(F_X u² + F_P v²)/4]. Real and even; chi_plus(0,0) = 1. Throws
/// validation_error if the channel's noise diagonal is negative beyond
/// tolerance.
double chi_plus(double u, double v, const conditional::ConditionalDecomposition& decomp,
                const channel::GaussianChannel& ch);

/// Closed-form Wigner function of the conditional output state.
double w_plus_closed(double x, double p, const conditional::ConditionalDecomposition& decomp,
                     const channel::GaussianChannel& ch);

/// Samples w_plus_closed on a grid (parallel over rows).
WignerGrid w_plus_closed_grid(const std::vector<double>& x_axis,
                              const std::vector<double>& p_axis,
                              const conditional::ConditionalDecomposition& decomp,
                              const channel::GaussianChannel& ch);

/// Independent numerical route: 2-D cosine transform of chi_plus,
/// W(x,p) = (1/π²) ∫∫_{u,v ≥ 0} chi(u,v) cos(ux) cos(vp) du dv (the
/// characteristic function is even in both arguments). The spectral grid
/// extent adapts to the Gaussian widths; throws convergence_error if the
/// characteristic function has not decayed below 1e−10 at the spectral edge
/// (aliasing guard).
WignerGrid w_plus_numeric(const std::vector<double>& x_axis, const std::vector<double>& p_axis,
                          const conditional::ConditionalDecomposition& decomp,
                          const channel::GaussianChannel& ch);

/// Analytic Wigner function of the even coherent-state superposition of
/// amplitude alpha: Gaussian lobes at x = ±√2 α plus an interference term
/// ∝ cos(2√2 α p).
double cat_wigner(double x, double p, double alpha);

/// Phase-space fidelity F = 2π ∬ W_out · W_cat between the conditional output
/// state and the even cat of amplitude alpha. Grid extent follows the state
/// widths; the spacing is halved until F moves by less than 1e−4
/// (convergence_error if it never settles).
double fidelity_to_cat(const conditional::ConditionalDecomposition& decomp,
                       const channel::GaussianChannel& ch, double alpha);

} // namespace catgen::wigner
