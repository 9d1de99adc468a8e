#pragma once

#include "catgen/opo.hpp"

#include <array>

namespace catgen::conditional {

/// Decomposition of the conditional state on the symmetric temporal mode:
/// a weight-C_phi squeezed superposition c2|2> + c0|0> mixed with weight-C_v
/// squeezed vacuum. n and n_phi are the overall and superposition-branch
/// normalizations the weights derive from.
struct ConditionalDecomposition {
  double c2 = 0.0;
  double c0 = 1.0;
  double c_phi = 1.0;
  double c_v = 0.0;
  double n = 0.0;
  double n_phi = 0.0;

  /// Closure and normalization checks (1e-12); throws validation_error.
  void validate() const;
};

/// Exact decomposition built from the temporal-pair scalars:
/// two-photon amplitude ∝ n_nu (1 + i_delta)/√2, vacuum amplitude ∝ f_delta,
/// n_phi = the sum of their squares, n = n_nu²(1 + i_delta²) + f_delta²,
/// C_phi = n_phi/n and C_v = 1 − C_phi. delta = 0 gives C_phi = 1 exactly.
ConditionalDecomposition decompose(double delta, const opo::OpoParams& params,
                                   double rel_tol = 1e-11);

/// Same record assembled from a precomputed TemporalPair.
ConditionalDecomposition decompose(const opo::TemporalPair& pair, const opo::OpoParams& params);

/// The two-detection interference picture: per temporal branch (±) a
/// normalized two-term state (coeffs on |2±>, |0±>) with weight sigma±,
/// built from the closed-form time integrals
///   a± = (1 ± e^{−ζ₋Δ})/ζ₋ − (1 ± e^{−ζ₊Δ})/ζ₊,
///   b± = (1 ± e^{−ζ₋Δ})/ζ₋ + (1 ± e^{−ζ₊Δ})/ζ₊,
/// amplitudes (√2 a±, b±)/σ± and σ±² = 2a±² + b±². At delta = 0 the minus
/// branch degenerates: sigma_minus = 0 and its coefficients are zeroed.
struct InterferenceDecomposition {
  std::array<double, 2> gamma_plus_coeffs{};  ///< (two-photon, vacuum) amplitudes
  std::array<double, 2> gamma_minus_coeffs{}; ///< (two-photon, vacuum) amplitudes
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
  double a_plus = 0.0;
  double b_plus = 0.0;
  double a_minus = 0.0;
  double b_minus = 0.0;

  void validate() const;
};

InterferenceDecomposition interference_decompose(double delta, const opo::OpoParams& params);

/// Leading-order (in epsilon/zeta0) picture of the conditional state.
struct SmallEpsilonDecomposition {
  ConditionalDecomposition approx; ///< weights/amplitudes to leading order
  double sigma_plus = 0.0;         ///< ≈ (1 + e^{−ζ₀Δ})/2
  double sigma_minus = 0.0;        ///< ≈ (1 − e^{−ζ₀Δ})/2
  double delta_plus = 1.0;         ///< 1 + ζ₀Δ e^{−ζ₀Δ}/(1 + e^{−ζ₀Δ})
  double delta_minus = 1.0;        ///< 1 − ζ₀Δ e^{−ζ₀Δ}/(1 − e^{−ζ₀Δ})
  double phi_two_photon_coeff = 0.0; ///< √2 ε δ₊/ζ₀ (unnormalized |2> amplitude)
  double phi_vacuum_coeff = 1.0;     ///< 1 − tanh(ζ₀Δ/2) (unnormalized |0> amplitude)
};

/// delta_minus is 0/0 at delta = 0 (the antisymmetric branch is empty); it is
/// reported as 0 there, the limit of its defining expression.
SmallEpsilonDecomposition small_epsilon(double delta, const opo::OpoParams& params);

} // namespace catgen::conditional
