#pragma once

#include "catgen/quadrature.hpp"

#include <utility>

namespace catgen::opo {

/// Below-threshold degenerate OPO parameters. zeta0 is the cavity bandwidth
/// and epsilon the pump strength; the output-spectrum linewidths are
/// zeta_plus = zeta0 + epsilon and zeta_minus = zeta0 − epsilon. Everything
/// downstream works in dimensionless units when zeta0 = 1.
struct OpoParams {
  double zeta0 = 1.0;
  double epsilon = 0.0;

  double zeta_plus() const { return zeta0 + epsilon; }
  double zeta_minus() const { return zeta0 - epsilon; }

  /// Throws validation_error unless 0 < epsilon < zeta0 (below threshold).
  void validate() const;

  static OpoParams from_ratio(double epsilon_ratio, double zeta0 = 1.0);
};

/// Scalars attached to a detection-time separation delta = |t2 − t1|:
/// the squeezed-spectrum normalization n_nu, the temporal-mode overlap
/// i_delta in [0, 1], and the cross integral f_delta.
struct TemporalPair {
  double delta = 0.0;
  double n_nu = 0.0;
  double i_delta = 0.0;
  double f_delta = 0.0;
};

// ---- spectral functions (omega in the same units as zeta0) ----

/// Cosh-like Bogoliubov amplitude (zeta0² + epsilon² + omega²)/
/// sqrt((zeta_plus² + omega²)(zeta_minus² + omega²)); even, >= 1.
double mu_bar(double omega, const OpoParams& params);

/// Sinh-like Bogoliubov amplitude 2 zeta0 epsilon / sqrt(same); even, >= 0.
/// Satisfies mu_bar² − nu_bar² = 1 pointwise.
double nu_bar(double omega, const OpoParams& params);

/// Phase of the output Bogoliubov transformation, on the continuous branch
/// with theta(0) = 0, theta odd, theta → pi as omega → inf.
double theta(double omega, const OpoParams& params);

// ---- temporal-mode scalars ----

/// Closed-form normalization (zeta0 epsilon/2)(1/zeta_minus − 1/zeta_plus).
double n_nu(const OpoParams& params);

/// Parseval route (1/2pi) integral of nu_bar² over the real line; test oracle
/// for n_nu.
double n_nu_spectral(const OpoParams& params, double rel_tol = 1e-11);

/// Overlap of the two shifted temporal wavepackets. Ships the closed
/// partial-fractions form [e^{−zeta_minus delta}/zeta_minus −
/// e^{−zeta_plus delta}/zeta_plus]/(1/zeta_minus − 1/zeta_plus);
/// i_delta(0) = 1, monotone to 0.
double i_delta(double delta, const OpoParams& params);

/// Spectral route (1/2pi n_nu) integral nu_bar² cos(omega delta); test oracle
/// for i_delta.
double i_delta_spectral(double delta, const OpoParams& params, double rel_tol = 1e-11);

/// Cross integral of the two-time correlation kernels, computed spectrally:
/// (1/2pi) integral mu_bar nu_bar cos(omega delta) d omega.
double f_delta(double delta, const OpoParams& params, double rel_tol = 1e-11);

/// Closed partial-fractions form (zeta0 epsilon/2)[e^{−zeta_minus delta}/
/// zeta_minus + e^{−zeta_plus delta}/zeta_plus]; cross-check for f_delta.
double f_delta_closed(double delta, const OpoParams& params);

/// Bundles delta with n_nu, i_delta and f_delta.
TemporalPair make_temporal_pair(double delta, const OpoParams& params, double rel_tol = 1e-11);

// ---- temporal wavepackets (time origin centered: t1 = −delta/2, t2 = +delta/2) ----

/// Normalized temporal wavepacket psi(t) = (1/pi sqrt(n_nu)) integral
/// nu_bar cos(omega t) d omega; even, unit L² norm.
double psi_t(double t, const OpoParams& params, double rel_tol = 1e-11);

/// Symmetric/antisymmetric orthonormal combinations
/// Psi±(t) = [psi(t − delta/2) ± psi(t + delta/2)]/sqrt(2(1 ± i_delta)).
/// The minus mode is undefined at delta = 0 (validation_error).
std::pair<double, double> psi_pm(double t, double delta, const OpoParams& params,
                                 double rel_tol = 1e-11);

/// Spectral amplitudes of the orthonormal pair about the centered origin,
/// with psi(omega) = nu_bar/sqrt(n_nu): the plus mode
/// 2 psi(omega) cos(omega delta/2)/sqrt(2(1+I)) (real, even) and the
/// imaginary part 2 psi(omega) sin(omega delta/2)/sqrt(2(1−I)) of the minus
/// mode (whose full amplitude is i times this odd function).
std::pair<double, double> psi_pm_spectral(double omega, double delta, const OpoParams& params);

/// Full-line integrals (1/2pi) integral mu_bar Psi+ Psi− and (1/2pi) integral
/// nu_bar Psi+ Psi− evaluated without exploiting parity; both vanish for the
/// centered origin (the squeezer does not couple the two modes).
std::pair<double, double> mode_coupling_integrals(double delta, const OpoParams& params,
                                                  double rel_tol = 1e-11);

} // namespace catgen::opo
