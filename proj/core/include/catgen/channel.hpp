#pragma once

#include "catgen/opo.hpp"

#include <Eigen/Dense>

#include <utility>

namespace catgen::channel {

/// 2x2 real symmetric quadrature covariance matrix; vacuum = diag(1/2, 1/2).
using Covariance = Eigen::Matrix2d;

Covariance vacuum_covariance();

/// Throws validation_error unless gamma is symmetric and satisfies the
/// uncertainty bound det(gamma) >= 1/4 − 1e−10.
void validate_covariance(const Covariance& gamma);

enum class Branch { plus, minus };

/// Diagonal Gaussian map acting on the symmetric (+) or antisymmetric (−)
/// temporal mode: amplitude matrix S = diag(G_X, G_P) and additive noise
/// described by Y = diag(F_X − G_X², F_P − G_P²).
struct GaussianChannel {
  double g_x = 1.0;
  double g_p = 1.0;
  double f_x = 1.0;
  double f_p = 1.0;
  Branch branch = Branch::plus;

  Eigen::Matrix2d s() const;
  Eigen::Matrix2d y() const;

  /// Covariance update Γ_out = Sᵀ Γ_in S + Y/2. The half on the noise term
  /// makes the map consistent with the vacuum-input second moments: the
  /// vacuum maps exactly to ½ diag(F_X, F_P).
  Covariance apply(const Covariance& gamma_in) const;

  /// Throws convergence_error if the noise diagonal or n̄ = G_X G_P − 1 drops
  /// below −1e−10 (a physicality violation signalling quadrature inaccuracy).
  void validate() const;
};

/// Gain integrals (1/2π)∫ g^{±1}(Ω)|Ψ_branch(Ω)|² dΩ with
/// g(Ω) = μ̄ + ν̄ = sqrt((ζ₊²+Ω²)/(ζ₋²+Ω²)); returns (G_X, G_P), G_X ≥ 1 ≥ G_P.
/// The minus branch requires delta > 0.
std::pair<double, double> g_integrals(double delta, const opo::OpoParams& params, Branch branch,
                                      double rel_tol = 1e-11);

/// Closed-form second-moment scalars
/// F_X± = ζ₀²ε²{1 ± (1+ζ₋Δ)e^{−ζ₋Δ}}/(ζ₋³ 𝒩_ν (1±I_Δ)) and the matching
/// F_P± with ζ₊; returns (F_X, F_P).
std::pair<double, double> f_integrals(double delta, const opo::OpoParams& params, Branch branch);

/// Quadrature route for the same scalars (defining integrals with the
/// (1 ± cos ΩΔ) weights); regression oracle for f_integrals.
std::pair<double, double> f_integrals_spectral(double delta, const opo::OpoParams& params,
                                               Branch branch, double rel_tol = 1e-11);

/// Assembles and validates the channel for one branch.
GaussianChannel make_channel(double delta, const opo::OpoParams& params, Branch branch,
                             double rel_tol = 1e-11);

/// Effective squeezing r = −½ ln(G_X/G_P) and thermal photon number
/// n̄ = G_X G_P − 1 of the channel.
std::pair<double, double> effective_params(const GaussianChannel& ch);

} // namespace catgen::channel
