#pragma once

#include "catgen/fock.hpp"

#include <complex>
#include <vector>

namespace catgen::single_mode {

using fock::Complex;
using fock::FockVector;

/// A squeezed finite superposition S(−r)(c_top|top_n> + c_{top_n−2}|top_n−2> + ...)
/// running down in steps of two to the parity floor (0 or 1).
struct SuperpositionSpec {
  int top_n = 0;
  std::vector<Complex> coeffs; ///< c_{top_n}, c_{top_n−2}, ..., unit norm
  double r = 0.0;              ///< S(−r) is applied to the bare superposition

  /// Checks indexing consistency and unit norm (1e-12).
  void validate() const;
};

/// Builds the Fock vector described by a SuperpositionSpec.
FockVector realize(const SuperpositionSpec& spec, int dim = fock::default_dim);

/// Normalized n-photon-subtracted squeezed vacuum a^n S(−r)|0>, computed by
/// direct application of the annihilation operator.
FockVector n_photon_subtracted(double r, int n, int dim = fock::default_dim);

/// Same state computed by commuting a^n through the squeeze:
/// S(−r)(a cosh r + a† sinh r)^n |0>. Used to cross-check operator ordering.
FockVector n_photon_subtracted_commuted(double r, int n, int dim = fock::default_dim);

/// Fock expansion of S(−r)|alpha> through the Hermite-polynomial recurrence
/// (coefficients t_{m+1} = (alpha/cosh r) t_m/√(m+1) + tanh r √(m/(m+1)) t_{m−1},
/// the three-term Hermite recurrence with the √λ factors folded in, which
/// stays real and branch-free for either sign of r; r = 0 reduces to the
/// plain coherent state). Must match the operator route squeeze(coherent, −r).
FockVector squeezed_coherent_hermite(double alpha, double r, int dim = fock::default_dim);

/// Two-term spec of the best squeezed (|2>, |0>) approximation to an even cat:
/// coefficients ∝ (((1−λ²)α² − λ)/√2, 1) with λ = tanh r.
SuperpositionSpec psi2_spec(double alpha, double r);

/// The normalized state of psi2_spec.
FockVector psi2_state(double alpha, double r, int dim = fock::default_dim);

enum class Variant {
  two_photon_subtracted, ///< a² S(−r)|0>, r optimized
  psi2                   ///< best squeezed two-term superposition, r optimized
};

struct CurvePoint {
  double alpha;    ///< even-cat amplitude
  double fidelity; ///< max_r |<C₊(alpha)|state(r)>|²
  double r_opt;    ///< maximizing squeezing parameter
};

/// Fidelity-vs-amplitude curve for one of the two approximating families.
/// The squeezing parameter is maximized per point by a coarse scan plus
/// golden-section refinement (tolerance 1e-8 in r); the scan step guards
/// against the secondary local maximum the psi2 objective develops at small
/// alpha. Points are processed in parallel with deterministic ordering.
std::vector<CurvePoint> optimal_fidelity_curve(const std::vector<double>& alpha_grid,
                                               Variant variant,
                                               int dim = fock::default_dim);

/// Single-point version of optimal_fidelity_curve.
CurvePoint optimal_fidelity_point(double alpha, Variant variant, int dim = fock::default_dim);

} // namespace catgen::single_mode
