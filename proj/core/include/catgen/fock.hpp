#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace catgen::fock {

using Complex = std::complex<double>;

/// Default photon-number truncation. States used here have negligible support
/// above n ~ 20 for the parameter ranges of interest; doubling the dimension
/// is the standard convergence check applied in the tests.
inline constexpr int default_dim = 40;

/// Tail-mass threshold above which a truncated expansion is considered
/// unconverged.
inline constexpr double default_truncation_tol = 1e-10;

/// Pure state in the photon-number basis: amps[n] multiplies |n>.
struct FockVector {
  Eigen::VectorXcd amps;

  int dim() const { return static_cast<int>(amps.size()); }
  double norm() const { return amps.norm(); }
  /// Population in the top `last` basis states; small values certify that the
  /// truncation did not clip the state.
  double tail_mass(int last = 4) const;
  /// Returns the unit-norm copy. Throws validation_error for a (near-)zero
  /// vector.
  FockVector normalized() const;
};

/// Mixed state in the photon-number basis.
struct DensityOperator {
  Eigen::MatrixXcd mat;

  int dim() const { return static_cast<int>(mat.rows()); }
  static DensityOperator pure(const FockVector& state);
  /// Convex mixture sum_i w_i |psi_i><psi_i|; weights are taken as given (the
  /// caller normalizes).
  static DensityOperator mixture(const std::vector<std::pair<double, FockVector>>& terms);
  /// Checks Hermiticity (1e-12), unit trace (1e-10) and eigenvalue
  /// positivity (>= -1e-10); throws validation_error on failure.
  void validate() const;
};

/// Fixed quadrature convention used throughout: X = (a + a†)/√2,
/// P = (a − a†)/(i√2), vacuum variance <X²> = 1/2. Under this convention the
/// vacuum characteristic function is exp[−(u² + v²)/4].
struct QuadratureConvention {
  static constexpr double vacuum_variance = 0.5;
  static double vacuum_characteristic(double u, double v);
};

// ---- basis and operator builders ----

FockVector vacuum(int dim = default_dim);
FockVector basis_state(int n, int dim = default_dim);

/// Matrix of the annihilation operator a (real entries sqrt(n)).
Eigen::MatrixXd annihilation_matrix(int dim);
/// Matrix of X = (a + a†)/√2.
Eigen::MatrixXd position_matrix(int dim);
/// Matrix of P = (a − a†)/(i√2) (purely imaginary entries).
Eigen::MatrixXcd momentum_matrix(int dim);

/// Unitary displacement exp(beta a† − beta* a) in the truncated basis.
/// Mainly a test oracle for characteristic/Wigner conventions.
Eigen::MatrixXcd displacement_operator(Complex beta, int dim);

// ---- states ----

/// Coherent state amplitudes e^{−|α|²/2} αⁿ/√(n!). Emits a warning on stderr
/// if the truncated tail mass exceeds `truncation_tol`.
FockVector coherent_state(Complex alpha, int dim = default_dim,
                          double truncation_tol = default_truncation_tol);

enum class Parity { even, odd };

/// Normalized even/odd superposition of |α> and |−α> (α real ≥ 0; the odd
/// superposition at α = 0 is the zero vector and raises validation_error).
FockVector cat_state(double alpha, Parity parity, int dim = default_dim);

// ---- operations ----

/// Applies S(r) = exp[(r/2)(a² − a†²)]. Positive r squeezes X, negative r
/// squeezes P. Throws convergence_error when the truncated exponential is not
/// unitary to 1e-10 (residual reported in the message).
FockVector squeeze(const FockVector& state, double r);

/// The squeeze unitary itself.
Eigen::MatrixXd squeeze_operator(double r, int dim);

/// Applies the annihilation operator n_times. The result is intentionally
/// left unnormalized (the norm carries the heralding weight).
FockVector annihilate(const FockVector& state, int n_times);

/// |<a|b>|² for normalized pure states.
double fidelity_pure(const FockVector& a, const FockVector& b);

// ---- observables ----

double expectation_n(const FockVector& state);
/// (mean, variance) of the X quadrature.
std::pair<double, double> x_moments(const FockVector& state);
/// (mean, variance) of the P quadrature.
std::pair<double, double> p_moments(const FockVector& state);

/// Wigner function W(x, p) of a Fock-basis density operator, evaluated with
/// the associated-Laguerre kernel under the fixed convention. For any valid
/// state, 2π·W ∈ [−2, 2] and the phase-space integral of W is 1.
double wigner_point(const DensityOperator& rho, double x, double p);

} // namespace catgen::fock
