#include "catgen/fock.hpp"

#include "catgen/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

namespace catgen::fock {

namespace {

void require_dim(int dim) {
  if (dim < 1) throw validation_error("Fock dimension must be >= 1");
}

} // namespace

double FockVector::tail_mass(int last) const {
  const int n = dim();
  const int from = std::max(0, n - last);
  double mass = 0.0;
  for (int i = from; i < n; ++i) mass += std::norm(amps[i]);
  return mass;
}

FockVector FockVector::normalized() const {
  const double n = norm();
  if (!(n > 1e-150)) {
    throw validation_error("cannot normalize a zero Fock vector");
  }
  return FockVector{amps / n};
}

DensityOperator DensityOperator::pure(const FockVector& state) {
  return DensityOperator{state.amps * state.amps.adjoint()};
}

DensityOperator DensityOperator::mixture(
    const std::vector<std::pair<double, FockVector>>& terms) {
  if (terms.empty()) throw validation_error("mixture of zero states");
  const int n = terms.front().second.dim();
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [weight, state] : terms) {
    if (state.dim() != n) throw validation_error("mixture terms must share one dimension");
    mat += weight * (state.amps * state.amps.adjoint());
  }
  return DensityOperator{std::move(mat)};
}

void DensityOperator::validate() const {
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    std::ostringstream msg;
    msg << "density operator is not Hermitian (residual " << herm << ")";
    throw validation_error(msg.str());
  }
  const double trace_err = std::abs(mat.trace().real() - 1.0);
  if (trace_err > 1e-10) {
    std::ostringstream msg;
    msg << "density operator trace deviates from 1 by " << trace_err;
    throw validation_error(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-10) {
    std::ostringstream msg;
    msg << "density operator has negative eigenvalue " << min_eig;
    throw validation_error(msg.str());
  }
}

double QuadratureConvention::vacuum_characteristic(double u, double v) {
  return std::exp(-0.25 * (u * u + v * v));
}

FockVector vacuum(int dim) { return basis_state(0, dim); }

FockVector basis_state(int n, int dim) {
  require_dim(dim);
  if (n < 0 || n >= dim) throw validation_error("basis_state: n outside truncation");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps[n] = 1.0;
  return FockVector{std::move(amps)};
}

Eigen::MatrixXd annihilation_matrix(int dim) {
  require_dim(dim);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXd position_matrix(int dim) {
  const Eigen::MatrixXd a = annihilation_matrix(dim);
  return (a + a.transpose()) / std::numbers::sqrt2;
}

Eigen::MatrixXcd momentum_matrix(int dim) {
  const Eigen::MatrixXd a = annihilation_matrix(dim);
  const Complex denom(0.0, std::numbers::sqrt2);
  return (a - a.transpose()).cast<Complex>() / denom;
}

Eigen::MatrixXcd displacement_operator(Complex beta, int dim) {
  const Eigen::MatrixXcd a = annihilation_matrix(dim).cast<Complex>();
  const Eigen::MatrixXcd gen = beta * a.adjoint() - std::conj(beta) * a;
  return gen.exp();
}

FockVector coherent_state(Complex alpha, int dim, double truncation_tol) {
  require_dim(dim);
  Eigen::VectorXcd amps(dim);
  amps[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) amps[n] = amps[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  FockVector state{std::move(amps)};
  if (state.tail_mass() > truncation_tol) {
    std::cerr << "catgen: warning: coherent state |alpha|=" << std::abs(alpha)
              << " poorly truncated at dim=" << dim << " (tail mass " << state.tail_mass()
              << ")\n";
  }
  return state;
}

FockVector cat_state(double alpha, Parity parity, int dim) {
  require_dim(dim);
  if (alpha < 0.0) throw validation_error("cat_state: alpha must be >= 0");
  if (parity == Parity::odd && alpha == 0.0) {
    throw validation_error("cat_state: odd superposition at alpha = 0 is the zero vector");
  }
  const FockVector coh = coherent_state(alpha, dim);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  const int keep = (parity == Parity::even) ? 0 : 1;
  for (int n = keep; n < dim; n += 2) amps[n] = coh.amps[n];
  return FockVector{std::move(amps)}.normalized();
}

Eigen::MatrixXd squeeze_operator(double r, int dim) {
  require_dim(dim);
  const Eigen::MatrixXd a = annihilation_matrix(dim);
  const Eigen::MatrixXd a2 = a * a;
  const Eigen::MatrixXd gen = 0.5 * r * (a2 - a2.transpose());
  Eigen::MatrixXd u = gen.exp();
  const Eigen::MatrixXd residual =
      u.transpose() * u - Eigen::MatrixXd::Identity(dim, dim);
  const double res = residual.cwiseAbs().maxCoeff();
  if (res > 1e-10) {
    std::ostringstream msg;
    msg << "squeeze operator exponential lost unitarity (residual " << res << " at r=" << r
        << ", dim=" << dim << ")";
    throw convergence_error(msg.str());
  }
  return u;
}

FockVector squeeze(const FockVector& state, double r) {
  if (r == 0.0) return state;
  const Eigen::MatrixXd u = squeeze_operator(r, state.dim());
  return FockVector{u * state.amps};
}

FockVector annihilate(const FockVector& state, int n_times) {
  if (n_times < 0) throw validation_error("annihilate: n_times must be >= 0");
  Eigen::VectorXcd amps = state.amps;
  const int dim = state.dim();
  for (int k = 0; k < n_times; ++k) {
    for (int n = 0; n + 1 < dim; ++n) amps[n] = amps[n + 1] * std::sqrt(n + 1.0);
    amps[dim - 1] = 0.0;
  }
  return FockVector{std::move(amps)};
}

double fidelity_pure(const FockVector& a, const FockVector& b) {
  const int n = std::min(a.dim(), b.dim());
  const Complex overlap = a.amps.head(n).dot(b.amps.head(n));
  return std::norm(overlap);
}

double expectation_n(const FockVector& state) {
  double total = 0.0;
  for (int n = 0; n < state.dim(); ++n) total += n * std::norm(state.amps[n]);
  return total;
}

namespace {

std::pair<double, double> quadrature_moments(const FockVector& state,
                                             const Eigen::MatrixXcd& op) {
  const Eigen::VectorXcd opv = op * state.amps;
  const double mean = state.amps.dot(opv).real();
  const double second = opv.squaredNorm(); // <psi|op² |psi> for Hermitian op
  return {mean, second - mean * mean};
}

} // namespace

std::pair<double, double> x_moments(const FockVector& state) {
  return quadrature_moments(state, position_matrix(state.dim()).cast<Complex>());
}

std::pair<double, double> p_moments(const FockVector& state) {
  return quadrature_moments(state, momentum_matrix(state.dim()));
}

double wigner_point(const DensityOperator& rho, double x, double p) {
  // Associated-Laguerre kernel for the fixed convention:
  //   W(x,p) = (1/pi) e^{-s} [ sum_m rho_mm (-1)^m L_m(2s)
  //            + 2 Re sum_{m<n} rho_mn (-1)^m sqrt(m!/n!) z^{n-m} L_m^{n-m}(2s) ]
  // with s = x² + p² and z = √2 (x + i p).
  const int dim = rho.dim();
  const double s = x * x + p * p;
  const double arg = 2.0 * s;

  // Laguerre table lag(m, k) = L_m^k(arg) via the three-term recurrence in m.
  Eigen::MatrixXd lag(dim, dim);
  for (int k = 0; k < dim; ++k) {
    lag(0, k) = 1.0;
    if (dim > 1) lag(1, k) = 1.0 + k - arg;
    for (int m = 1; m + 1 < dim; ++m) {
      lag(m + 1, k) =
          ((2.0 * m + k + 1.0 - arg) * lag(m, k) - (m + k) * lag(m - 1, k)) / (m + 1.0);
    }
  }

  double diag = 0.0;
  for (int m = 0; m < dim; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    diag += rho.mat(m, m).real() * sign * lag(m, 0);
  }

  double off = 0.0;
  if (s > 0.0) {
    const Complex z = std::numbers::sqrt2 * Complex(x, p);
    const double log_abs_z = 0.5 * std::log(2.0 * s);
    const double arg_z = std::arg(z);
    for (int m = 0; m < dim; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      for (int n = m + 1; n < dim; ++n) {
        const int k = n - m;
        // sqrt(m!/n!) |z|^k with logs to avoid overflow at large k
        const double mag = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)) +
                                    k * log_abs_z);
        const Complex zk = std::polar(mag, k * arg_z);
        off += (rho.mat(m, n) * zk).real() * sign * lag(m, k);
      }
    }
  }

  return std::exp(-s) * (diag + 2.0 * off) / std::numbers::pi;
}

} // namespace catgen::fock
