#include "catgen/single_mode.hpp"

#include "catgen/errors.hpp"
#include "catgen/threading.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

namespace catgen::single_mode {

void SuperpositionSpec::validate() const {
  if (top_n < 0) throw validation_error("SuperpositionSpec: top_n must be >= 0");
  const int floor = top_n % 2;
  const std::size_t expected = static_cast<std::size_t>((top_n - floor) / 2 + 1);
  if (coeffs.size() != expected) {
    std::ostringstream msg;
    msg << "SuperpositionSpec: expected " << expected << " coefficients for top_n=" << top_n
        << ", got " << coeffs.size();
    throw validation_error(msg.str());
  }
  double norm2 = 0.0;
  for (const Complex& c : coeffs) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "SuperpositionSpec: coefficients have norm² " << norm2 << ", expected 1";
    throw validation_error(msg.str());
  }
}

FockVector realize(const SuperpositionSpec& spec, int dim) {
  spec.validate();
  if (spec.top_n >= dim) throw validation_error("realize: top_n outside truncation");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    amps[spec.top_n - 2 * static_cast<int>(i)] = spec.coeffs[i];
  }
  return fock::squeeze(FockVector{std::move(amps)}, -spec.r);
}

FockVector n_photon_subtracted(double r, int n, int dim) {
  if (n < 0) throw validation_error("n_photon_subtracted: n must be >= 0");
  if (!(r > 0.0)) throw validation_error("n_photon_subtracted: r must be > 0");
  const FockVector squeezed = fock::squeeze(fock::vacuum(dim), -r);
  const FockVector raw = fock::annihilate(squeezed, n);
  if (raw.norm() < 1e-150) {
    throw validation_error("n_photon_subtracted: subtraction produced the zero vector");
  }
  return raw.normalized();
}

FockVector n_photon_subtracted_commuted(double r, int n, int dim) {
  if (n < 0) throw validation_error("n_photon_subtracted_commuted: n must be >= 0");
  if (!(r > 0.0)) throw validation_error("n_photon_subtracted_commuted: r must be > 0");
  const Eigen::MatrixXcd a = fock::annihilation_matrix(dim).cast<Complex>();
  const Eigen::MatrixXcd mixed = std::cosh(r) * a + std::sinh(r) * a.adjoint();
  Eigen::VectorXcd amps = fock::vacuum(dim).amps;
  for (int k = 0; k < n; ++k) amps = mixed * amps;
  return fock::squeeze(FockVector{std::move(amps)}.normalized(), -r);
}

FockVector squeezed_coherent_hermite(double alpha, double r, int dim) {
  if (dim < 1) throw validation_error("squeezed_coherent_hermite: dim must be >= 1");
  const double lambda = std::tanh(r);
  const double q = alpha / std::cosh(r);
  Eigen::VectorXcd amps(dim);
  amps[0] = 1.0;
  if (dim > 1) amps[1] = q;
  for (int m = 1; m + 1 < dim; ++m) {
    amps[m + 1] =
        q * amps[m] / std::sqrt(m + 1.0) + lambda * std::sqrt(m / (m + 1.0)) * amps[m - 1];
  }
  return FockVector{std::move(amps)}.normalized();
}

SuperpositionSpec psi2_spec(double alpha, double r) {
  if (!(alpha > 0.0)) throw validation_error("psi2_spec: alpha must be > 0");
  const double lambda = std::tanh(r);
  const double c2 = ((1.0 - lambda * lambda) * alpha * alpha - lambda) / std::numbers::sqrt2;
  const double c0 = 1.0;
  const double norm = std::hypot(c2, c0);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw validation_error("psi2_spec: degenerate coefficient pair");
  }
  return SuperpositionSpec{2, {Complex(c2 / norm), Complex(c0 / norm)}, r};
}

FockVector psi2_state(double alpha, double r, int dim) {
  return realize(psi2_spec(alpha, r), dim).normalized();
}

namespace {

/// Both fidelities |<C₊(alpha)|state(r)>|² as functions of w = S(r)|C₊>.
/// The squeeze matrix is real, so w is real on a real cat.
struct TwoFidelities {
  double two_photon;
  double psi2;
};

TwoFidelities fidelities_at(const FockVector& cat, double r) {
  const FockVector w = fock::squeeze(cat, r);
  const double w0 = w.amps[0].real();
  const double w2 = w.amps[2].real();
  // a² S(−r)|0> has pre-squeeze components ∝ (√2 sinh r |2> + cosh r |0>).
  const double s = std::sinh(r);
  const double c = std::cosh(r);
  const double denom = 2.0 * s * s + c * c;
  const double overlap = std::numbers::sqrt2 * s * w2 + c * w0;
  return {overlap * overlap / denom, w0 * w0 + w2 * w2};
}

double objective(const FockVector& cat, double r, Variant variant) {
  const TwoFidelities f = fidelities_at(cat, r);
  return variant == Variant::two_photon_subtracted ? f.two_photon : f.psi2;
}

struct GoldenResult {
  double x;
  double value;
};

GoldenResult golden_maximize(const std::function<double(double)>& f, double lo, double hi,
                             double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  int iter = 0;
  while (b - a > tol) {
    if (++iter > 200) {
      std::ostringstream msg;
      msg << "golden-section search failed to converge on [" << lo << ", " << hi
          << "] (width " << b - a << " after " << iter << " iterations)";
      throw convergence_error(msg.str());
    }
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

CurvePoint optimize_point(double alpha, Variant variant, int dim) {
  if (!(alpha > 0.0)) throw validation_error("optimal_fidelity_curve: alpha must be > 0");
  const FockVector cat = fock::cat_state(alpha, fock::Parity::even, dim);
  auto f = [&](double r) { return objective(cat, r, variant); };

  double lo = 1e-4, hi = 2.0;
  constexpr int scan_points = 48;
  for (int widen = 0;; ++widen) {
    // Coarse scan: the psi2 objective can be bimodal in r at small alpha, so
    // locate the global basin before refining.
    int best = 0;
    double best_val = -1.0;
    std::vector<double> xs(scan_points);
    for (int i = 0; i < scan_points; ++i) {
      xs[i] = lo + (hi - lo) * i / (scan_points - 1.0);
      const double val = f(xs[i]);
      if (val > best_val) {
        best_val = val;
        best = i;
      }
    }
    if (best > 0 && best < scan_points - 1) {
      const GoldenResult g = golden_maximize(f, xs[best - 1], xs[best + 1], 1e-8);
      double r_opt = g.x;
      double fid = g.value;
      if (variant == Variant::psi2) {
        // The two-photon optimum is always an admissible candidate and, by
        // the projection argument, can only improve the two-term fidelity.
        const CurvePoint anchor = optimize_point(alpha, Variant::two_photon_subtracted, dim);
        const double at_anchor = f(anchor.r_opt);
        if (at_anchor > fid) {
          fid = at_anchor;
          r_opt = anchor.r_opt;
        }
      }
      return {alpha, fid, r_opt};
    }
    if (widen >= 2) {
      // A lower-edge pin is the legitimate r -> 0 limit (no squeezing wins
      // for small alpha), so only an upper-edge pin warrants a warning.
      if (best != 0) {
        std::cerr << "catgen: warning: squeezing optimum for alpha=" << alpha
                  << " pinned at bracket edge [" << lo << ", " << hi << "]\n";
      }
      const GoldenResult g =
          golden_maximize(f, best == 0 ? lo : xs[scan_points - 2], best == 0 ? xs[1] : hi, 1e-8);
      return {alpha, g.value, g.x};
    }
    if (best == 0) {
      lo = std::max(1e-10, lo * 1e-3);
    } else {
      hi = std::min(4.0, hi * 1.5);
    }
  }
}

} // namespace

CurvePoint optimal_fidelity_point(double alpha, Variant variant, int dim) {
  return optimize_point(alpha, variant, dim);
}

std::vector<CurvePoint> optimal_fidelity_curve(const std::vector<double>& alpha_grid,
                                               Variant variant, int dim) {
  if (alpha_grid.empty()) throw validation_error("optimal_fidelity_curve: empty grid");
  std::vector<CurvePoint> out(alpha_grid.size());
  parallel_for(alpha_grid.size(),
               [&](std::size_t i) { out[i] = optimize_point(alpha_grid[i], variant, dim); });
  return out;
}

} // namespace catgen::single_mode
