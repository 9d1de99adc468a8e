#include "catgen/wigner.hpp"

#include "catgen/errors.hpp"
#include "catgen/threading.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <sstream>
#include <utility>

namespace catgen::wigner {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;

WignerGrid grid_from_function(const std::vector<double>& x_axis, const std::vector<double>& p_axis,
                              const std::function<double(double, double)>& f) {
  WignerGrid g;
  g.x_axis = x_axis;
  g.p_axis = p_axis;
  g.x_weights = trapezoid_weights(x_axis);
  g.p_weights = trapezoid_weights(p_axis);
  g.values.resize(static_cast<Eigen::Index>(x_axis.size()), static_cast<Eigen::Index>(p_axis.size()));
  parallel_for(x_axis.size(), [&](std::size_t i) {
    const auto row = static_cast<Eigen::Index>(i);
    for (std::size_t j = 0; j < p_axis.size(); ++j) {
      g.values(row, static_cast<Eigen::Index>(j)) = f(x_axis[i], p_axis[j]);
    }
  });
  return g;
}

void require_matching_axes(const WignerGrid& a, const WignerGrid& b) {
  bool ok = a.x_axis.size() == b.x_axis.size() && a.p_axis.size() == b.p_axis.size();
  if (ok) {
    for (std::size_t i = 0; i < a.x_axis.size(); ++i) {
      ok = ok && std::abs(a.x_axis[i] - b.x_axis[i]) < 1e-12;
    }
    for (std::size_t j = 0; j < a.p_axis.size(); ++j) {
      ok = ok && std::abs(a.p_axis[j] - b.p_axis[j]) < 1e-12;
    }
  }
  if (!ok) {
    throw validation_error("grid_overlap requires both grids to share the same axes");
  }
}

/// Polynomial prefactor of chi_phi (the factor multiplying the Gaussian).
double chi_phi_polynomial(double u, double v, double c2, double c0) {
  const double s = u * u + v * v;
  return 1.0 - c2 * c2 * s + c2 * c2 / 8.0 * s * s - c0 * c2 / sqrt2 * (u * u - v * v);
}

} // namespace

double WignerGrid::integral() const {
  return x_weights.dot(values * p_weights);
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2 || !(hi > lo)) {
    throw validation_error("linspace requires n >= 2 and hi > lo");
  }
  std::vector<double> pts(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    pts[static_cast<std::size_t>(i)] = lo + step * i;
  }
  pts.back() = hi;
  return pts;
}

Eigen::VectorXd trapezoid_weights(const std::vector<double>& axis) {
  const auto n = static_cast<Eigen::Index>(axis.size());
  if (n < 2) {
    throw validation_error("trapezoid_weights requires at least two points");
  }
  Eigen::VectorXd w(n);
  w(0) = 0.5 * (axis[1] - axis[0]);
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    w(i) = 0.5 * (axis[static_cast<std::size_t>(i) + 1] - axis[static_cast<std::size_t>(i) - 1]);
  }
  w(n - 1) = 0.5 * (axis.back() - axis[axis.size() - 2]);
  return w;
}

double grid_overlap(const WignerGrid& a, const WignerGrid& b) {
  require_matching_axes(a, b);
  return 2.0 * pi * a.x_weights.dot(a.values.cwiseProduct(b.values) * b.p_weights);
}

double chi_phi(double u, double v, double c2, double c0) {
  const double s = u * u + v * v;
  return chi_phi_polynomial(u, v, c2, c0) * std::exp(-0.25 * s);
}

double chi_plus(double u, double v, const conditional::ConditionalDecomposition& decomp,
                const channel::GaussianChannel& ch) {
  ch.validate();
  const double poly = chi_phi_polynomial(ch.g_x * u, ch.g_p * v, decomp.c2, decomp.c0);
  const double envelope = std::exp(-0.25 * (ch.f_x * u * u + ch.f_p * v * v));
  return (decomp.c_phi * poly + decomp.c_v) * envelope;
}

double w_plus_closed(double x, double p, const conditional::ConditionalDecomposition& decomp,
                     const channel::GaussianChannel& ch) {
  const double c2 = decomp.c2;
  const double c0 = decomp.c0;
  const double gx2 = ch.g_x * ch.g_x;
  const double gp2 = ch.g_p * ch.g_p;
  const double fx = ch.f_x;
  const double fp = ch.f_p;
  const double hx = 2.0 * x * x - fx;
  const double hp = 2.0 * p * p - fp;

  const double constant = -1.5 * c2 * c2 * (gx2 * gx2 / (fx * fx) + gp2 * gp2 / (fp * fp));
  const double x_term =
      gx2 / (fx * fx) * (sqrt2 * c2 * (c0 + sqrt2 * c2) - 3.0 * c2 * c2 * gx2 / fx) * hx;
  const double p_term =
      gp2 / (fp * fp) * (sqrt2 * c2 * (c0 - sqrt2 * c2) + 3.0 * c2 * c2 * gp2 / fp) * hp;
  const double cross = c2 * c2 * gx2 * gp2 / (fx * fx * fp * fp) * hx * hp;
  const double quartic = 2.0 * c2 * c2 *
                         (gx2 * gx2 * x * x * x * x / (fx * fx * fx * fx) +
                          gp2 * gp2 * p * p * p * p / (fp * fp * fp * fp));

  const double bracket = 1.0 + decomp.c_phi * (constant + x_term - p_term + cross + quartic);
  return bracket * std::exp(-x * x / fx - p * p / fp) / (pi * std::sqrt(fx * fp));
}

WignerGrid w_plus_closed_grid(const std::vector<double>& x_axis,
                              const std::vector<double>& p_axis,
                              const conditional::ConditionalDecomposition& decomp,
                              const channel::GaussianChannel& ch) {
  return grid_from_function(x_axis, p_axis, [&](double x, double p) {
    return w_plus_closed(x, p, decomp, ch);
  });
}

WignerGrid w_plus_numeric(const std::vector<double>& x_axis, const std::vector<double>& p_axis,
                          const conditional::ConditionalDecomposition& decomp,
                          const channel::GaussianChannel& ch) {
  if (x_axis.size() < 2 || p_axis.size() < 2) {
    throw validation_error("w_plus_numeric requires at least a 2x2 output grid");
  }
  ch.validate();
  if (!(ch.f_x > 0.0) || !(ch.f_p > 0.0) || !std::isfinite(ch.f_x) || !std::isfinite(ch.f_p)) {
    throw validation_error("w_plus_numeric requires positive finite second moments");
  }
  double x_max = 0.0;
  for (double x : x_axis) x_max = std::max(x_max, std::abs(x));
  double p_max = 0.0;
  for (double p : p_axis) p_max = std::max(p_max, std::abs(p));

  // Spectral extent: the envelope exp(-F u^2/4) has fallen below ~1e-17 at
  // u = sqrt(160/F), leaving ample headroom for the polynomial prefactor.
  const double u_max = std::sqrt(160.0 / ch.f_x);
  const double v_max = std::sqrt(160.0 / ch.f_p);
  // Spacing: fine enough to resolve cos(u x) over the output window and to
  // push the first trapezoid alias image ~16 quadrature widths past it.
  const double du = std::min(0.08, pi / (x_max + 16.0));
  const double dv = std::min(0.08, pi / (p_max + 16.0));
  const int n_u = static_cast<int>(std::ceil(u_max / du)) + 1;
  const int n_v = static_cast<int>(std::ceil(v_max / dv)) + 1;
  const std::vector<double> u_axis = linspace(0.0, u_max, n_u);
  const std::vector<double> v_axis = linspace(0.0, v_max, n_v);

  Eigen::MatrixXd chi(n_u, n_v);
  parallel_for(static_cast<std::size_t>(n_u), [&](std::size_t k) {
    const double u = u_axis[k];
    for (int l = 0; l < n_v; ++l) {
      chi(static_cast<Eigen::Index>(k), l) = chi_plus(u, v_axis[static_cast<std::size_t>(l)], decomp, ch);
    }
  });

  const double edge_u = chi.row(n_u - 1).cwiseAbs().maxCoeff();
  const double edge_v = chi.col(n_v - 1).cwiseAbs().maxCoeff();
  if (edge_u >= 1e-10 || edge_v >= 1e-10) {
    std::ostringstream msg;
    msg << "w_plus_numeric: characteristic function has not decayed at the spectral edge"
        << " (|chi| = " << std::max(edge_u, edge_v) << ", aliasing would corrupt the transform)";
    throw convergence_error(msg.str());
  }

  const Eigen::VectorXd u_w = trapezoid_weights(u_axis);
  const Eigen::VectorXd v_w = trapezoid_weights(v_axis);

  const auto n_x = static_cast<Eigen::Index>(x_axis.size());
  const auto n_p = static_cast<Eigen::Index>(p_axis.size());
  Eigen::MatrixXd cos_x(n_x, n_u);
  for (Eigen::Index i = 0; i < n_x; ++i) {
    for (int k = 0; k < n_u; ++k) {
      cos_x(i, k) = u_w(k) * std::cos(u_axis[static_cast<std::size_t>(k)] * x_axis[static_cast<std::size_t>(i)]);
    }
  }
  Eigen::MatrixXd cos_p(n_p, n_v);
  for (Eigen::Index j = 0; j < n_p; ++j) {
    for (int l = 0; l < n_v; ++l) {
      cos_p(j, l) = v_w(l) * std::cos(v_axis[static_cast<std::size_t>(l)] * p_axis[static_cast<std::size_t>(j)]);
    }
  }

  WignerGrid g;
  g.x_axis = x_axis;
  g.p_axis = p_axis;
  g.x_weights = trapezoid_weights(x_axis);
  g.p_weights = trapezoid_weights(p_axis);
  g.values = cos_x * chi * cos_p.transpose() / (pi * pi);
  return g;
}

double cat_wigner(double x, double p, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw validation_error("cat_wigner requires alpha >= 0");
  }
  const double norm = 2.0 * (1.0 + std::exp(-2.0 * alpha * alpha));
  const double shift = sqrt2 * alpha;
  const double lobes = std::exp(-(x - shift) * (x - shift) - p * p) +
                       std::exp(-(x + shift) * (x + shift) - p * p);
  const double fringe = 2.0 * std::exp(-x * x - p * p) * std::cos(2.0 * shift * p);
  return (lobes + fringe) / (pi * norm);
}

double fidelity_to_cat(const conditional::ConditionalDecomposition& decomp,
                       const channel::GaussianChannel& ch, double alpha) {
  const double width = std::max({1.0, std::sqrt(0.5 * ch.f_x), std::sqrt(0.5 * ch.f_p)});
  const double extent = sqrt2 * alpha + 5.0 * width;
  int n = 161;
  double previous = 0.0;
  for (int refinement = 0; refinement < 5; ++refinement) {
    const std::vector<double> axis = linspace(-extent, extent, n);
    const WignerGrid out = w_plus_closed_grid(axis, axis, decomp, ch);
    const WignerGrid cat = grid_from_function(axis, axis, [&](double x, double p) {
      return cat_wigner(x, p, alpha);
    });
    const double fidelity = grid_overlap(out, cat);
    if (refinement > 0 && std::abs(fidelity - previous) < 1e-4) {
      return fidelity;
    }
    previous = fidelity;
    n = 2 * n - 1;
  }
  std::ostringstream msg;
  msg << "fidelity_to_cat: overlap integral did not settle under grid refinement"
      << " (last value " << previous << ", extent " << extent << ")";
  throw convergence_error(msg.str());
}

} // namespace catgen::wigner
