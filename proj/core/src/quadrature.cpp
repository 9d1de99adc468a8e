#include "catgen/quadrature.hpp"

#include "catgen/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace catgen::quad {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

using gk15 = boost::math::quadrature::gauss_kronrod<double, 15>;

/// Transformed integrand for the compactifying map w = scale * tan(u):
/// integral(f, 0, inf) = integral(f(scale tan u) scale (1 + tan^2 u), 0, pi/2).
/// Gauss-Kronrod nodes are interior, so tan(pi/2) is never evaluated.
double integrate_mapped(const Integrand& f, double scale, double u_lo, double u_hi,
                        const Options& opt, double* err_out = nullptr) {
  auto g = [&](double u) {
    const double t = std::tan(u);
    return f(scale * t) * scale * (1.0 + t * t);
  };
  double err = 0.0;
  const double value =
      gk15::integrate(g, u_lo, u_hi, static_cast<unsigned>(opt.max_depth), opt.rel_tol, &err);
  if (err_out) *err_out = err;
  return value;
}

/// Extrapolates the limit of a sequence of partial sums with a Wynn epsilon
/// table. Even columns of the table are successive estimates; the deepest
/// usable even-column entry is returned.
double wynn_epsilon(const std::vector<double>& sums) {
  const std::size_t n = sums.size();
  std::vector<double> prev_prev(sums);          // column k-1 (starts as column 0)
  std::vector<double> prev;                     // column k
  prev.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = sums[i + 1] - sums[i];
    if (d == 0.0) return sums[i + 1];
    prev.push_back(1.0 / d);
  }
  double best = sums.back();
  for (std::size_t col = 2; col < n; ++col) {
    std::vector<double> cur;
    cur.reserve(n - col);
    for (std::size_t i = 0; i + col < n; ++i) {
      const double d = prev[i + 1] - prev[i];
      if (d == 0.0 || !std::isfinite(d)) return best;
      cur.push_back(prev_prev[i + 1] + 1.0 / d);
    }
    if (cur.empty()) break;
    if (col % 2 == 0) {
      if (!std::isfinite(cur.back())) return best;
      best = cur.back();
    }
    prev_prev = std::move(prev);
    prev = std::move(cur);
  }
  return best;
}

[[noreturn]] void fail_cosine_transform(double delta, int panels, double last_panel,
                                        double estimate, double err_est) {
  std::ostringstream msg;
  msg << "cosine transform failed to settle: delta=" << delta << ", panels=" << panels
      << ", last panel=" << last_panel << ", estimate=" << estimate
      << ", residual estimate=" << err_est;
  throw convergence_error(msg.str());
}

} // namespace

double integrate(const Integrand& f, double a, double b, const Options& opt) {
  double err = 0.0;
  const double value =
      gk15::integrate(f, a, b, static_cast<unsigned>(opt.max_depth), opt.rel_tol, &err);
  if (!std::isfinite(value)) {
    throw convergence_error("finite-interval quadrature produced a non-finite value");
  }
  return value;
}

double integrate_half_line(const Integrand& f, double scale, const Options& opt) {
  if (!(scale > 0.0)) throw validation_error("integrate_half_line: scale must be positive");
  double err = 0.0;
  const double value = integrate_mapped(f, scale, 0.0, half_pi, opt, &err);
  if (!std::isfinite(value)) {
    throw convergence_error("half-line quadrature produced a non-finite value");
  }
  const double bound = std::max(opt.abs_tol, 10.0 * opt.rel_tol * std::abs(value));
  if (err > std::max(bound, 1e-9 * std::abs(value)) && err > opt.abs_tol) {
    std::ostringstream msg;
    msg << "half-line quadrature error estimate " << err << " exceeds tolerance for value "
        << value;
    throw convergence_error(msg.str());
  }
  return value;
}

double cosine_transform_half_line(const Integrand& f, double delta, double scale,
                                  const Options& opt) {
  if (!(scale > 0.0)) {
    throw validation_error("cosine_transform_half_line: scale must be positive");
  }
  if (delta < 0.0 || !std::isfinite(delta)) {
    throw validation_error("cosine_transform_half_line: delta must be finite and >= 0");
  }
  if (delta == 0.0) return integrate_half_line(f, scale, opt);

  auto damped = [&](double w) { return f(w) * std::cos(w * delta); };

  // First zero of cos(w * delta). If it sits far beyond the map scale the
  // cosine is quasi-static over the resolvable part of the axis: integrate
  // the damped integrand up to a cap and bound the remainder by the envelope.
  const double z0 = half_pi / delta;
  if (z0 > 1e6 * scale) {
    const double cap = std::atan(1e6);
    const double head = integrate_mapped(damped, scale, 0.0, cap, opt);
    const double tail = integrate_mapped([&](double w) { return std::abs(f(w)); }, scale, cap,
                                         half_pi, opt);
    if (tail <= std::max(opt.abs_tol, 0.5 * opt.rel_tol * std::abs(head))) return head;
    fail_cosine_transform(delta, 1, tail, head, tail);
  }

  // Split at the cosine zeros z_k = (k + 1/2) pi / delta; each panel is
  // single-signed, so the partial sums alternate around the limit and a Wynn
  // epsilon table converges fast even when the plain sum decays slowly.
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(opt.max_panels));
  double sum = 0.0;
  double l1 = 0.0;
  double u_prev = 0.0;
  double best = 0.0;
  double err_est = std::numeric_limits<double>::infinity();
  int small_plain = 0;
  int small_accel = 0;
  double panel = 0.0;

  for (int k = 0; k < opt.max_panels; ++k) {
    const double z = (static_cast<double>(k) + 0.5) * std::numbers::pi / delta;
    const double u = std::atan(z / scale);
    panel = integrate_mapped(damped, scale, u_prev, u, opt);
    if (!std::isfinite(panel)) {
      throw convergence_error("cosine transform: non-finite panel integral");
    }
    u_prev = u;
    sum += panel;
    l1 += std::abs(panel);
    sums.push_back(sum);

    const double floor = std::max(opt.abs_tol, opt.rel_tol * std::max(std::abs(sum), 0.05 * l1));

    // Plain convergence: two consecutive negligible panels bound the tail of
    // the alternating remainder.
    small_plain = (std::abs(panel) <= floor) ? small_plain + 1 : 0;
    if (small_plain >= 2) return sum;

    if (sums.size() >= 4) {
      const double extrapolated = wynn_epsilon(sums);
      err_est = std::abs(extrapolated - best);
      best = extrapolated;
      const double accel_floor =
          std::max(opt.abs_tol, opt.rel_tol * std::max(std::abs(best), 0.05 * l1));
      small_accel = (err_est <= accel_floor) ? small_accel + 1 : 0;
      if (small_accel >= 2) return best;
    }
  }
  fail_cosine_transform(delta, opt.max_panels, panel, best, err_est);
}

} // namespace catgen::quad
