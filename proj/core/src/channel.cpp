#include "catgen/channel.hpp"

#include "catgen/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace catgen::channel {

namespace {

constexpr double physicality_slack = 1e-10;
constexpr double two_pi = 2.0 * std::numbers::pi;

double branch_sign(Branch branch) { return branch == Branch::plus ? 1.0 : -1.0; }

void require_branch_defined(double delta, Branch branch, const char* who) {
  if (delta < 0.0) {
    throw validation_error(std::string(who) + ": delta must be >= 0");
  }
  if (branch == Branch::minus && delta == 0.0) {
    throw validation_error(std::string(who) +
                           ": the antisymmetric mode is undefined at delta = 0");
  }
}

} // namespace

Covariance vacuum_covariance() { return 0.5 * Eigen::Matrix2d::Identity(); }

void validate_covariance(const Covariance& gamma) {
  if (std::abs(gamma(0, 1) - gamma(1, 0)) > 1e-12) {
    throw validation_error("covariance matrix must be symmetric");
  }
  const double det = gamma.determinant();
  if (det < 0.25 - physicality_slack) {
    std::ostringstream msg;
    msg << "covariance matrix violates the uncertainty bound (det " << det << " < 1/4)";
    throw validation_error(msg.str());
  }
}

Eigen::Matrix2d GaussianChannel::s() const {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  m(0, 0) = g_x;
  m(1, 1) = g_p;
  return m;
}

Eigen::Matrix2d GaussianChannel::y() const {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  m(0, 0) = f_x - g_x * g_x;
  m(1, 1) = f_p - g_p * g_p;
  return m;
}

Covariance GaussianChannel::apply(const Covariance& gamma_in) const {
  const Eigen::Matrix2d sm = s();
  return sm.transpose() * gamma_in * sm + 0.5 * y();
}

void GaussianChannel::validate() const {
  const double y_x = f_x - g_x * g_x;
  const double y_p = f_p - g_p * g_p;
  const double n_bar = g_x * g_p - 1.0;
  if (y_x < -physicality_slack || y_p < -physicality_slack || n_bar < -physicality_slack) {
    std::ostringstream msg;
    msg << "Gaussian channel violates physicality (noise diag " << y_x << ", " << y_p
        << "; n_bar " << n_bar << ") — quadrature inaccuracy upstream";
    throw convergence_error(msg.str());
  }
}

std::pair<double, double> g_integrals(double delta, const opo::OpoParams& p, Branch branch,
                                      double rel_tol) {
  p.validate();
  require_branch_defined(delta, branch, "g_integrals");

  const double zp = p.zeta_plus();
  const double zm = p.zeta_minus();
  const double zp2 = zp * zp;
  const double zm2 = zm * zm;
  const double coeff = 4.0 * p.zeta0 * p.zeta0 * p.epsilon * p.epsilon;
  const double sign = branch_sign(branch);
  const double weight = 1.0 / (opo::n_nu(p) * (1.0 + sign * opo::i_delta(delta, p)));

  quad::Options opt;
  opt.rel_tol = rel_tol;

  // g^{±1}(Ω) nu_bar(Ω)² collapses to 4 zeta0² eps² (zp²+Ω²)^{−1/2}(zm²+Ω²)^{−3/2}
  // for G_X, with the exponents swapped for G_P. The integrands are even, so
  // the full-line integrals are twice the half-line (cosine-)transforms.
  auto integrand_x = [&](double w) {
    const double w2 = w * w;
    return coeff / (std::sqrt(zp2 + w2) * (zm2 + w2) * std::sqrt(zm2 + w2));
  };
  auto integrand_p = [&](double w) {
    const double w2 = w * w;
    return coeff / (std::sqrt(zm2 + w2) * (zp2 + w2) * std::sqrt(zp2 + w2));
  };

  auto one_sided = [&](const quad::Integrand& f) {
    const double smooth = quad::integrate_half_line(f, p.zeta0, opt);
    const double oscillatory =
        delta == 0.0 ? smooth : quad::cosine_transform_half_line(f, delta, p.zeta0, opt);
    return 2.0 * (smooth + sign * oscillatory) / two_pi;
  };

  const double g_x = weight * one_sided(integrand_x);
  const double g_p = weight * one_sided(integrand_p);

  if (g_x < 1.0 - 1e-8 || g_p > 1.0 + 1e-8 || !(g_p > 0.0)) {
    std::ostringstream msg;
    msg << "gain integrals outside their guaranteed range (G_X=" << g_x << ", G_P=" << g_p
        << ") — quadrature inaccuracy";
    throw convergence_error(msg.str());
  }
  return {g_x, g_p};
}

std::pair<double, double> f_integrals(double delta, const opo::OpoParams& p, Branch branch) {
  p.validate();
  require_branch_defined(delta, branch, "f_integrals");

  const double sign = branch_sign(branch);
  const double coeff = p.zeta0 * p.zeta0 * p.epsilon * p.epsilon;
  const double weight = 1.0 / (opo::n_nu(p) * (1.0 + sign * opo::i_delta(delta, p)));

  auto closed = [&](double zeta) {
    const double zd = zeta * delta;
    return coeff * (1.0 + sign * (1.0 + zd) * std::exp(-zd)) / (zeta * zeta * zeta) * weight;
  };
  return {closed(p.zeta_minus()), closed(p.zeta_plus())};
}

std::pair<double, double> f_integrals_spectral(double delta, const opo::OpoParams& p,
                                               Branch branch, double rel_tol) {
  p.validate();
  require_branch_defined(delta, branch, "f_integrals_spectral");

  const double sign = branch_sign(branch);
  const double coeff = 4.0 * p.zeta0 * p.zeta0 * p.epsilon * p.epsilon;
  const double weight = 1.0 / (opo::n_nu(p) * (1.0 + sign * opo::i_delta(delta, p)));

  quad::Options opt;
  opt.rel_tol = rel_tol;

  auto one_sided = [&](double zeta) {
    const double z2 = zeta * zeta;
    auto f = [&](double w) {
      const double d = z2 + w * w;
      return coeff / (d * d);
    };
    const double smooth = quad::integrate_half_line(f, p.zeta0, opt);
    const double oscillatory =
        delta == 0.0 ? smooth : quad::cosine_transform_half_line(f, delta, p.zeta0, opt);
    return weight * 2.0 * (smooth + sign * oscillatory) / two_pi;
  };
  return {one_sided(p.zeta_minus()), one_sided(p.zeta_plus())};
}

GaussianChannel make_channel(double delta, const opo::OpoParams& p, Branch branch,
                             double rel_tol) {
  const auto [g_x, g_p] = g_integrals(delta, p, branch, rel_tol);
  const auto [f_x, f_p] = f_integrals(delta, p, branch);
  GaussianChannel ch{g_x, g_p, f_x, f_p, branch};
  ch.validate();
  return ch;
}

std::pair<double, double> effective_params(const GaussianChannel& ch) {
  const double r = -0.5 * std::log(ch.g_x / ch.g_p);
  const double n_bar = ch.g_x * ch.g_p - 1.0;
  return {r, n_bar};
}

} // namespace catgen::channel
