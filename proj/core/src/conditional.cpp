#include "catgen/conditional.hpp"

#include "catgen/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace catgen::conditional {

void ConditionalDecomposition::validate() const {
  const double closure = std::abs(c_phi + c_v - 1.0);
  const double coeff_norm = std::abs(c2 * c2 + c0 * c0 - 1.0);
  const bool weights_ok = c_phi >= -1e-12 && c_phi <= 1.0 + 1e-12 && c_v >= -1e-12 &&
                          c_v <= 1.0 + 1e-12;
  if (closure > 1e-12 || coeff_norm > 1e-12 || !weights_ok) {
    std::ostringstream msg;
    msg << "conditional decomposition violates closure (|C_phi+C_v-1|=" << closure
        << ", |c2²+c0²-1|=" << coeff_norm << ", C_phi=" << c_phi << ", C_v=" << c_v << ")";
    throw validation_error(msg.str());
  }
}

ConditionalDecomposition decompose(const opo::TemporalPair& pair, const opo::OpoParams& p) {
  p.validate();
  if (pair.delta < 0.0) throw validation_error("decompose: delta must be >= 0");

  const double amp2 = pair.n_nu * (1.0 + pair.i_delta) / std::numbers::sqrt2;
  const double amp0 = pair.f_delta;
  const double n_phi = amp2 * amp2 + amp0 * amp0;
  // Algebraically n = 𝒩_ν²(1 + I²) + F², but assembling it as n_phi plus the
  // explicitly non-negative remainder ½𝒩_ν²(1−I)² makes the vacuum weight
  // vanish bitwise at delta = 0 (where I = 1), not merely to rounding.
  const double remainder = 0.5 * pair.n_nu * (1.0 - pair.i_delta) * pair.n_nu *
                           (1.0 - pair.i_delta);
  const double n = n_phi + remainder;

  const double scale = std::sqrt(n_phi);
  ConditionalDecomposition d;
  d.c2 = amp2 / scale;
  d.c0 = amp0 / scale;
  d.c_phi = n_phi / n;
  d.c_v = 1.0 - d.c_phi;
  d.n = n;
  d.n_phi = n_phi;
  d.validate();
  return d;
}

ConditionalDecomposition decompose(double delta, const opo::OpoParams& p, double rel_tol) {
  return decompose(opo::make_temporal_pair(delta, p, rel_tol), p);
}

void InterferenceDecomposition::validate() const {
  if (sigma_plus < 0.0 || sigma_minus < 0.0) {
    throw validation_error("interference decomposition: sigma weights must be >= 0");
  }
  auto check_norm = [](const std::array<double, 2>& coeffs, double sigma, const char* name) {
    if (sigma == 0.0) return; // degenerate branch carries no state
    const double norm2 = coeffs[0] * coeffs[0] + coeffs[1] * coeffs[1];
    if (std::abs(norm2 - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg << "interference decomposition: " << name << " has norm² " << norm2;
      throw validation_error(msg.str());
    }
  };
  check_norm(gamma_plus_coeffs, sigma_plus, "gamma_plus");
  check_norm(gamma_minus_coeffs, sigma_minus, "gamma_minus");
}

InterferenceDecomposition interference_decompose(double delta, const opo::OpoParams& p) {
  p.validate();
  if (delta < 0.0) throw validation_error("interference_decompose: delta must be >= 0");

  const double zp = p.zeta_plus();
  const double zm = p.zeta_minus();
  const double em = std::exp(-zm * delta);
  const double ep = std::exp(-zp * delta);

  InterferenceDecomposition d;
  auto fill = [&](double sign, std::array<double, 2>& coeffs, double& sigma, double& a,
                  double& b) {
    a = (1.0 + sign * em) / zm - (1.0 + sign * ep) / zp;
    b = (1.0 + sign * em) / zm + (1.0 + sign * ep) / zp;
    sigma = std::sqrt(2.0 * a * a + b * b);
    if (sigma > 0.0) {
      coeffs = {std::numbers::sqrt2 * a / sigma, b / sigma};
    } else {
      coeffs = {0.0, 0.0};
    }
  };
  fill(+1.0, d.gamma_plus_coeffs, d.sigma_plus, d.a_plus, d.b_plus);
  fill(-1.0, d.gamma_minus_coeffs, d.sigma_minus, d.a_minus, d.b_minus);
  d.validate();
  return d;
}

SmallEpsilonDecomposition small_epsilon(double delta, const opo::OpoParams& p) {
  p.validate();
  if (delta < 0.0) throw validation_error("small_epsilon: delta must be >= 0");

  const double x = p.zeta0 * delta;
  const double e = std::exp(-x);
  const double ratio = p.epsilon / p.zeta0;

  SmallEpsilonDecomposition s;
  s.sigma_plus = 0.5 * (1.0 + e);
  s.sigma_minus = 0.5 * (1.0 - e);
  s.delta_plus = 1.0 + x * e / (1.0 + e);
  s.delta_minus = (delta == 0.0) ? 0.0 : 1.0 - x * e / (1.0 - e);
  s.phi_two_photon_coeff = std::numbers::sqrt2 * ratio * s.delta_plus;
  s.phi_vacuum_coeff = 1.0 - std::tanh(0.5 * x);

  // Leading-order temporal scalars: n_nu → ε²/ζ₀ (units of 1/ζ₀), the overlap
  // i_delta → (1 + ζ₀Δ)e^{−ζ₀Δ} and the cross integral f_delta → ε e^{−ζ₀Δ};
  // feeding them through the exact weight formulas reproduces the standard
  // leading-order mixing-weight expression.
  const double n_nu0 = p.epsilon * p.epsilon / p.zeta0;
  const double i0 = (1.0 + x) * e;
  const double f0 = p.epsilon * e;
  const double amp2 = n_nu0 * (1.0 + i0) / std::numbers::sqrt2;
  const double amp0 = f0;
  const double n_phi = amp2 * amp2 + amp0 * amp0;
  const double n = n_nu0 * n_nu0 * (1.0 + i0 * i0) + f0 * f0;

  const double phi_norm = std::hypot(s.phi_two_photon_coeff, s.phi_vacuum_coeff);
  ConditionalDecomposition& d = s.approx;
  d.c2 = s.phi_two_photon_coeff / phi_norm;
  d.c0 = s.phi_vacuum_coeff / phi_norm;
  d.c_v = 0.5 * n_nu0 * n_nu0 * (1.0 - i0) * (1.0 - i0) / n;
  d.c_phi = 1.0 - d.c_v;
  d.n = n;
  d.n_phi = n_phi;
  d.validate();
  return s;
}

} // namespace catgen::conditional
