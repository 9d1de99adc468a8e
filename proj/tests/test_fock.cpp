#include <catgen/errors.hpp>
#include <catgen/fock.hpp>

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

namespace fock = catgen::fock;
using fock::Complex;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("fock") {

TEST_CASE("basis states and ladder action") {
  const auto v = fock::vacuum(12);
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK(fock::expectation_n(v) == doctest::Approx(0.0));

  const auto a = fock::annihilation_matrix(8);
  for (int n = 1; n < 8; ++n) {
    // a|n> = sqrt(n)|n-1>
    CHECK(a(n - 1, n) == doctest::Approx(std::sqrt(double(n))));
  }
  const auto three = fock::basis_state(3, 8);
  const auto lowered = fock::annihilate(three, 1);
  CHECK(lowered.norm() == doctest::Approx(std::sqrt(3.0)));
  CHECK(fock::fidelity_pure(lowered.normalized(), fock::basis_state(2, 8)) ==
        doctest::Approx(1.0));
}

TEST_CASE("coherent state moments and displacement consistency") {
  const double alpha = 1.3;
  const auto c = fock::coherent_state(alpha, 40);
  CHECK(c.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fock::expectation_n(c) == doctest::Approx(alpha * alpha).epsilon(1e-10));

  const auto [x_mean, x_var] = fock::x_moments(c);
  CHECK(x_mean == doctest::Approx(std::numbers::sqrt2 * alpha).epsilon(1e-10));
  CHECK(x_var == doctest::Approx(fock::QuadratureConvention::vacuum_variance).epsilon(1e-9));

  // D(alpha)|0> must reproduce the closed-form expansion.
  const auto d = fock::displacement_operator(Complex(alpha, 0.0), 40);
  fock::FockVector displaced{d * fock::vacuum(40).amps};
  CHECK(fock::fidelity_pure(displaced.normalized(), c) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("severely truncated expansions are flagged by tail mass") {
  const auto clipped = fock::coherent_state(5.0, 12, 1e30); // threshold disabled: no warning
  CHECK(clipped.tail_mass() > 1e-3);
  const auto fine = fock::coherent_state(1.0, 40);
  CHECK(fine.tail_mass() < 1e-20);
}

TEST_CASE("squeezing convention: positive r squeezes X") {
  const double r = 0.4;
  const auto sq = fock::squeeze(fock::vacuum(60), r);
  const auto [xm, xv] = fock::x_moments(sq);
  const auto [pm, pv] = fock::p_moments(sq);
  CHECK(xm == doctest::Approx(0.0));
  CHECK(pm == doctest::Approx(0.0));
  CHECK(xv == doctest::Approx(0.5 * std::exp(-2.0 * r)).epsilon(1e-10));
  CHECK(pv == doctest::Approx(0.5 * std::exp(2.0 * r)).epsilon(1e-10));

  const auto anti = fock::squeeze(fock::vacuum(60), -r);
  CHECK(fock::x_moments(anti).second == doctest::Approx(0.5 * std::exp(2.0 * r)).epsilon(1e-10));

  // r = 0 is the identity, bit for bit.
  const auto same = fock::squeeze(fock::vacuum(20), 0.0);
  CHECK((same.amps - fock::vacuum(20).amps).norm() == 0.0);
}

TEST_CASE("squeeze operator is unitary on the truncated space") {
  const auto u = fock::squeeze_operator(0.6, 60);
  const Eigen::MatrixXd residual =
      u.transpose() * u - Eigen::MatrixXd::Identity(60, 60);
  CHECK(residual.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("cat states: norms, parity content and mean photon number") {
  const double alpha = std::sqrt(2.6);
  const auto even = fock::cat_state(alpha, fock::Parity::even, 40);
  CHECK(even.norm() == doctest::Approx(1.0).epsilon(1e-12));
  for (int n = 1; n < 40; n += 2) {
    CHECK(std::abs(even.amps[n]) == 0.0); // even cat has no odd-photon support
  }
  // <n> = α² tanh-weighted: α²(1−e^{−2α²})/(1+e^{−2α²}); value frozen from
  // 40-digit arithmetic at α² = 2.6.
  CHECK(fock::expectation_n(even) == doctest::Approx(2.571471245723).epsilon(1e-9));

  // The odd superposition approaches |1> as α → 0.
  const auto odd = fock::cat_state(1e-3, fock::Parity::odd, 20);
  CHECK(fock::fidelity_pure(odd, fock::basis_state(1, 20)) > 1.0 - 1e-5);
  CHECK_THROWS_AS(fock::cat_state(0.0, fock::Parity::odd, 20), catgen::validation_error);

  const auto even2 = fock::cat_state(alpha, fock::Parity::even, 40);
  const auto odd2 = fock::cat_state(alpha, fock::Parity::odd, 40);
  CHECK(fock::fidelity_pure(even2, odd2) == doctest::Approx(0.0));
}

TEST_CASE("density operators: validation catches unphysical inputs") {
  auto rho = fock::DensityOperator::mixture(
      {{0.5, fock::basis_state(0, 10)}, {0.5, fock::basis_state(2, 10)}});
  rho.validate();

  auto bad = rho;
  bad.mat(1, 1) = -0.1; // negative population
  bad.mat(0, 0) += 0.1; // keep the trace at one
  CHECK_THROWS_AS(bad.validate(), catgen::validation_error);

  fock::FockVector zero{Eigen::VectorXcd::Zero(5)};
  CHECK_THROWS_AS(zero.normalized(), catgen::validation_error);
}

TEST_CASE("Wigner kernel: Gaussian and number-state references") {
  const auto vac = fock::DensityOperator::pure(fock::vacuum(20));
  CHECK(fock::wigner_point(vac, 0.0, 0.0) == doctest::Approx(1.0 / pi).epsilon(1e-13));
  const double s = 1.1 * 1.1 + 0.4 * 0.4;
  CHECK(fock::wigner_point(vac, 1.1, -0.4) == doctest::Approx(std::exp(-s) / pi).epsilon(1e-12));

  // Coherent state: displaced Gaussian peaking at (√2 Re α, √2 Im α).
  const double alpha = 0.9;
  const auto coh = fock::DensityOperator::pure(fock::coherent_state(alpha, 40));
  CHECK(fock::wigner_point(coh, std::numbers::sqrt2 * alpha, 0.0) ==
        doctest::Approx(1.0 / pi).epsilon(1e-10));

  // |1> has W(0,0) = −1/π, the maximal central negativity.
  const auto one = fock::DensityOperator::pure(fock::basis_state(1, 20));
  CHECK(fock::wigner_point(one, 0.0, 0.0) == doctest::Approx(-1.0 / pi).epsilon(1e-13));

  // Incoherent |0>/|2> mixture against the explicit Laguerre form
  // W = (e^{−s}/π)[w0 + w2 L_2(2s)], s = x² + p².
  const auto mix = fock::DensityOperator::mixture(
      {{0.4, fock::basis_state(0, 20)}, {0.6, fock::basis_state(2, 20)}});
  const double x = 0.7, p = -0.3;
  const double t = 2.0 * (x * x + p * p);
  const double lag2 = 1.0 - 2.0 * t + 0.5 * t * t;
  CHECK(fock::wigner_point(mix, x, p) ==
        doctest::Approx(std::exp(-0.5 * t) / pi * (0.4 + 0.6 * lag2)).epsilon(1e-12));
}

TEST_CASE("Wigner kernel: off-diagonal coherences carry the fringe sign") {
  // (|0> + |2>)/√2: W(0,0) must exceed the vacuum-only value because the
  // 0–2 coherence is positive at the origin.
  fock::FockVector sup{Eigen::VectorXcd::Zero(20)};
  sup.amps[0] = 1.0 / std::numbers::sqrt2;
  sup.amps[2] = 1.0 / std::numbers::sqrt2;
  const auto rho = fock::DensityOperator::pure(sup);
  // Direct kernel evaluation: W(0,0) = (1/π)[w00 + w22 L_2(0)(+1) + 2 w02/√2]
  // with L_2(0) = 1 and the cross weight √(0!/2!) z² |_{z=0} → the cross term
  // vanishes at the origin, leaving (0.5 + 0.5)/π.
  CHECK(fock::wigner_point(rho, 0.0, 0.0) == doctest::Approx(1.0 / pi).epsilon(1e-12));
  // Away from the origin the coherence contributes; regression against the
  // independently derived closed form for this superposition.
  const double x = 0.8, p = 0.25;
  const double s = x * x + p * p;
  const double t = 2.0 * s;
  const double lag2 = 1.0 - 2.0 * t + 0.5 * t * t;
  // cross term: 2·Re[ρ02 √(0!/2!) z̄-free kernel] with z = √2(x+ip):
  // L_0^2 = 1, magnitude |z|², phase cos(2 arg z).
  const std::complex<double> z(std::numbers::sqrt2 * x, std::numbers::sqrt2 * p);
  const double cross = 2.0 * 0.5 * (1.0 / std::sqrt(2.0)) * std::real(z * z);
  const double expected = std::exp(-s) / pi * (0.5 + 0.5 * lag2 + cross);
  CHECK(fock::wigner_point(rho, x, p) == doctest::Approx(expected).epsilon(1e-12));
}

} // TEST_SUITE
