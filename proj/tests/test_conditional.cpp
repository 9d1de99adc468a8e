#include <catgen/conditional.hpp>
#include <catgen/errors.hpp>
#include <catgen/opo.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

namespace cond = catgen::conditional;
namespace opo = catgen::opo;

TEST_SUITE("conditional") {

TEST_CASE("headline decomposition against frozen high-precision references") {
  const auto params = opo::OpoParams::from_ratio(0.27);
  const auto d = cond::decompose(1.4, params);
  CHECK(d.c2 == doctest::Approx(0.72882225401518412).epsilon(1e-10));
  CHECK(d.c0 == doctest::Approx(0.68470294438699943).epsilon(1e-10));
  CHECK(d.c_phi == doctest::Approx(0.97123255449193627).epsilon(1e-10));
  CHECK(d.c_v == doctest::Approx(0.02876744550806373).epsilon(1e-9));
  d.validate();
}

TEST_CASE("coincident clicks give the pure superposition branch, exactly") {
  const auto params = opo::OpoParams::from_ratio(0.27);
  const auto d = cond::decompose(0.0, params);
  CHECK(d.c_phi == 1.0); // bitwise
  CHECK(d.c_v == 0.0);   // bitwise
}

TEST_CASE("wide separation: half-weight mixture of two- and zero-photon packets") {
  const auto params = opo::OpoParams::from_ratio(0.27);
  const auto d = cond::decompose(25.0, params);
  CHECK(d.c_phi == doctest::Approx(0.5000000278955758).epsilon(1e-9));
  CHECK(d.c2 * d.c2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalization identity ties the two weight formulas together") {
  // n = n_phi + ½𝒩_ν²(1−I)² must equal 𝒩_ν²(1+I²) + F² analytically.
  for (const double eps : {0.1, 0.27, 0.5}) {
    const auto params = opo::OpoParams::from_ratio(eps);
    for (const double delta : {0.0, 0.4, 1.4, 3.0}) {
      const auto pair = opo::make_temporal_pair(delta, params);
      const auto d = cond::decompose(pair, params);
      const double direct = pair.n_nu * pair.n_nu * (1.0 + pair.i_delta * pair.i_delta) +
                            pair.f_delta * pair.f_delta;
      CHECK(d.n == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("interference picture: closed-form time integrals at the headline point") {
  const auto params = opo::OpoParams::from_ratio(0.27);
  const auto d = cond::interference_decompose(1.4, params);
  CHECK(d.a_plus == doctest::Approx(0.942388385929900).epsilon(1e-12));
  CHECK(d.b_plus == doctest::Approx(2.783295096267524).epsilon(1e-12));
  CHECK(d.sigma_plus == doctest::Approx(3.085923416544547).epsilon(1e-12));
  CHECK(d.gamma_plus_coeffs[0] == doctest::Approx(0.431876704800823).epsilon(1e-12));
  CHECK(d.gamma_plus_coeffs[1] == doctest::Approx(0.901932653722207).epsilon(1e-12));
  CHECK(d.a_minus == doctest::Approx(0.222534491861061).epsilon(1e-12));
  CHECK(d.b_minus == doctest::Approx(1.531234080736036).epsilon(1e-12));
  CHECK(d.sigma_minus == doctest::Approx(1.563240547754329).epsilon(1e-12));
  CHECK(d.gamma_minus_coeffs[0] == doctest::Approx(0.201319814111664).epsilon(1e-12));
  CHECK(d.gamma_minus_coeffs[1] == doctest::Approx(0.979525564978293).epsilon(1e-12));
  d.validate();
}

TEST_CASE("interference picture degenerates gracefully at coincident clicks") {
  const auto params = opo::OpoParams::from_ratio(0.27);
  const auto d = cond::interference_decompose(0.0, params);
  CHECK(d.sigma_minus == 0.0);
  CHECK(d.gamma_minus_coeffs[0] == 0.0);
  CHECK(d.gamma_minus_coeffs[1] == 0.0);
  // two-photon/vacuum amplitude ratio of the surviving branch: √2 ε/ζ₀
  const double ratio = d.gamma_plus_coeffs[0] / d.gamma_plus_coeffs[1];
  CHECK(ratio == doctest::Approx(std::numbers::sqrt2 * 0.27).epsilon(1e-12));
}

TEST_CASE("the two decomposition routes agree on the amplitude ratio") {
  for (const double eps : {0.15, 0.35}) {
    const auto params = opo::OpoParams::from_ratio(eps);
    for (const double delta : {0.3, 1.1, 2.7}) {
      const auto direct = cond::decompose(delta, params);
      const auto interference = cond::interference_decompose(delta, params);
      const double r1 = direct.c2 / direct.c0;
      const double r2 = std::numbers::sqrt2 * interference.a_plus /
                        (interference.b_plus - interference.b_minus);
      CHECK(r1 == doctest::Approx(r2).epsilon(1e-8));
    }
  }
}

TEST_CASE("weak-pump picture tracks the exact weights at the percent level") {
  const auto params = opo::OpoParams::from_ratio(0.05);
  const auto exact = cond::decompose(1.0, params);
  const auto approx = cond::small_epsilon(1.0, params);
  CHECK(exact.c_v == doctest::Approx(0.000619611331).epsilon(1e-6));
  const double rel_err = std::abs(approx.approx.c_v - exact.c_v) / exact.c_v;
  CHECK(rel_err < 0.02);
  CHECK(rel_err > 1e-4); // genuinely an approximation, not a re-evaluation
}

TEST_CASE("weak-pump correction factor: bounded peak and empty-branch limit") {
  const auto params = opo::OpoParams::from_ratio(0.05);
  // δ₊(x) = 1 + x e^{−x}/(1+e^{−x}) peaks near x ≈ 1.2785 at 1.278464542761
  // and stays inside [1, 1.28] on x ≥ 0.
  double peak = 0.0;
  for (double x = 0.0; x <= 6.0; x += 0.01) {
    const double dp = cond::small_epsilon(x, params).delta_plus;
    CHECK(dp >= 1.0 - 1e-12);
    CHECK(dp <= 1.28);
    peak = std::max(peak, dp);
  }
  CHECK(peak == doctest::Approx(1.278464542761).epsilon(1e-5));
  CHECK(cond::small_epsilon(1.2785, params).delta_plus ==
        doctest::Approx(1.278464542761).epsilon(1e-9));
  CHECK(cond::small_epsilon(0.0, params).delta_minus == 0.0);
}

TEST_CASE("weak-pump unnormalized amplitudes follow the stated expressions") {
  const auto params = opo::OpoParams::from_ratio(0.05);
  const double x = 1.0;
  const auto approx = cond::small_epsilon(x, params);
  CHECK(approx.phi_two_photon_coeff ==
        doctest::Approx(std::numbers::sqrt2 * 0.05 * approx.delta_plus).epsilon(1e-12));
  CHECK(approx.phi_vacuum_coeff == doctest::Approx(1.0 - std::tanh(0.5 * x)).epsilon(1e-12));
  CHECK(approx.sigma_plus == doctest::Approx(0.5 * (1.0 + std::exp(-x))).epsilon(1e-12));
  CHECK(approx.sigma_minus == doctest::Approx(0.5 * (1.0 - std::exp(-x))).epsilon(1e-12));
}

} // TEST_SUITE
