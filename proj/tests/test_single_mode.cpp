#include <catgen/errors.hpp>
#include <catgen/fock.hpp>
#include <catgen/single_mode.hpp>

#include <doctest.h>

#include <cmath>

namespace fock = catgen::fock;
namespace sm = catgen::single_mode;

TEST_SUITE("single_mode") {

TEST_CASE("one-photon subtraction is exactly a squeezed single photon") {
  // The identity is exact in infinite dimension; dim = 128 keeps the
  // truncated tail at r = 0.8 near 1e-23 so the 1e-12 bound tests the
  // algebra, not the cutoff.
  for (const double r : {0.3, 0.8}) {
    const auto subtracted = sm::n_photon_subtracted(r, 1, 128);
    const auto squeezed_one = fock::squeeze(fock::basis_state(1, 128), -r);
    CHECK(fock::fidelity_pure(subtracted, squeezed_one) > 1.0 - 1e-12);
  }
}

TEST_CASE("operator-ordering identity for repeated subtraction") {
  for (const int n : {1, 2, 3}) {
    const auto direct = sm::n_photon_subtracted(0.7, n, 128);
    const auto commuted = sm::n_photon_subtracted_commuted(0.7, n, 128);
    CHECK(fock::fidelity_pure(direct, commuted) > 1.0 - 1e-12);
  }
}

TEST_CASE("Hermite recurrence route matches operator squeezing") {
  // dim = 200 keeps the truncated tail of the widest state on the grid
  // (alpha = 2, r = 1, mean photon number ~ 31) below 1e-9 in mass.
  for (const double alpha : {0.5, 1.0, 2.0}) {
    for (const double r : {0.2, 0.5, 1.0}) {
      const auto recurrence = sm::squeezed_coherent_hermite(alpha, r, 200);
      const auto operator_route =
          fock::squeeze(fock::coherent_state(alpha, 200), -r).normalized();
      CHECK(fock::fidelity_pure(recurrence, operator_route) > 1.0 - 1e-8);
    }
  }
  // Negative r exercises the branch that a naive sqrt(tanh r) expansion
  // cannot reach; the recurrence stays real and must still agree.
  const auto neg = sm::squeezed_coherent_hermite(1.2, -0.4, 60);
  const auto neg_ref = fock::squeeze(fock::coherent_state(1.2, 60), 0.4).normalized();
  CHECK(fock::fidelity_pure(neg, neg_ref) > 1.0 - 1e-10);
  // r = 0 degenerates to the plain coherent state.
  const auto flat = sm::squeezed_coherent_hermite(0.9, 0.0, 40);
  CHECK(fock::fidelity_pure(flat, fock::coherent_state(0.9, 40)) > 1.0 - 1e-12);
}

TEST_CASE("two-term superposition spec: amplitude ratio and validation") {
  // ratio c2/c0 = ((1−λ²)α² − λ)/√2 with λ = tanh r; frozen at α² = 2.6, r = 0.3.
  const auto spec = sm::psi2_spec(std::sqrt(2.6), 0.3);
  const double ratio = spec.coeffs[0].real() / spec.coeffs[1].real();
  CHECK(ratio == doctest::Approx(1.476469709988).epsilon(1e-10));
  spec.validate();

  sm::SuperpositionSpec bad;
  bad.top_n = 2;
  bad.coeffs = {1.0}; // wrong length for a (|2>,|0>) ladder
  CHECK_THROWS_AS(bad.validate(), catgen::validation_error);
}

TEST_CASE("fidelity curve spot values match the high-precision references") {
  // (alpha², variant) → (fidelity, optimal r), frozen from 40-digit arithmetic.
  struct Ref {
    double alpha_sq, f_2ps, r_2ps, f_psi2, r_psi2;
  };
  const Ref refs[] = {
      {1.0, 0.990498, 0.2958, 0.999902, 0.1796},
      {2.6, 0.932467, 0.5670, 0.992668, 0.4243},
  };
  for (const auto& ref : refs) {
    const double alpha = std::sqrt(ref.alpha_sq);
    const auto p2 = sm::optimal_fidelity_point(alpha, sm::Variant::two_photon_subtracted);
    const auto pp = sm::optimal_fidelity_point(alpha, sm::Variant::psi2);
    CHECK(p2.fidelity == doctest::Approx(ref.f_2ps).epsilon(2e-5));
    CHECK(p2.r_opt == doctest::Approx(ref.r_2ps).epsilon(2e-3));
    CHECK(pp.fidelity == doctest::Approx(ref.f_psi2).epsilon(2e-5));
    CHECK(pp.r_opt == doctest::Approx(ref.r_psi2).epsilon(2e-3));
  }
  // Small cats are approximated nearly perfectly by the two-term family.
  const auto small = sm::optimal_fidelity_point(std::sqrt(0.5), sm::Variant::psi2);
  CHECK(small.fidelity == doctest::Approx(0.999998).epsilon(2e-5));
  CHECK(small.r_opt == doctest::Approx(0.0912).epsilon(5e-3));
}

TEST_CASE("projection optimality: the optimized two-term family never loses") {
  for (const double alpha : {0.3, 0.7, 1.2, std::sqrt(2.6), 2.0}) {
    const auto p2 = sm::optimal_fidelity_point(alpha, sm::Variant::two_photon_subtracted);
    const auto pp = sm::optimal_fidelity_point(alpha, sm::Variant::psi2);
    CHECK(pp.fidelity >= p2.fidelity - 1e-12);
  }
}

TEST_CASE("curve evaluation is deterministic and ordered") {
  const std::vector<double> alphas{0.4, 0.8, 1.3};
  const auto c1 = sm::optimal_fidelity_curve(alphas, sm::Variant::psi2);
  const auto c2 = sm::optimal_fidelity_curve(alphas, sm::Variant::psi2);
  REQUIRE(c1.size() == alphas.size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    CHECK(c1[i].alpha == alphas[i]);
    CHECK(c1[i].fidelity == c2[i].fidelity); // bitwise reproducible
    CHECK(c1[i].r_opt == c2[i].r_opt);
  }
}

} // TEST_SUITE
