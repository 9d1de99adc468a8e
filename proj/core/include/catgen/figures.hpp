#pragma once

#include <filesystem>
#include <limits>
#include <string>
#include <vector>

namespace catgen::figures {

/// Shared knobs for the figure-reproduction commands. Fields left at NaN (or
/// an empty alpha list) fall back to per-command defaults, so one config can
/// drive every command.
struct RunConfig {
  double epsilon_ratio = std::numeric_limits<double>::quiet_NaN(); ///< ε/ζ₀
  double delta_min = std::numeric_limits<double>::quiet_NaN();     ///< ζ₀Δ sweep start
  double delta_max = std::numeric_limits<double>::quiet_NaN();     ///< ζ₀Δ sweep end
  double delta_step = std::numeric_limits<double>::quiet_NaN();    ///< ζ₀Δ sweep step
  std::vector<double> alpha;                                       ///< cat amplitudes α
  int truncation = 40;                                             ///< Fock-space dimension
  double quad_tol = 1e-11;                                         ///< quadrature relative tolerance
  std::string output_dir = ".";

  /// Throws validation_error on out-of-range values (set fields only).
  void validate() const;
};

/// Fidelity of the two optimized single-mode approximations to the even cat
/// versus amplitude. Columns: alpha, F_2PS, r_opt_2PS, F_psi2, r_opt_psi2.
/// Default grid alpha = 0.1 … 2.2 step 0.02.
std::vector<std::filesystem::path> cmd_fig1(const RunConfig& cfg);

/// Mixing weights C_phi/C_v and superposition amplitudes c2²/c0² versus click
/// separation, one file per ε/ζ₀ (default sweep {0.1, 0.3, 0.5}).
/// Columns: zeta0_delta, C_phi, C_v, c2_sq, c0_sq. Default ζ₀Δ = 0 … 6 step 0.05.
std::vector<std::filesystem::path> cmd_fig34(const RunConfig& cfg);

/// Wigner function of the conditional output state at one click separation
/// (default ε/ζ₀ = 0.27), long-format x, p, W rows on a 301×301 grid over
/// [−6, 6]², with the grid normalization recorded in a footer comment.
std::vector<std::filesystem::path> cmd_wigner(const RunConfig& cfg, double zeta0_delta);

/// Fidelity of the conditional output state to even cats of several sizes
/// versus click separation (default ε/ζ₀ = 0.27, default |α|² ∈
/// {2, 2.5, 2.6, 3, 3.5}, default ζ₀Δ = 0 … 4 step 0.02).
std::vector<std::filesystem::path> cmd_fig6(const RunConfig& cfg);

/// Effective squeezing |r±| and thermal photon number n̄± of the two
/// branch channels versus click separation, one file per ε/ζ₀ (default sweep
/// {0.1, 0.3, 0.5}, default ζ₀Δ = 0 … 10 step 0.05). The ζ₀Δ = 0 row is
/// omitted (the antisymmetric branch is undefined there) and the omission is
/// flagged in the header.
std::vector<std::filesystem::path> cmd_fig78(const RunConfig& cfg);

} // namespace catgen::figures
