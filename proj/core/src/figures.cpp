#include "catgen/figures.hpp"

#include "catgen/channel.hpp"
#include "catgen/conditional.hpp"
#include "catgen/errors.hpp"
#include "catgen/single_mode.hpp"
#include "catgen/threading.hpp"
#include "catgen/version.hpp"
#include "catgen/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace catgen::figures {

namespace {

bool is_set(double v) { return !std::isnan(v); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> arange(double lo, double hi, double step) {
  std::vector<double> grid;
  const auto count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  grid.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) grid.push_back(lo + step * i);
  return grid;
}

std::vector<double> delta_grid(const RunConfig& cfg, double def_min, double def_max,
                               double def_step) {
  const double lo = is_set(cfg.delta_min) ? cfg.delta_min : def_min;
  const double hi = is_set(cfg.delta_max) ? cfg.delta_max : def_max;
  const double step = is_set(cfg.delta_step) ? cfg.delta_step : def_step;
  if (!(lo >= 0.0) || !(hi >= lo) || !(step > 0.0)) {
    throw validation_error("delta grid requires 0 <= delta_min <= delta_max and delta_step > 0");
  }
  return arange(lo, hi, step);
}

std::vector<double> epsilon_sweep(const RunConfig& cfg) {
  if (is_set(cfg.epsilon_ratio)) return {cfg.epsilon_ratio};
  return {0.1, 0.3, 0.5};
}

std::vector<double> alpha_grid(const RunConfig& cfg, std::vector<double> fallback) {
  if (cfg.alpha.empty()) return fallback;
  std::vector<double> grid = cfg.alpha;
  std::sort(grid.begin(), grid.end());
  return grid;
}

std::filesystem::path open_output(const RunConfig& cfg, const std::string& name,
                                  std::ofstream& os) {
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  std::filesystem::path path = dir / name;
  os.open(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw validation_error("cannot open output file " + path.string());
  }
  return path;
}

using HeaderFields = std::vector<std::pair<std::string, std::string>>;

void write_header(std::ofstream& os, const std::string& command, const RunConfig& cfg,
                  const HeaderFields& fields, const std::string& columns) {
  os << "# catgen " << version_string << "\n";
  os << "# command: " << command << "\n";
  for (const auto& [key, value] : fields) {
    os << "# " << key << " = " << value << "\n";
  }
  os << "# truncation = " << cfg.truncation << "\n";
  os << "# quad_tol = " << fmt(cfg.quad_tol) << "\n";
  os << "# columns: " << columns << "\n";
  os << columns << "\n";
}

std::string grid_summary(const std::vector<double>& grid) {
  std::ostringstream os;
  os << fmt(grid.front()) << " .. " << fmt(grid.back()) << " (" << grid.size() << " points)";
  return os.str();
}

} // namespace

void RunConfig::validate() const {
  if (is_set(epsilon_ratio) && !(epsilon_ratio > 0.0 && epsilon_ratio < 1.0)) {
    throw validation_error("epsilon_ratio must lie in (0, 1)");
  }
  for (double v : {delta_min, delta_max, delta_step}) {
    if (is_set(v) && !std::isfinite(v)) {
      throw validation_error("delta grid parameters must be finite");
    }
  }
  if (is_set(delta_min) && delta_min < 0.0) {
    throw validation_error("delta_min must be >= 0");
  }
  if (is_set(delta_step) && !(delta_step > 0.0)) {
    throw validation_error("delta_step must be > 0");
  }
  if (is_set(delta_min) && is_set(delta_max) && delta_max < delta_min) {
    throw validation_error("delta_max must be >= delta_min");
  }
  for (double a : alpha) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw validation_error("alpha values must be positive and finite");
    }
  }
  if (truncation < 8 || truncation > 512) {
    throw validation_error("truncation must lie in [8, 512]");
  }
  if (!(quad_tol >= 1e-14 && quad_tol <= 1e-2)) {
    throw validation_error("quad_tol must lie in [1e-14, 1e-2]");
  }
  if (output_dir.empty()) {
    throw validation_error("output_dir must be non-empty");
  }
}

std::vector<std::filesystem::path> cmd_fig1(const RunConfig& cfg) {
  cfg.validate();
  const std::vector<double> alphas = alpha_grid(cfg, arange(0.1, 2.2, 0.02));

  const auto curve_2ps = single_mode::optimal_fidelity_curve(
      alphas, single_mode::Variant::two_photon_subtracted, cfg.truncation);
  const auto curve_psi2 =
      single_mode::optimal_fidelity_curve(alphas, single_mode::Variant::psi2, cfg.truncation);

  std::ofstream os;
  const auto path = open_output(cfg, "fig1.csv", os);
  write_header(os, "fig1", cfg, {{"alpha_grid", grid_summary(alphas)}},
               "alpha,F_2PS,r_opt_2PS,F_psi2,r_opt_psi2");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    os << fmt(alphas[i]) << ',' << fmt(curve_2ps[i].fidelity) << ',' << fmt(curve_2ps[i].r_opt)
       << ',' << fmt(curve_psi2[i].fidelity) << ',' << fmt(curve_psi2[i].r_opt) << "\n";
  }
  return {path};
}

std::vector<std::filesystem::path> cmd_fig34(const RunConfig& cfg) {
  cfg.validate();
  const std::vector<double> deltas = delta_grid(cfg, 0.0, 6.0, 0.05);

  std::vector<std::filesystem::path> written;
  for (const double eps : epsilon_sweep(cfg)) {
    const auto params = opo::OpoParams::from_ratio(eps);
    std::vector<std::array<double, 4>> rows(deltas.size());
    parallel_for(deltas.size(), [&](std::size_t i) {
      const auto d = conditional::decompose(deltas[i], params, cfg.quad_tol);
      rows[i] = {d.c_phi, d.c_v, d.c2 * d.c2, d.c0 * d.c0};
    });

    std::ofstream os;
    const auto path = open_output(cfg, "fig34_eps" + fmt(eps) + ".csv", os);
    write_header(os, "fig34", cfg,
                 {{"epsilon_ratio", fmt(eps)}, {"zeta0_delta_grid", grid_summary(deltas)}},
                 "zeta0_delta,C_phi,C_v,c2_sq,c0_sq");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      os << fmt(deltas[i]) << ',' << fmt(rows[i][0]) << ',' << fmt(rows[i][1]) << ','
         << fmt(rows[i][2]) << ',' << fmt(rows[i][3]) << "\n";
    }
    written.push_back(path);
  }
  return written;
}

std::vector<std::filesystem::path> cmd_wigner(const RunConfig& cfg, double zeta0_delta) {
  cfg.validate();
  if (!(zeta0_delta >= 0.0) || !std::isfinite(zeta0_delta)) {
    throw validation_error("zeta0_delta must be finite and >= 0");
  }
  const double eps = is_set(cfg.epsilon_ratio) ? cfg.epsilon_ratio : 0.27;
  const auto params = opo::OpoParams::from_ratio(eps);
  const auto decomp = conditional::decompose(zeta0_delta, params, cfg.quad_tol);
  const auto ch = channel::make_channel(zeta0_delta, params, channel::Branch::plus, cfg.quad_tol);

  // [-7, 7] keeps the tail mass below the 1e-5 normalization bound recorded
  // in the footer even for the widest pump settings.
  const std::vector<double> axis = wigner::linspace(-7.0, 7.0, 301);
  const auto grid = wigner::w_plus_closed_grid(axis, axis, decomp, ch);

  std::ofstream os;
  const auto path = open_output(cfg, "wigner_delta" + fmt(zeta0_delta) + ".csv", os);
  write_header(os, "wigner", cfg,
               {{"epsilon_ratio", fmt(eps)},
                {"zeta0_delta", fmt(zeta0_delta)},
                {"grid", "[-7, 7] x [-7, 7], 301 x 301"},
                {"g_x", fmt(ch.g_x)},
                {"g_p", fmt(ch.g_p)},
                {"f_x", fmt(ch.f_x)},
                {"f_p", fmt(ch.f_p)},
                {"c_phi", fmt(decomp.c_phi)},
                {"c2", fmt(decomp.c2)},
                {"c0", fmt(decomp.c0)}},
               "x,p,W");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    for (std::size_t j = 0; j < axis.size(); ++j) {
      os << fmt(axis[i]) << ',' << fmt(axis[j]) << ','
         << fmt(grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) << "\n";
    }
  }
  os << "# normalization = " << fmt(grid.integral()) << "\n";
  return {path};
}

std::vector<std::filesystem::path> cmd_fig6(const RunConfig& cfg) {
  cfg.validate();
  const double eps = is_set(cfg.epsilon_ratio) ? cfg.epsilon_ratio : 0.27;
  const auto params = opo::OpoParams::from_ratio(eps);
  const std::vector<double> alphas = alpha_grid(
      cfg, {std::sqrt(2.0), std::sqrt(2.5), std::sqrt(2.6), std::sqrt(3.0), std::sqrt(3.5)});
  const std::vector<double> deltas = delta_grid(cfg, 0.0, 4.0, 0.02);

  std::vector<std::vector<double>> rows(deltas.size());
  parallel_for(deltas.size(), [&](std::size_t i) {
    const auto decomp = conditional::decompose(deltas[i], params, cfg.quad_tol);
    const auto ch = channel::make_channel(deltas[i], params, channel::Branch::plus, cfg.quad_tol);
    rows[i].reserve(alphas.size());
    for (const double alpha : alphas) {
      rows[i].push_back(wigner::fidelity_to_cat(decomp, ch, alpha));
    }
  });

  std::string columns = "zeta0_delta";
  for (const double alpha : alphas) {
    columns += ",F_alpha2_" + fmt(alpha * alpha);
  }

  std::ofstream os;
  const auto path = open_output(cfg, "fig6.csv", os);
  HeaderFields fields{{"epsilon_ratio", fmt(eps)}, {"zeta0_delta_grid", grid_summary(deltas)}};
  std::string alpha_list;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    alpha_list += (k ? ", " : "") + fmt(alphas[k]);
  }
  fields.emplace_back("alpha", alpha_list);
  write_header(os, "fig6", cfg, fields, columns);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    os << fmt(deltas[i]);
    for (const double f : rows[i]) os << ',' << fmt(f);
    os << "\n";
  }
  return {path};
}

std::vector<std::filesystem::path> cmd_fig78(const RunConfig& cfg) {
  cfg.validate();
  std::vector<double> deltas = delta_grid(cfg, 0.0, 10.0, 0.05);
  const bool dropped_zero = !deltas.empty() && deltas.front() < 1e-12;
  if (dropped_zero) deltas.erase(deltas.begin());
  if (deltas.empty()) {
    throw validation_error("fig78 needs at least one zeta0_delta > 0");
  }

  std::vector<std::filesystem::path> written;
  for (const double eps : epsilon_sweep(cfg)) {
    const auto params = opo::OpoParams::from_ratio(eps);
    std::vector<std::array<double, 4>> rows(deltas.size());
    parallel_for(deltas.size(), [&](std::size_t i) {
      const auto plus = channel::make_channel(deltas[i], params, channel::Branch::plus, cfg.quad_tol);
      const auto minus =
          channel::make_channel(deltas[i], params, channel::Branch::minus, cfg.quad_tol);
      const auto [r_plus, n_plus] = channel::effective_params(plus);
      const auto [r_minus, n_minus] = channel::effective_params(minus);
      rows[i] = {std::abs(r_plus), std::max(0.0, n_plus), std::abs(r_minus),
                 std::max(0.0, n_minus)};
    });

    std::ofstream os;
    const auto path = open_output(cfg, "fig78_eps" + fmt(eps) + ".csv", os);
    HeaderFields fields{{"epsilon_ratio", fmt(eps)}, {"zeta0_delta_grid", grid_summary(deltas)}};
    if (dropped_zero) {
      fields.emplace_back("note",
                          "zeta0_delta = 0 row omitted: the antisymmetric temporal mode is "
                          "undefined at coincident clicks");
    }
    write_header(os, "fig78", cfg, fields, "zeta0_delta,r_plus_abs,nbar_plus,r_minus_abs,nbar_minus");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      os << fmt(deltas[i]) << ',' << fmt(rows[i][0]) << ',' << fmt(rows[i][1]) << ','
         << fmt(rows[i][2]) << ',' << fmt(rows[i][3]) << "\n";
    }
    written.push_back(path);
  }
  return written;
}

} // namespace catgen::figures
