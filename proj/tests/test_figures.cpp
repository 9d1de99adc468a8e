#include <catgen/errors.hpp>
#include <catgen/figures.hpp>

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace figs = catgen::figures;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> data_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  bool past_column_row = false;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!past_column_row) { // first uncommented line names the columns
      past_column_row = true;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::path("figtest_out") / name;
  fs::remove_all(dir);
  return dir;
}

} // namespace

TEST_SUITE("figures") {

TEST_CASE("run configuration validation") {
  figs::RunConfig cfg;
  cfg.validate(); // all defaults valid

  figs::RunConfig bad_eps = cfg;
  bad_eps.epsilon_ratio = 1.5;
  CHECK_THROWS_AS(bad_eps.validate(), catgen::validation_error);

  figs::RunConfig bad_tol = cfg;
  bad_tol.quad_tol = 0.0;
  CHECK_THROWS_AS(bad_tol.validate(), catgen::validation_error);

  figs::RunConfig bad_alpha = cfg;
  bad_alpha.alpha = {1.0, -0.5};
  CHECK_THROWS_AS(bad_alpha.validate(), catgen::validation_error);

  figs::RunConfig bad_step = cfg;
  bad_step.delta_step = -0.1;
  CHECK_THROWS_AS(bad_step.validate(), catgen::validation_error);
}

TEST_CASE("mixing-weight sweep: header, limits and determinism") {
  figs::RunConfig cfg;
  cfg.epsilon_ratio = 0.27;
  cfg.delta_min = 0.0;
  cfg.delta_max = 0.2;
  cfg.delta_step = 0.1;
  cfg.output_dir = fresh_dir("fig34").string();

  const auto paths = figs::cmd_fig34(cfg);
  REQUIRE(paths.size() == 1);
  const std::string first = slurp(paths[0]);
  CHECK(first.rfind("# catgen ", 0) == 0); // header starts the file
  CHECK(first.find("# command: fig34") != std::string::npos);
  CHECK(first.find("zeta0_delta,C_phi,C_v,c2_sq,c0_sq") != std::string::npos);

  const auto rows = data_rows(first);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].rfind("0,1,0,", 0) == 0); // coincident clicks: pure branch, exactly

  const auto again = figs::cmd_fig34(cfg);
  CHECK(slurp(again[0]) == first); // byte-identical rerun
}

TEST_CASE("unset pump ratio fans out to the standard sweep") {
  figs::RunConfig cfg;
  cfg.delta_min = 0.5;
  cfg.delta_max = 0.5;
  cfg.delta_step = 0.1;
  cfg.output_dir = fresh_dir("fig34_sweep").string();
  const auto paths = figs::cmd_fig34(cfg);
  REQUIRE(paths.size() == 3);
  CHECK(paths[0].filename().string() == "fig34_eps0.1.csv");
  CHECK(paths[1].filename().string() == "fig34_eps0.3.csv");
  CHECK(paths[2].filename().string() == "fig34_eps0.5.csv");
}

TEST_CASE("channel sweep omits and flags the undefined coincident-click row") {
  figs::RunConfig cfg;
  cfg.epsilon_ratio = 0.27;
  cfg.delta_min = 0.0;
  cfg.delta_max = 0.1;
  cfg.delta_step = 0.05;
  cfg.output_dir = fresh_dir("fig78").string();

  const auto paths = figs::cmd_fig78(cfg);
  REQUIRE(paths.size() == 1);
  const std::string text = slurp(paths[0]);
  CHECK(text.find("omitted") != std::string::npos);
  const auto rows = data_rows(text);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].rfind("0.05,", 0) == 0);
  CHECK(rows[1].rfind("0.1,", 0) == 0);
  for (const auto& row : rows) {
    // all four emitted channel figures are non-negative
    std::istringstream ss(row);
    std::string cell;
    std::getline(ss, cell, ',');
    while (std::getline(ss, cell, ',')) {
      CHECK(std::stod(cell) >= 0.0);
    }
  }
}

TEST_CASE("fidelity sweep reproduces the headline value in its column") {
  figs::RunConfig cfg;
  cfg.delta_min = 1.4;
  cfg.delta_max = 1.4;
  cfg.delta_step = 0.1;
  cfg.alpha = {std::sqrt(2.6)};
  cfg.output_dir = fresh_dir("fig6").string();

  const auto paths = figs::cmd_fig6(cfg);
  REQUIRE(paths.size() == 1);
  const std::string text = slurp(paths[0]);
  CHECK(text.find("F_alpha2_2.6") != std::string::npos);
  const auto rows = data_rows(text);
  REQUIRE(rows.size() == 1);
  const auto comma = rows[0].find(',');
  const double fidelity = std::stod(rows[0].substr(comma + 1));
  CHECK(fidelity == doctest::Approx(0.946233).epsilon(1e-4));
}

TEST_CASE("single-mode sweep emits the requested grid with optimal parameters") {
  figs::RunConfig cfg;
  cfg.alpha = {1.0};
  cfg.output_dir = fresh_dir("fig1").string();

  const auto paths = figs::cmd_fig1(cfg);
  REQUIRE(paths.size() == 1);
  const auto rows = data_rows(slurp(paths[0]));
  REQUIRE(rows.size() == 1);
  std::istringstream ss(rows[0]);
  std::string cell;
  std::vector<double> cells;
  while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
  REQUIRE(cells.size() == 5);
  CHECK(cells[0] == 1.0);
  CHECK(cells[1] == doctest::Approx(0.990498).epsilon(1e-4)); // F_2PS
  CHECK(cells[3] == doctest::Approx(0.999902).epsilon(1e-4)); // F_psi2
  CHECK(cells[3] >= cells[1]);
}

TEST_CASE("Wigner grid file carries the normalization footer") {
  figs::RunConfig cfg;
  cfg.epsilon_ratio = 0.27;
  cfg.output_dir = fresh_dir("wigner").string();

  const auto paths = figs::cmd_wigner(cfg, 1.4);
  REQUIRE(paths.size() == 1);
  const std::string text = slurp(paths[0]);
  const auto pos = text.find("# normalization = ");
  REQUIRE(pos != std::string::npos);
  const double norm = std::stod(text.substr(pos + 18));
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(data_rows(text).size() == 301u * 301u);
}

} // TEST_SUITE
