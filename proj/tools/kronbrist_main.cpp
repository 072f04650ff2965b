#include "kronbrist/module_io.hpp"
#include "kronbrist/scenarios.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string catalog_text() {
  std::string out = "Scenarios:\n";
  for (const auto& s : kronbrist::scenario_catalog()) out += "  " + s.name + "\n      " + s.claim + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification scenarios for n-Kronecker modules and bristles.", "kronbrist"};
  app.footer(catalog_text());

  kronbrist::ScenarioConfig cfg;
  std::size_t n = 0;
  std::uint64_t q = 0;
  bool rational = false;
  std::string format = "json";
  std::string out_path;
  std::string module_path;
  bool timing = false;

  app.add_option("scenario", cfg.scenario, "scenario name")->required();
  app.add_option("--n", n, "number of arrows (default depends on the scenario)")->check(CLI::PositiveNumber);
  auto* q_opt = app.add_option("--q", q, "work over GF(P), P prime");
  auto* rational_opt = app.add_flag("--rational", rational, "work over the rationals");
  q_opt->excludes(rational_opt);
  app.add_option("--tmax", cfg.tmax, "largest preinjective / tau-power index")->capture_default_str();
  app.add_option("--seed", cfg.seed, "64-bit seed for random samples and iso search")->capture_default_str();
  app.add_option("--attempts", cfg.attempts, "random trials in searches")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random modules drawn by sampling scenarios")->capture_default_str();
  app.add_option("--subset-limit", cfg.subset_limit, "refuse exhaustive subset searches beyond this count")
      ->capture_default_str();
  app.add_option("--module", module_path, "module file for main-theorem-b-bristle-orbits");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_flag("--timing", timing, "include the wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.n = n;
    if (rational) cfg.field = kronbrist::FieldSpec::rationals();
    if (*q_opt) cfg.field = kronbrist::FieldSpec::prime(q);
    if (!module_path.empty()) cfg.module_path = module_path;

    const kronbrist::Report report = kronbrist::run_scenario(cfg);
    const std::string text =
        format == "json" ? kronbrist::to_json(report, timing) : kronbrist::to_table(report, timing);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!(out << text)) {
        std::cerr << "kronbrist: cannot write '" << out_path << "'\n";
        return kExitUsage;
      }
    }
    return report.passed() ? 0 : kExitFail;
  } catch (const kronbrist::ParseError& e) {
    std::cerr << "kronbrist: " << module_path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const kronbrist::ScenarioError& e) {
    std::cerr << "kronbrist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kronbrist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "kronbrist: " << e.what() << "\n";
    return kExitUsage;
  }
}
