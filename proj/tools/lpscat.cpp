#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lps/experiments.hpp"

namespace {

// Exit codes: 0 all experiments passed, 1 at least one failed, 2 bad input.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfigError = 2;

void apply_overrides(lps::Scenario& sc, int trunc_n, int grid_factor) {
  if (trunc_n > 0) sc.trunc_n = trunc_n;
  if (grid_factor > 0) sc.grid_factor = grid_factor;
}

void print_summary(const lps::Json& report, int verbosity) {
  for (const auto& e : report.at("experiments")) {
    std::printf("%-20s %s (%.2fs)\n", e.at("type").get<std::string>().c_str(),
                e.at("passed").get<bool>() ? "pass" : "FAIL",
                e.at("seconds").get<double>());
    if (e.contains("error"))
      std::printf("  error: %s\n", e["error"].get<std::string>().c_str());
    if (verbosity > 0)
      std::printf("  %s\n", e.at("metrics").dump().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering-system scenario runner"};
  app.require_subcommand(1);

  std::string scenario_path, output_path;
  int trunc_n = 0, grid_factor = 0, verbosity = 0;
  std::vector<std::string> experiment_filter;
  std::vector<int> n_list{128, 256, 512};

  CLI::App* run = app.add_subcommand("run", "run a scenario's experiment suite");
  run->add_option("scenario", scenario_path, "scenario file (json)")->required();
  run->add_option("-o,--output", output_path, "write the report here");
  run->add_option("--trunc-n", trunc_n, "override the truncation");
  run->add_option("--grid-factor", grid_factor, "override the grid factor");
  run->add_option("-e,--experiment", experiment_filter, "run only these experiment types");
  run->add_flag("-v,--verbose", verbosity, "print metrics with the summary");

  CLI::App* conv = app.add_subcommand("convergence", "truncation sweep for a scenario");
  conv->add_option("scenario", scenario_path, "scenario file (json)")->required();
  conv->add_option("-o,--output", output_path, "write the csv table here");
  conv->add_option("--n-list", n_list, "truncations to sweep (ascending)");
  conv->add_flag("-v,--verbose", verbosity, "print the json record too");

  CLI11_PARSE(app, argc, argv);

  try {
    lps::Scenario sc = lps::load_scenario(scenario_path);
    apply_overrides(sc, trunc_n, grid_factor);

    if (run->parsed()) {
      const lps::Json report = lps::run_scenario_report(sc, experiment_filter);
      print_summary(report, verbosity);
      if (!output_path.empty()) lps::write_json_atomic(output_path, report);
      return lps::report_passed(report) ? kOk : kFailed;
    }

    const lps::Json table = lps::run_convergence_table(sc, n_list);
    const std::string csv = lps::convergence_csv(table);
    std::fputs(csv.c_str(), stdout);
    if (verbosity > 0) std::printf("%s\n", table.dump(2).c_str());
    if (!output_path.empty()) lps::write_text_atomic(output_path, csv);
    return table.at("passed").get<bool>() ? kOk : kFailed;
  } catch (const lps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}
