#pragma once

#include <string>
#include <vector>

#include "lps/scenario.hpp"

namespace lps {

struct ExperimentResult {
  std::string type;
  bool passed = false;
  double seconds = 0.0;
  Json metrics = Json::object();
  std::string error;  // non-empty when the experiment threw

  Json to_json() const;
};

// Known experiment types: projections, semigroup, identification, theorem1,
// lp_semigroup, survival_scan, pole_correspondence, convergence.
ExperimentResult run_experiment(const Scenario& sc, const ExperimentSpec& spec);

// Runs every experiment in order and assembles the report document.
Json run_scenario_report(const Scenario& sc,
                         const std::vector<std::string>& type_filter = {});

bool report_passed(const Json& report);

// Truncation sweep: the convergence experiment repeated standalone.
Json run_convergence_table(const Scenario& sc, const std::vector<int>& n_list);
std::string convergence_csv(const Json& table);

}  // namespace lps
