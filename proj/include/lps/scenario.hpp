#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lps/report.hpp"
#include "lps/scattering.hpp"

namespace lps {

struct ExperimentSpec {
  std::string type;
  Json params = Json::object();
};

// A batch-runner input: which scattering matrix to build, at which
// discretization, and which experiments to run on it. See
// docs/scenario-schema.md for the file format.
struct Scenario {
  std::string name;
  int k_dim = 1;
  int trunc_n = kDefaultTruncation;
  int grid_factor = kDefaultGridFactor;
  std::uint64_t seed = 1;
  ScatteringMatrix scattering{1};
  std::vector<ExperimentSpec> experiments;
  Json tolerances = Json::object();

  double tolerance(const std::string& key, double fallback) const;
  Json echo() const;  // resolved configuration, embedded in every report
};

ScatteringMatrix parse_scattering(const Json& j, int k_dim);
Scenario parse_scenario(const Json& j);
Scenario load_scenario(const std::string& path);

}  // namespace lps
