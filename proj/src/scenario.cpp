#include "lps/scenario.hpp"

#include <fstream>

namespace lps {

namespace {

Mat parse_matrix(const Json& j, int k_dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != k_dim)
    throw DomainError("matrix must be an array of " + std::to_string(k_dim) + " rows");
  Mat m(k_dim, k_dim);
  for (int r = 0; r < k_dim; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != k_dim)
      throw DomainError("matrix row " + std::to_string(r) + " must have " +
                        std::to_string(k_dim) + " entries");
    for (int c = 0; c < k_dim; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

Factor parse_factor(const Json& j, int k_dim) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "unitary") return Factor::constant(parse_matrix(j.at("matrix"), k_dim));
  Factor::Kind fk;
  if (kind == "inner")
    fk = Factor::Kind::inner;
  else if (kind == "anti_inner")
    fk = Factor::Kind::anti_inner;
  else
    throw DomainError("unknown factor kind '" + kind + "'");
  const Complex mu = complex_from_json(j.at("mu"));
  if (j.contains("projection")) return Factor::blaschke(fk, mu, parse_matrix(j["projection"], k_dim));
  if (k_dim != 1)
    throw DomainError("factors need an explicit projection when k_dim > 1");
  return Factor::blaschke_scalar(fk, mu);
}

}  // namespace

ScatteringMatrix parse_scattering(const Json& j, int k_dim) {
  ScatteringMatrix s(k_dim);
  if (j.contains("factors"))
    for (const Json& f : j["factors"]) s.push_factor(parse_factor(f, k_dim));
  if (j.contains("phase_amplitude"))
    s.set_phase_amplitude(j["phase_amplitude"].get<double>());
  return s;
}

double Scenario::tolerance(const std::string& key, double fallback) const {
  if (tolerances.contains(key)) {
    const double v = tolerances[key].get<double>();
    if (v <= 0.0) throw DomainError("tolerance '" + key + "' must be positive");
    return v;
  }
  return fallback;
}

Json Scenario::echo() const {
  Json factors = Json::array();
  for (const auto& f : scattering.factors()) {
    Json jf;
    switch (f.kind) {
      case Factor::Kind::unitary:
        jf["kind"] = "unitary";
        break;
      case Factor::Kind::inner:
        jf["kind"] = "inner";
        jf["mu"] = complex_to_json(f.mu);
        jf["rank"] = f.rank();
        break;
      case Factor::Kind::anti_inner:
        jf["kind"] = "anti_inner";
        jf["mu"] = complex_to_json(f.mu);
        jf["rank"] = f.rank();
        break;
    }
    factors.push_back(jf);
  }
  Json j{{"name", name},
         {"k_dim", k_dim},
         {"trunc_n", trunc_n},
         {"grid_factor", grid_factor},
         {"seed", seed},
         {"scattering", {{"factors", factors}}},
         {"tolerances", tolerances}};
  if (scattering.phase_amplitude())
    j["scattering"]["phase_amplitude"] = *scattering.phase_amplitude();
  return j;
}

Scenario parse_scenario(const Json& j) {
  Scenario sc;
  sc.name = j.at("name").get<std::string>();
  sc.k_dim = j.value("k_dim", 1);
  sc.trunc_n = j.value("trunc_n", kDefaultTruncation);
  sc.grid_factor = j.value("grid_factor", kDefaultGridFactor);
  sc.seed = j.value("seed", std::uint64_t{1});
  if (sc.k_dim < 1 || sc.trunc_n < 2 || sc.grid_factor < 4)
    throw DomainError("scenario '" + sc.name + "': k_dim >= 1, trunc_n >= 2 and grid_factor >= 4 required");
  sc.scattering = parse_scattering(j.value("scattering", Json::object()), sc.k_dim);
  if (j.contains("tolerances")) sc.tolerances = j["tolerances"];
  for (const Json& e : j.value("experiments", Json::array())) {
    ExperimentSpec spec;
    spec.type = e.at("type").get<std::string>();
    spec.params = e.value("params", Json::object());
    sc.experiments.push_back(spec);
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("scenario " + path + ": " + e.what());
  }
  try {
    return parse_scenario(j);
  } catch (const Json::exception& e) {
    throw Error("scenario " + path + ": " + e.what());
  }
}

}  // namespace lps
