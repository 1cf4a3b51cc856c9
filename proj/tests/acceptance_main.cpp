// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Usage: acceptance [scenario-dir]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lps/experiments.hpp"
#include "lps/lp_semigroup.hpp"
#include "lps/lp_system.hpp"
#include "lps/probes.hpp"
#include "lps/quadrature.hpp"
#include "lps/semigroup.hpp"

using namespace lps;

namespace {

std::string g_scenario_dir = "scenarios";

std::map<std::string, Scenario> load_suite() {
  std::map<std::string, Scenario> suite;
  for (const char* name :
       {"inner_single", "inner_triple", "inner_matrix", "constant_unitary",
        "anti_inner_single", "anti_inner_double", "smooth_phase"}) {
    suite.emplace(name, load_scenario(g_scenario_dir + "/" + std::string(name) + ".json"));
  }
  return suite;
}

Vec unit_k(int k_dim) {
  Vec k = Vec::Zero(k_dim);
  k(0) = 1.0;
  return k;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

// --- criterion 1: projection oracle equivalence --------------------------

Outcome criterion1() {
  probes::ProbeFactory factory(2026);
  const std::vector<Complex> upper{{0.3, 0.9}, {-1.1, 0.6}, {0.0, 2.5}};
  const std::vector<Complex> lower{{0.7, -0.8}, {-0.4, -1.7}};
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const RationalFunction rat = factory.two_sided(1);
    const SpectralFunction f = rat.to_spectral(512);
    const auto line = rat.as_line_function();
    const auto decay = rat.decay_envelope(4);
    const SpectralFunction fp = hardy::hardy_project(f, HardySign::plus);
    const SpectralFunction fm = hardy::hardy_project(f, HardySign::minus);
    for (Complex z : upper) {
      const Vec ref = hardy::cauchy_project_oracle(line, 1, z, decay).value;
      worst = std::max(worst, (hardy::evaluate_upper(fp, z) - ref).norm() / ref.norm());
    }
    for (Complex z : lower) {
      const Vec ref = -hardy::cauchy_project_oracle(line, 1, z, decay).value;
      worst = std::max(worst, (hardy::evaluate_lower(fm, z) - ref).norm() / ref.norm());
    }
  }
  return {worst <= 1e-6, "max relative deviation " + fmt(worst)};
}

// --- criterion 2: reproducing formula -------------------------------------

Outcome criterion2() {
  probes::ProbeFactory factory(2027);
  const std::vector<Complex> zetas{
      {0.0, -1.0}, {0.0, -2.0}, {-1.0, -0.5}, {1.5, -0.75}, {0.3, -1.2}};
  double worst = 0.0;
  for (Complex zeta : zetas) {
    const Vec k = factory.random_direction(1);
    const SpectralFunction f = semigroups::make_reproducing(zeta, k, 512);
    for (int rep = 0; rep < 5; ++rep) {
      const SpectralFunction g = factory.lower_pole_product(1).to_spectral(512);
      const Complex lhs = f.inner(g);
      const Complex rhs = 2.0 * kPi * kI * k.dot(hardy::evaluate_upper(g, std::conj(zeta)));
      worst = std::max(worst, std::abs(lhs - rhs) / (f.norm() * g.norm()));
    }
  }
  return {worst <= 1e-8, "max residual " + fmt(worst)};
}

// --- criterion 3: characteristic semigroup --------------------------------

Outcome criterion3() {
  probes::ProbeFactory factory(2028);
  double eigen_worst = 0.0;
  bool contraction = true;
  for (Complex zeta : {Complex(0, -1), Complex(0, -2), Complex(1, -1), Complex(-1, -0.5)}) {
    const SpectralFunction f = semigroups::make_reproducing(zeta, unit_k(1), 512);
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
      const SpectralFunction tf = semigroups::characteristic_apply(f, t);
      eigen_worst =
          std::max(eigen_worst, (tf - std::exp(-kI * t * zeta) * f).norm() / f.norm());
      if (tf.norm() > f.norm() * (1 + 1e-9)) contraction = false;
    }
  }
  double isometry_worst = 0.0;
  bool ladder = true;
  for (int rep = 0; rep < 4; ++rep) {
    const SpectralFunction f = factory.lower_pole_product(1).to_spectral(512);
    const SpectralFunction af = semigroups::characteristic_adjoint_apply(f, 1.0);
    isometry_worst = std::max(isometry_worst, std::abs(af.norm() - f.norm()) / f.norm());
    const auto profile = semigroups::decay_profile(f, {0.0, 0.5, 1.0, 2.0, 4.0});
    for (std::size_t j = 1; j < profile.size(); ++j)
      if (profile[j] >= profile[j - 1]) ladder = false;
    for (double t : {0.5, 2.0})
      if (semigroups::characteristic_apply(f, t).norm() > f.norm() * (1 + 1e-9))
        contraction = false;
  }
  const bool pass =
      eigen_worst <= 1e-6 && isometry_worst <= 1e-8 && contraction && ladder;
  return {pass, "eigen " + fmt(eigen_worst) + ", isometry " +
                    fmt(isometry_worst) +
                    (contraction ? "" : ", contraction violated") +
                    (ladder ? "" : ", ladder not decreasing")};
}

// --- criterion 4: identification algebra ----------------------------------

Outcome criterion4(const std::map<std::string, Scenario>& suite) {
  probes::ProbeFactory factory(2029);
  double inner_gram = 0.0, anti_gram = 1e300, eq14 = 0.0;
  bool prop8_ok = true;
  for (const auto& [name, sc] : suite) {
    const LPSystem sys(sc.scattering, sc.trunc_n, sc.grid_factor);
    std::vector<SpectralFunction> probes;
    for (int j = 0; j < 4; ++j)
      probes.push_back(factory.two_sided(sc.k_dim).to_spectral(sc.trunc_n));
    double gram = 0.0;
    for (const auto& f : probes) {
      gram = std::max(gram, sys.gram_defect(f).norm() / f.norm());
      eq14 = std::max(eq14, sys.jjstar_defect(f).norm() / f.norm());
    }
    if (name.rfind("inner", 0) == 0 || name == "constant_unitary")
      inner_gram = std::max(inner_gram, gram);
    if (name.rfind("anti_inner", 0) == 0) anti_gram = std::min(anti_gram, gram);
    prop8_ok = prop8_ok && sys.check_isometry_equivalences(probes).consistent;
  }

  // Lemma 1 profile on the anti-inner fixture, f = k/(z + i).
  const LPSystem anti(suite.at("anti_inner_single").scattering, 512);
  const SpectralFunction fixture = semigroups::make_reproducing(Complex(0, -1), unit_k(1), 512);
  const auto profile =
      anti.asymptotic_equivalence_profile(fixture, {-8, -4, -2, -1, 1, 2, 4, 8});
  bool profile_ok = true;
  for (int j : {0, 1, 2})
    if (profile[j] >= profile[j + 1]) profile_ok = false;
  for (int j : {5, 6, 7})
    if (profile[j] >= profile[j - 1]) profile_ok = false;

  const bool pass =
      inner_gram <= 1e-6 && anti_gram >= 1e-2 && eq14 <= 1e-8 && profile_ok && prop8_ok;
  return {pass, "inner gram " + fmt(inner_gram) + ", witness gram " +
                    fmt(anti_gram) + ", second identity " + fmt(eq14) +
                    (profile_ok ? "" : ", profile not decreasing") +
                    (prop8_ok ? "" : ", equivalence verdict mixed")};
}

// --- criterion 5: projection algebra --------------------------------------

Outcome criterion5(const std::map<std::string, Scenario>& suite) {
  const std::map<std::string, std::pair<int, int>> expected{
      {"inner_single", {0, 0}},      {"inner_triple", {0, 0}},
      {"inner_matrix", {0, 0}},      {"constant_unitary", {0, 0}},
      {"anti_inner_single", {1, 1}}, {"anti_inner_double", {2, 2}}};
  double worst = 0.0;
  bool ranks_ok = true, dichotomy = true;
  for (const auto& [name, want] : expected) {
    const Scenario& sc = suite.at(name);
    const LPSystem sys(sc.scattering, sc.trunc_n, sc.grid_factor);
    const ProjectionAlgebra alg = sys.theorem1_decompose();
    worst = std::max({worst, alg.spectrum_residual, alg.e_projection, alg.f_projection,
                      alg.ef_cross, alg.a_partial_isometry, alg.b_idempotent});
    if (alg.rank_e != want.first || alg.rank_f != want.second) ranks_ok = false;
    if ((alg.rank_e == 0) != (alg.rank_f == 0)) dichotomy = false;
  }
  const bool pass = worst <= 1e-6 && ranks_ok && dichotomy;
  return {pass, "max algebra residual " + fmt(worst) +
                    (ranks_ok ? "" : ", rank mismatch") +
                    (dichotomy ? "" : ", dichotomy violated")};
}

// --- criterion 6: semigroup property contrast ------------------------------

Outcome criterion6(const std::map<std::string, Scenario>& suite) {
  probes::ProbeFactory factory(2030);
  double commuting_worst = 0.0, witness_best = 1e300;
  for (const auto& [name, sc] : suite) {
    const LPSystem sys(sc.scattering, sc.trunc_n, sc.grid_factor);
    std::vector<SpectralFunction> probes;
    for (int j = 0; j < 3; ++j)
      probes.push_back(factory.lower_pole_product(sc.k_dim).to_spectral(sc.trunc_n));
    SpectralFunction witness =
        semigroups::make_reproducing(Complex(0, -1), unit_k(sc.k_dim), sc.trunc_n);
    witness *= Complex(1.0 / witness.norm(), 0.0);
    probes.push_back(witness);
    for (auto [t1, t2] : {std::pair{0.5, 0.7}, {1.0, 2.0}}) {
      const double r = verify_semigroup_property(sys, probes, t1, t2);
      if (name == "smooth_phase")
        witness_best = std::min(witness_best, r);
      else
        commuting_worst = std::max(commuting_worst, r);
    }
  }
  const bool pass = commuting_worst <= 1e-6 && witness_best >= 1e-2;
  return {pass, "commuting max " + fmt(commuting_worst) + ", witness min " +
                    fmt(witness_best)};
}

// --- criterion 7: resonance-pole correspondence ----------------------------

Outcome criterion7(const std::map<std::string, Scenario>& suite) {
  double survival_worst = 0.0, eigen_worst = 0.0, decoy_best = 1e300;
  bool matched = true, direction_ok = true;
  for (const char* name : {"inner_single", "inner_triple", "inner_matrix"}) {
    const Scenario& sc = suite.at(name);
    const LPSystem sys(sc.scattering, sc.trunc_n, sc.grid_factor);
    const PoleCorrespondence corr = pole_correspondence(sys);
    matched = matched && corr.matched;
    for (const auto& r : corr.resonances) {
      survival_worst = std::max(survival_worst, r.worst_survival);
      eigen_worst = std::max(eigen_worst, r.eigen_residual);
    }
    const std::vector<Complex> decoys{{0, -0.5}, {0, -2}, {0, -3}, {1, -1.5},
                                      {-1, -2}, {2, -0.5}, {0.5, -1.5}};
    for (Complex zeta : decoys) {
      bool clash = false;
      for (const auto& r : corr.resonances)
        if (std::abs(zeta - r.zeta) < 0.1) clash = true;
      if (clash) continue;
      decoy_best =
          std::min(decoy_best, survival_test(sys, zeta, unit_k(sc.k_dim)).residual);
    }
  }
  {
    // matching eigenvector directions: the complementary direction fails
    const Scenario& sc = suite.at("inner_matrix");
    const LPSystem sys(sc.scattering, sc.trunc_n, sc.grid_factor);
    Vec k2 = Vec::Zero(2);
    k2(1) = 1.0;
    direction_ok = !survival_test(sys, Complex(0, -1), k2).survives;
  }
  const bool pass = survival_worst <= 1e-4 && decoy_best >= 1e-3 &&
                    eigen_worst <= 1e-5 && matched && direction_ok;
  return {pass, "survival " + fmt(survival_worst) + ", decoy floor " +
                    fmt(decoy_best) + ", eigen " + fmt(eigen_worst) +
                    (matched ? "" : ", rank mismatch") +
                    (direction_ok ? "" : ", direction test failed")};
}

// --- criterion 8: bounds and the sufficiency criterion ---------------------

Outcome criterion8(const std::map<std::string, Scenario>& suite) {
  int violations = 0;
  bool pw_ok = true, hypothesis_ok = true;
  for (const char* name : {"inner_single", "inner_triple", "inner_matrix"}) {
    const Scenario& sc = suite.at(name);
    const LPSystem sys(sc.scattering, sc.trunc_n, sc.grid_factor);
    for (const auto& factor : sc.scattering.factors()) {
      if (factor.kind != Factor::Kind::inner) continue;
      Eigen::SelfAdjointEigenSolver<Mat> es(factor.matrix);
      for (int j = 0; j < es.eigenvalues().size(); ++j) {
        if (es.eigenvalues()(j) <= 0.5) continue;
        const Complex zeta = std::conj(factor.mu);
        const Vec k = es.eigenvectors().col(j);
        violations += survival_test(sys, zeta, k).bound_violations;
        const Prop9Report rep = prop9_sufficiency_check(sys, zeta, k);
        hypothesis_ok = hypothesis_ok && rep.hypothesis_holds && rep.survives;
        pw_ok = pw_ok && rep.pw_bounded;
      }
    }
  }
  const bool pass = violations == 0 && pw_ok && hypothesis_ok;
  return {pass, std::to_string(violations) + " bound violations" +
                    (pw_ok ? ", integral bound holds" : ", integral bound FAILS") +
                    (hypothesis_ok ? "" : ", hypothesis chain broken")};
}

// --- criterion 9: convergence ----------------------------------------------

Outcome criterion9(const std::map<std::string, Scenario>& suite) {
  const Json table = run_convergence_table(suite.at("inner_single"), {128, 256, 512});
  const bool pass = table.at("passed").get<bool>();
  std::string detail = "eigen residuals:";
  for (const Json& row : table["metrics"]["rows"])
    detail += " " + fmt(row["eigen_residual"].get<double>());
  return {pass, detail};
}

// --- criterion 10: determinism ----------------------------------------------

void collect_numbers(const Json& j, const std::string& prefix,
                     std::map<std::string, double>& out) {
  if (j.is_number()) {
    out[prefix] = j.get<double>();
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      if (key != "seconds") collect_numbers(value, prefix + "/" + key, out);
  } else if (j.is_array()) {
    int idx = 0;
    for (const auto& value : j) collect_numbers(value, prefix + "[" + std::to_string(idx++) + "]", out);
  }
}

Outcome criterion10(const std::map<std::string, Scenario>& suite) {
  bool all_passed = true;
  double worst = 0.0;
  bool aligned = true;
  for (const auto& [name, sc] : suite) {
    const Json a = run_scenario_report(sc);
    const Json b = run_scenario_report(sc);
    all_passed = all_passed && report_passed(a) && report_passed(b);
    std::map<std::string, double> na, nb;
    collect_numbers(a, name, na);
    collect_numbers(b, name, nb);
    if (na.size() != nb.size()) aligned = false;
    for (const auto& [key, value] : na) {
      auto it = nb.find(key);
      if (it == nb.end()) {
        aligned = false;
        continue;
      }
      worst = std::max(worst, std::abs(value - it->second));
    }
  }
  const bool pass = all_passed && aligned && worst <= 1e-10;
  return {pass, "max rerun deviation " + fmt(worst) +
                    (all_passed ? ", full suite passed twice" : ", suite FAILED") +
                    (aligned ? "" : ", report shapes differ")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_scenario_dir = argv[1];
  std::map<std::string, Scenario> suite;
  try {
    suite = load_suite();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cannot load the bundled scenarios: %s\n", e.what());
    return 2;
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"projection oracle equivalence", [] { return criterion1(); }},
      {"reproducing formula", [] { return criterion2(); }},
      {"characteristic semigroup", [] { return criterion3(); }},
      {"identification algebra", [&] { return criterion4(suite); }},
      {"projection algebra ranks", [&] { return criterion5(suite); }},
      {"semigroup property contrast", [&] { return criterion6(suite); }},
      {"resonance-pole correspondence", [&] { return criterion7(suite); }},
      {"bounds and sufficiency", [&] { return criterion8(suite); }},
      {"convergence", [&] { return criterion9(suite); }},
      {"determinism", [&] { return criterion10(suite); }},
  };

  int failures = 0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    Outcome outcome;
    try {
      outcome = criteria[j].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("criterion %zu (%s): %s — %s\n", j + 1, criteria[j].first.c_str(),
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
