#include "doctest.h"
#include "lps/lp_semigroup.hpp"
#include "lps/probes.hpp"

using namespace lps;

namespace {

LPSystem inner_system(Complex mu, int n = 256) {
  ScatteringMatrix s(1);
  s.push_factor(Factor::blaschke_scalar(Factor::Kind::inner, mu));
  return LPSystem(s, n);
}

Vec e1() {
  Vec k(1);
  k(0) = 1.0;
  return k;
}

}  // namespace

TEST_CASE("the generalized semigroup has the mirrored zero as eigenvalue") {
  const LPSystem sys = inner_system(Complex(0, 1));
  const SpectralFunction f = semigroups::make_reproducing(Complex(0, -1), e1(), 256);
  for (double t : {0.5, 1.0, 4.0}) {
    const SpectralFunction zf = lp_semigroup_apply(sys, f, t);
    CHECK((zf - std::exp(Complex(-t, 0)) * f).norm() < 1e-8 * f.norm());
  }
  CHECK_THROWS_AS(lp_semigroup_apply(sys, f, -0.5), DomainError);
}

TEST_CASE("the semigroup annihilates the image of the scattering matrix") {
  const LPSystem sys = inner_system(Complex(1, 1));
  probes::ProbeFactory factory(51);
  const SpectralFunction g = factory.lower_pole_product(1).to_spectral(256);
  const SpectralFunction sg = sys.apply_s(g);
  CHECK(lp_semigroup_apply(sys, sg, 1.0).norm() < 1e-9 * g.norm());
  // t = 0 gives the projector itself
  const SpectralFunction rf = lp_semigroup_apply(sys, g, 0.0);
  const SpectralFunction rrf = lp_semigroup_apply(sys, rf, 0.0);
  CHECK((rrf - rf).norm() < 1e-9 * g.norm());
}

TEST_CASE("semigroup property holds for commuting symbols and fails for the phase") {
  probes::ProbeFactory factory(52);
  std::vector<SpectralFunction> probes;
  for (int j = 0; j < 3; ++j)
    probes.push_back(factory.lower_pole_product(1).to_spectral(256));
  CHECK(verify_semigroup_property(inner_system(Complex(0, 1)), probes, 0.5, 0.7) < 1e-8);

  ScatteringMatrix phase(1);
  phase.set_phase_amplitude(3.0);
  const LPSystem phase_sys(phase, 256);
  SpectralFunction witness = semigroups::make_reproducing(Complex(0, -1), e1(), 256);
  CHECK(verify_semigroup_property(phase_sys, {witness}, 0.5, 0.7) > 1e-2);
  CHECK(verify_semigroup_property(phase_sys, {witness}, 1.0, 2.0) > 1e-2);
}

TEST_CASE("resonance projector rank equals the Blaschke degree") {
  CHECK(resonance_projector(inner_system(Complex(0, 1)), 96).rank == 1);

  ScatteringMatrix triple(1);
  triple.push_factor(Factor::blaschke_scalar(Factor::Kind::inner, Complex(0, 1)));
  triple.push_factor(Factor::blaschke_scalar(Factor::Kind::inner, Complex(1, 1)));
  triple.push_factor(Factor::blaschke_scalar(Factor::Kind::inner, Complex(-1, 1)));
  CHECK(resonance_projector(LPSystem(triple, 256), 96).rank == 3);

  Mat u(1, 1);
  u(0, 0) = Complex(0, 1);
  ScatteringMatrix constant(1);
  constant.push_factor(Factor::constant(u));
  CHECK(resonance_projector(LPSystem(constant, 128), 64).rank == 0);

  ScatteringMatrix phase(1);
  phase.set_phase_amplitude(3.0);
  CHECK_THROWS_AS(resonance_projector(LPSystem(phase, 256), 96), DomainError);
}

TEST_CASE("survival is exactly at the mirrored zero") {
  const LPSystem sys = inner_system(Complex(0, 1));
  const SurvivalVerdict hit = survival_test(sys, Complex(0, -1), e1());
  CHECK(hit.survives);
  CHECK(hit.residual < 1e-10);
  CHECK(hit.bound_violations == 0);
  CHECK(!hit.bound_checks.empty());

  const SurvivalVerdict miss = survival_test(sys, Complex(0, -2), e1());
  CHECK(!miss.survives);
  CHECK(miss.residual > 1e-3);
}

TEST_CASE("a direction outside the factor range does not survive") {
  Mat p = Mat::Zero(2, 2);
  p(0, 0) = 1.0;
  ScatteringMatrix s(2);
  s.push_factor(Factor::blaschke(Factor::Kind::inner, Complex(0, 1), p));
  const LPSystem sys(s, 256);
  Vec k2 = Vec::Zero(2);
  k2(1) = 1.0;
  const SurvivalVerdict v = survival_test(sys, Complex(0, -1), k2);
  CHECK(!v.survives);
  CHECK(v.residual > 0.5);
}

TEST_CASE("pole correspondence composes the oracles") {
  ScatteringMatrix s(1);
  s.push_factor(Factor::blaschke_scalar(Factor::Kind::inner, Complex(1, 1)));
  s.push_factor(Factor::blaschke_scalar(Factor::Kind::inner, Complex(-1, 1)));
  const PoleCorrespondence corr = pole_correspondence(LPSystem(s, 256), 96);
  CHECK(corr.matched);
  CHECK(corr.total_multiplicity == 2);
  CHECK(corr.resonance_rank == 2);
  REQUIRE(corr.resonances.size() == 2);
  for (const auto& r : corr.resonances) {
    CHECK(r.worst_survival < 1e-6);
    CHECK(r.eigen_residual < 1e-6);
  }
}

TEST_CASE("sufficiency hypothesis separates survivors from decoys") {
  const LPSystem sys = inner_system(Complex(0, 1));
  const Prop9Report good = prop9_sufficiency_check(sys, Complex(0, -1), e1());
  CHECK(good.hypothesis_holds);
  CHECK(good.survives);
  CHECK(good.pw_bounded);
  REQUIRE(good.pw_integrals.size() == 3);
  for (double v : good.pw_integrals) CHECK(v <= good.pw_constant);

  const Prop9Report bad = prop9_sufficiency_check(sys, Complex(0, -2), e1());
  CHECK(!bad.hypothesis_holds);
  CHECK(bad.worst_residue > 1e-3);
  CHECK(!bad.survives);
}

TEST_CASE("constant unitaries never satisfy the hypothesis or survive") {
  Mat u(1, 1);
  u(0, 0) = Complex(0.6, 0.8);
  ScatteringMatrix s(1);
  s.push_factor(Factor::constant(u));
  const LPSystem sys(s, 128);
  const Prop9Report rep = prop9_sufficiency_check(sys, Complex(0, -1), e1());
  CHECK(!rep.hypothesis_holds);
  CHECK(!rep.survives);
  CHECK(rep.survival_residual == doctest::Approx(1.0).epsilon(1e-9));
}
