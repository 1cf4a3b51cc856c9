#include "doctest.h"
#include "lps/probes.hpp"
#include "lps/rational.hpp"

using namespace lps;

TEST_CASE("coefficient expansion agrees with pointwise values") {
  RationalFunction g(2);
  Vec r(2);
  r << Complex(1.0, 0.5), Complex(-0.3, 0.2);
  g.add_pole(Complex(0.6, -1.1), r);
  r << Complex(0.1, -0.7), Complex(0.9, 0.0);
  g.add_pole(Complex(-0.4, 1.6), r);

  const int n = 128;
  const SpectralFunction f = g.to_spectral(n);
  const SamplingGrid grid = SamplingGrid::for_truncation(n);
  const Mat samples = hardy::synthesize(f, grid);
  double worst = 0.0;
  for (int m = 0; m < grid.size(); m += 17)
    worst = std::max(worst, (samples.col(m) - g.eval(Complex(grid.node(m), 0))).norm());
  CHECK(worst < 1e-10);
}

TEST_CASE("lower poles populate only nonnegative coefficients") {
  RationalFunction g(1);
  Vec r(1);
  r(0) = 1.0;
  g.add_pole(Complex(0.2, -0.9), r);
  const SpectralFunction f = g.to_spectral(64);
  CHECK(f.minus_mass() == 0.0);
  CHECK(f.plus_mass() > 0.0);

  RationalFunction h(1);
  h.add_pole(Complex(0.2, 0.9), r);
  CHECK(h.to_spectral(64).plus_mass() == 0.0);
}

TEST_CASE("real poles are rejected") {
  RationalFunction g(1);
  Vec r(1);
  r(0) = 1.0;
  CHECK_THROWS_AS(g.add_pole(Complex(0.5, 0.0), r), DomainError);
}

TEST_CASE("pole products decay at the advertised rate") {
  probes::ProbeFactory factory(123);
  const RationalFunction g = factory.lower_pole_product(1, 4);
  // |g| ~ |z|^-4 far out: the ratio between |g| at 1e3 and 2e3 is ~ 2^-4.
  const double a = g.eval(Complex(1e3, 0)).norm();
  const double b = g.eval(Complex(2e3, 0)).norm();
  CHECK(a / b == doctest::Approx(16.0).epsilon(0.05));
  CHECK(g.min_pole_distance() >= 0.3);
}

TEST_CASE("probe factory is deterministic under a fixed seed") {
  probes::ProbeFactory a(99), b(99);
  const RationalFunction ga = a.two_sided(2);
  const RationalFunction gb = b.two_sided(2);
  REQUIRE(ga.poles().size() == gb.poles().size());
  for (std::size_t j = 0; j < ga.poles().size(); ++j) {
    CHECK(ga.poles()[j] == gb.poles()[j]);
    CHECK((ga.residues()[j] - gb.residues()[j]).norm() == 0.0);
  }
}
