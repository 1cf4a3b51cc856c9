#include "doctest.h"
#include "lps/probes.hpp"
#include "lps/quadrature.hpp"
#include "lps/semigroup.hpp"

using namespace lps;
using namespace lps::semigroups;

TEST_CASE("phase symbol matches its generating function") {
  // sum_d a_d(t) q^d = e^{-it zeta(q)} with zeta(q) = i (1 + q)/(q - 1),
  // an independent closed form for the whole coefficient family.
  const double t = 1.3;
  const auto a = phase_symbol(t, 4096);
  for (Complex q : {Complex(0.5, 0.0), Complex(-0.3, 0.4), Complex(0.0, -0.6)}) {
    Complex sum = 0.0, qp = 1.0;
    for (double ad : a) {
      sum += ad * qp;
      qp *= q;
    }
    const Complex zeta = kI * (1.0 + q) / (q - 1.0);
    CHECK(std::abs(sum - std::exp(-kI * t * zeta)) < 1e-12);
  }
}

TEST_CASE("phase symbol matches direct quadrature of the matrix elements") {
  // <phi_m, e^{-it lambda} phi_n> computed by line quadrature.
  const double t = 0.7;
  const auto a = phase_symbol(t, 64);
  auto phi = [](int n, double x) {
    const Complex lam(x, 0.0);
    return std::pow((lam - kI) / (lam + kI), n) / (kSqrtPi * (lam + kI));
  };
  for (auto [m, n] : {std::pair{0, 0}, {0, 3}, {2, 7}, {5, 5}}) {
    // plain composite Simpson; the integrand decays like 1/x^2
    Complex total = 0.0;
    const double half_length = 4000.0;
    const int steps = 400000;
    const double h = 2 * half_length / steps;
    for (int j = 0; j <= steps; ++j) {
      const double x = -half_length + j * h;
      const double w = (j == 0 || j == steps) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      total += w * std::conj(phi(m, x)) * std::exp(-kI * t * x) * phi(n, x);
    }
    total *= h / 3.0;
    const double expected = n >= m ? a[n - m] : 0.0;
    CHECK(std::abs(total - expected) < 2e-5);
  }
}

TEST_CASE("the semigroup is a left inverse of its adjoint") {
  probes::ProbeFactory factory(17);
  const SpectralFunction f = factory.lower_pole_product(1).to_spectral(256);
  // The roundtrip error is linear in the window-tail amplitude (the norm
  // deficit is quadratic, hence the much tighter isometry check elsewhere).
  const SpectralFunction round =
      characteristic_apply(characteristic_adjoint_apply(f, 1.0), 1.0);
  CHECK((round - f).norm() < 1e-4 * f.norm());
  CHECK(reference_evolve(f, 0.8).escaped_mass >= 0.0);
  CHECK_THROWS_AS(reference_evolve(f, 100.0), DomainError);
}

TEST_CASE("characteristic semigroup eigenvectors") {
  Vec k(1);
  k(0) = 1.0;
  const Complex zeta(0.7, -1.2);
  const SpectralFunction f = make_reproducing(zeta, k, 256);
  for (double t : {0.5, 2.0}) {
    const SpectralFunction tf = characteristic_apply(f, t);
    const Complex eig = std::exp(-kI * t * zeta);
    CHECK((tf - eig * f).norm() < 1e-8 * f.norm());
  }
  CHECK_THROWS_AS(characteristic_apply(f, -1.0), DomainError);
}

TEST_CASE("adjoint semigroup is isometric on fast-decaying data") {
  probes::ProbeFactory factory(18);
  const SpectralFunction f = factory.lower_pole_product(1).to_spectral(256);
  const SpectralFunction af = characteristic_adjoint_apply(f, 1.0);
  CHECK(std::abs(af.norm() - f.norm()) < 1e-8 * f.norm());
  // and the adjoint relation itself
  const SpectralFunction g = factory.lower_pole_product(1).to_spectral(256);
  const Complex lhs = characteristic_apply(f, 1.0).inner(g);
  const Complex rhs = f.inner(characteristic_adjoint_apply(g, 1.0));
  CHECK(std::abs(lhs - rhs) < 1e-8 * f.norm() * g.norm());
}

TEST_CASE("reproducing vectors carry the closed-form norm") {
  Vec k(2);
  k << Complex(0.6, 0.0), Complex(0.0, -0.8);
  const Complex zeta(-0.4, -0.9);
  const SpectralFunction f = make_reproducing(zeta, k, 512);
  CHECK(f.squared_norm() ==
        doctest::Approx(reproducing_squared_norm(zeta, k)).epsilon(1e-10));
  CHECK_THROWS_AS(make_reproducing(Complex(0, 1), k, 64), DomainError);
  CHECK_THROWS_AS(make_reproducing(Complex(0, -0.01), k, 64), DomainError);
  ReproducingOptions opts;
  opts.allow_near_axis = true;
  opts.min_imag = 0.0;
  CHECK_NOTHROW(make_reproducing(Complex(0, -0.01), k, 64, opts));
}

TEST_CASE("decay ladder is strictly decreasing") {
  probes::ProbeFactory factory(19);
  const SpectralFunction f = factory.lower_pole_product(1).to_spectral(128);
  const auto ladder = decay_profile(f, {0.0, 0.5, 1.0, 2.0, 4.0});
  for (std::size_t j = 1; j < ladder.size(); ++j) CHECK(ladder[j] < ladder[j - 1]);
}
