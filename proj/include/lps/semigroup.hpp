#pragma once

#include <vector>

#include "lps/spectral.hpp"

namespace lps::semigroups {

// Coefficients a_d of multiplication by e^{-it lambda} (t >= 0) in the
// rational basis: <phi_m, e^{-it lambda} phi_n> = a_{n-m}, zero for n < m.
// Closed form: a_0 = e^{-t}, a_d = -(2t/d) e^{-t} L^{(1)}_{d-1}(2t). These
// are exact continuum matrix elements; applying the (triangular Toeplitz)
// matrix to truncated data gives every coefficient in the window exactly.
std::vector<double> phase_symbol(double t, int length);

struct EvolveResult {
  SpectralFunction f;
  // || f ||^2 minus the in-window output mass: the exact squared mass pushed
  // beyond the truncation window by the phase (the evolution is unitary).
  double escaped_mass = 0.0;
};

// Coefficients of lambda -> e^{-it lambda} f(lambda), both time directions.
// envelope: |t| must not exceed it (the documented accuracy envelope).
EvolveResult reference_evolve(const SpectralFunction& f, double t,
                              double envelope = kTimeEnvelope);

// Characteristic semigroup T+(t) = Q+ e^{-itH0} restricted to H2+. Inputs with
// an H2- component are projected first (mass reported via projected_mass).
SpectralFunction characteristic_apply(const SpectralFunction& f, double t,
                                      double* projected_mass = nullptr);

// Its adjoint T+(t)^* = e^{itH0} restricted to H2+ (isometric).
SpectralFunction characteristic_adjoint_apply(const SpectralFunction& f, double t,
                                              double* projected_mass = nullptr);

struct ReproducingOptions {
  double min_imag = kMinPoleDistance;  // reject poles closer to the axis
  bool allow_near_axis = false;        // override with explicit accuracy warning
};

// f_{zeta,k}(z) = k/(z - zeta), Im zeta < 0: the eigenvector family of the
// characteristic semigroup, T+(t) f = e^{-it zeta} f.
SpectralFunction make_reproducing(Complex zeta, const Vec& k, int trunc_n,
                                  const ReproducingOptions& opts = {});

// Exact squared norm pi ||k||^2 / |Im zeta| of the continuum f_{zeta,k}.
double reproducing_squared_norm(Complex zeta, const Vec& k);

// || T+(t) f || for each listed time (t >= 0 each).
std::vector<double> decay_profile(const SpectralFunction& f, const std::vector<double>& times);

}  // namespace lps::semigroups
