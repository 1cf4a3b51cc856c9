#pragma once

#include <functional>

#include "lps/core.hpp"

namespace lps::hardy {

using LineFunction = std::function<Vec(double)>;

// Far-field envelope of a line function: ||g(x)|| <= amplitude/|x|^power for
// |x| >= onset. Rational test data always satisfies this with power >= 1.
struct DecayEnvelope {
  double amplitude = 1.0;
  int power = 1;
  double onset = 8.0;
};

struct CauchyOracleResult {
  Vec value;
  double tail_bound = 0.0;  // rigorous bound on the truncated-tail error
  double used_half_length = 0.0;
  double required_half_length = 0.0;
};

struct QuadratureOptions {
  double tolerance = 1e-9;    // target for the tail bound
  double core_width = 0.1;    // panel width on the core interval (poles >= 0.25 away)
  double core_radius = 8.0;   // half-length of the uniformly panelled core
  double max_half_length = 1e9;
};

// Direct numerical quadrature of (2 i pi)^{-1} \int g(lambda)/(lambda - z) dlambda
// over [-L, L], composite 16-point Gauss-Legendre on graded panels. Approximates
// (Q+ g)(z) for Im z > 0 and -(Q- g)(z) for Im z < 0. Used only as a
// cross-validation oracle for the coefficient-space path. Throws GridError with
// the required L when the tail bound cannot be met within max_half_length.
CauchyOracleResult cauchy_project_oracle(const LineFunction& g, int k_dim, Complex z,
                                         const DecayEnvelope& decay,
                                         const QuadratureOptions& opts = {});

// \int ||g(lambda)||^2 dlambda by the same panel rule (oracle for Parseval).
double line_squared_norm(const LineFunction& g, const DecayEnvelope& decay,
                         const QuadratureOptions& opts = {});

// \int ||g(lambda)||^2 dlambda for g evaluated along the horizontal line
// Im z = -y (used by the Paley-Wiener check).
double line_squared_norm_complex(const std::function<Vec(Complex)>& g, double y,
                                 const DecayEnvelope& decay,
                                 const QuadratureOptions& opts = {});

}  // namespace lps::hardy
