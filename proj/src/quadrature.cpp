#include "lps/quadrature.hpp"

#include <cmath>
#include <vector>

namespace lps::hardy {

namespace {

// 16-point Gauss-Legendre on [-1, 1].
const double kGlNodes[16] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
    -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
    0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
    0.9894009349916499};
const double kGlWeights[16] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
    0.0271524594117541};

// Panel edges: uniform panels of width core_width over [-core_radius,
// core_radius], then geometrically growing panels out to +-L.
std::vector<double> panel_edges(double core_width, double core_radius, double half_length) {
  std::vector<double> right;
  double x = 0.0;
  while (x < core_radius - 1e-12) {
    x = std::min(x + core_width, core_radius);
    right.push_back(x);
  }
  double w = core_width;
  while (x < half_length - 1e-12) {
    w *= 1.6;
    x = std::min(x + w, half_length);
    right.push_back(x);
  }
  std::vector<double> edges;
  edges.reserve(2 * right.size() + 1);
  for (auto it = right.rbegin(); it != right.rend(); ++it) edges.push_back(-*it);
  edges.push_back(0.0);
  for (double e : right) edges.push_back(e);
  return edges;
}

double tail_bound(const DecayEnvelope& d, double half_length, double z_scale) {
  // |integrand| <= amplitude/|x|^p * 1/|x - z|; for |x| >= max(onset, 2|z|)
  // we have |x - z| >= |x|/2, so the two tails together are bounded by
  // (1/2pi) * 2 * amplitude * 2 / (p * L^p).
  const double L = std::max(half_length, std::max(d.onset, 2.0 * z_scale));
  return (2.0 * d.amplitude) / (kPi * d.power * std::pow(L, d.power));
}

double required_half_length(const DecayEnvelope& d, double tol, double z_scale) {
  const double L = std::pow(2.0 * d.amplitude / (kPi * d.power * tol), 1.0 / d.power);
  return std::max({L, d.onset, 2.0 * z_scale});
}

template <typename F>
Vec integrate_panels(const F& f, int k_dim, const std::vector<double>& edges) {
  Vec acc = Vec::Zero(k_dim);
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int q = 0; q < 16; ++q)
      acc += (half * kGlWeights[q]) * f(mid + half * kGlNodes[q]);
  }
  return acc;
}

}  // namespace

CauchyOracleResult cauchy_project_oracle(const LineFunction& g, int k_dim, Complex z,
                                         const DecayEnvelope& decay,
                                         const QuadratureOptions& opts) {
  if (z.imag() == 0.0) throw DomainError("cauchy oracle needs Im z != 0");
  CauchyOracleResult out;
  out.required_half_length = required_half_length(decay, opts.tolerance, std::abs(z));
  if (out.required_half_length > opts.max_half_length)
    throw GridError("cauchy oracle tail bound unreachable; required half-length " +
                    std::to_string(out.required_half_length));
  out.used_half_length = out.required_half_length;
  out.tail_bound = tail_bound(decay, out.used_half_length, std::abs(z));
  const auto edges = panel_edges(opts.core_width, opts.core_radius, out.used_half_length);
  const Complex prefactor = 1.0 / (2.0 * kI * kPi);
  out.value = integrate_panels(
      [&](double x) -> Vec { return (prefactor / (x - z)) * g(x); }, k_dim, edges);
  return out;
}

double line_squared_norm(const LineFunction& g, const DecayEnvelope& decay,
                         const QuadratureOptions& opts) {
  // ||g||^2 tail <= 2 amplitude^2 / ((2p-1) L^{2p-1})
  const DecayEnvelope sq{decay.amplitude * decay.amplitude, 2 * decay.power - 1,
                         decay.onset};
  const double L = required_half_length(sq, opts.tolerance * kPi, 0.0);
  const auto edges = panel_edges(opts.core_width, opts.core_radius, L);
  Vec acc = integrate_panels(
      [&](double x) -> Vec {
        Vec v(1);
        v(0) = g(x).squaredNorm();
        return v;
      },
      1, edges);
  return acc(0).real();
}

double line_squared_norm_complex(const std::function<Vec(Complex)>& g, double y,
                                 const DecayEnvelope& decay,
                                 const QuadratureOptions& opts) {
  const DecayEnvelope sq{decay.amplitude * decay.amplitude, 2 * decay.power - 1,
                         decay.onset};
  const double L = required_half_length(sq, opts.tolerance * kPi, y);
  const auto edges = panel_edges(opts.core_width, opts.core_radius, L);
  Vec acc = integrate_panels(
      [&](double x) -> Vec {
        Vec v(1);
        v(0) = g(Complex(x, -y)).squaredNorm();
        return v;
      },
      1, edges);
  return acc(0).real();
}

}  // namespace lps::hardy
