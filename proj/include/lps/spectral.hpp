#pragma once

#include <vector>

#include "lps/core.hpp"

namespace lps {

// Sign selecting one of the two Hardy projections: plus projects onto the
// boundary space of the upper half-plane (basis indices n >= 0), minus onto
// that of the lower half-plane (n < 0).
enum class HardySign { plus, minus };

// Offset uniform circle grid w_m = exp(2 pi i (m + 1/2)/M) mapped to the real
// line through the inverse Cayley transform. The half-step offset keeps every
// node away from w = 1 (the image of infinity).
class SamplingGrid {
 public:
  explicit SamplingGrid(int m_samples);
  static SamplingGrid for_truncation(int trunc_n, int grid_factor = kDefaultGridFactor);

  int size() const { return m_samples_; }
  double node(int m) const { return nodes_[m]; }
  Complex circle_node(int m) const { return circle_[m]; }
  const std::vector<double>& nodes() const { return nodes_; }

  // Anti-aliasing rule: M >= 4N.
  bool resolves(int trunc_n) const { return m_samples_ >= 4 * trunc_n; }

 private:
  int m_samples_;
  std::vector<Complex> circle_;
  std::vector<double> nodes_;
};

// A vector-valued element of the discretized L^2(R, K), stored as
// coefficients in the rational orthonormal basis
//   phi_n(lambda) = pi^{-1/2} (lambda - i)^n / (lambda + i)^{n+1},
// n = -N .. N-1. Column j of the coefficient matrix holds the K-vector for
// n = j - N. Membership in the Hardy spaces is an exact coefficient-support
// condition: H2+ <=> support in n >= 0, H2- <=> support in n < 0.
class SpectralFunction {
 public:
  SpectralFunction(int k_dim, int trunc_n);

  int k_dim() const { return k_dim_; }
  int trunc_n() const { return trunc_n_; }

  Vec coeff(int n) const { return coeffs_.col(col(n)); }
  void set_coeff(int n, const Vec& v) { coeffs_.col(col(n)) = v; }
  Complex scalar_coeff(int n) const { return coeffs_(0, col(n)); }

  const Mat& coeffs() const { return coeffs_; }
  Mat& coeffs() { return coeffs_; }

  double squared_norm() const { return coeffs_.squaredNorm(); }
  double norm() const { return coeffs_.norm(); }
  // Conjugate-linear in *this* (the first slot), matching (f, g) = ∫ (f, g)_K.
  Complex inner(const SpectralFunction& g) const;

  double plus_mass() const;   // squared norm of the n >= 0 part
  double minus_mass() const;  // squared norm of the n < 0 part

  // Re-truncation. Enlarging pads with zeros; shrinking drops tail mass
  // (returned through dropped_mass when non-null).
  SpectralFunction resized(int new_trunc_n, double* dropped_mass = nullptr) const;

  SpectralFunction& operator+=(const SpectralFunction& g);
  SpectralFunction& operator-=(const SpectralFunction& g);
  SpectralFunction& operator*=(Complex a);
  friend SpectralFunction operator+(SpectralFunction f, const SpectralFunction& g) { return f += g; }
  friend SpectralFunction operator-(SpectralFunction f, const SpectralFunction& g) { return f -= g; }
  friend SpectralFunction operator*(Complex a, SpectralFunction f) { return f *= a; }

 private:
  int col(int n) const;
  int k_dim_;
  int trunc_n_;
  Mat coeffs_;  // k_dim x 2N
};

namespace hardy {

struct AnalysisResult {
  SpectralFunction f;
  // Squared mass of circle-harmonic content falling outside the truncation
  // window [-N, N); zero up to roundoff for representable inputs.
  double alias_mass = 0.0;
};

// Samples f(lambda_m) as the columns of a k_dim x M matrix, computed with a
// fast circle transform of the coefficient sequence.
Mat synthesize(const SpectralFunction& f, const SamplingGrid& grid);

// Left inverse of synthesize on truncation-N data (exact up to roundoff).
AnalysisResult analyze(const Mat& samples, const SamplingGrid& grid, int trunc_n);

// Exact coordinate truncation: zeroes n < 0 (plus) or n >= 0 (minus).
SpectralFunction hardy_project(const SpectralFunction& f, HardySign sign);

// (Q+ f)(z) for Im z > 0, from the coefficient representation.
Vec evaluate_upper(const SpectralFunction& f, Complex z);
// (Q- f)(z) for Im z < 0.
Vec evaluate_lower(const SpectralFunction& f, Complex z);

}  // namespace hardy

}  // namespace lps
