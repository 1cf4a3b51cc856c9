#pragma once

#include <optional>
#include <vector>

#include "lps/spectral.hpp"

namespace lps {

// One multiplicative factor of a scattering matrix. Blaschke-Potapov factors
//   B(z) = (1 - P) + b(z) P,  b(z) = (z - mu)/(z - conj(mu))  (inner)
// with Im mu > 0 and P an orthogonal projection; anti-inner factors use the
// reciprocal b. Constant unitaries are carried as factors of their own so
// that adjoints keep the factor order exact for dim K > 1.
struct Factor {
  enum class Kind { unitary, inner, anti_inner };
  Kind kind = Kind::unitary;
  Complex mu{0.0, 1.0};
  Mat matrix;  // the unitary, or the projection P

  static Factor constant(const Mat& unitary);
  static Factor blaschke(Kind kind, Complex mu, const Mat& proj);
  static Factor blaschke_scalar(Kind kind, Complex mu);  // dim K = 1, P = 1

  Mat eval(Complex z) const;
  Factor adjoint() const;
  int rank() const;  // rank of P, 0 for a constant unitary
};

struct PoleEntry {
  Complex pole;
  int rank;
};

struct PoleSet {
  std::vector<PoleEntry> lower;  // resonance candidates (from inner factors)
  std::vector<PoleEntry> upper;  // from anti-inner factors; not resonances
};

// Pointwise-unitary matrix function S(lambda): an ordered product of factors
// times an optional smooth scalar phase exp(i a/(1 + lambda^2)).
class ScatteringMatrix {
 public:
  explicit ScatteringMatrix(int k_dim);

  ScatteringMatrix& push_factor(const Factor& f);
  ScatteringMatrix& set_phase_amplitude(double amplitude);

  int k_dim() const { return k_dim_; }
  bool rational() const { return !phase_amplitude_.has_value(); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::optional<double> phase_amplitude() const { return phase_amplitude_; }
  int blaschke_count() const;
  int blaschke_degree() const;  // sum of inner-factor ranks
  bool inner_only() const;

  // Matrix value at z; throws PoleError at a factor pole or at z = +-i for
  // a phase-carrying S (essential singularity of the continuation).
  Mat eval(Complex z) const;

  ScatteringMatrix adjoint() const;

  // Poles of the rational continuation, multiplicity-merged (1e-12 radius).
  PoleSet pole_set() const;

  double unitarity_residual(const SamplingGrid& grid) const;

 private:
  int k_dim_;
  std::vector<Factor> factors_;
  std::optional<double> phase_amplitude_;
};

struct ApplyDiagnostics {
  double alias_mass = 0.0;  // squared mass outside the output window
};

// Coefficients of lambda -> S(lambda) f(lambda). The output truncation is
// expanded by the Blaschke factor count; the grid must resolve the expanded
// truncation. Norm-preserving up to the reported aliasing mass.
SpectralFunction apply_scattering(const ScatteringMatrix& s, const SpectralFunction& f,
                                  const SamplingGrid& grid,
                                  ApplyDiagnostics* diag = nullptr);

}  // namespace lps
