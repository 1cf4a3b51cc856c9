#pragma once

#include <vector>

#include "lps/scattering.hpp"
#include "lps/semigroup.hpp"
#include "lps/spectral.hpp"

namespace lps {

// Truncation used when operators are densified for eigendecomposition. Small
// enough that a handful of dense eigensolves stays interactive; the closures
// themselves run at the scenario truncation.
inline constexpr int kDefaultDenseTruncation = 256;

enum class CommutationVerdict { commuting, non_commuting, inconclusive };

struct CommutationReport {
  double residual = 0.0;  // max over probes of ||(D+D- - D-D+)f|| / ||f||
  CommutationVerdict verdict = CommutationVerdict::inconclusive;
};

// Dense realization of the projection algebra built from A = Q+ S* Q-:
// V = A + A*, P = V^2, E = (P + V)/2, F = (P - V)/2. In commuting scenarios
// E and F are orthogonal projections with EF = 0 and the spectrum of V sits
// in {-1, 0, +1}.
struct ProjectionAlgebra {
  int dense_n = 0;
  Mat a, v, p, e, f;
  RealVec v_eigenvalues;        // ascending
  double spectrum_residual = 0.0;  // max distance of spec(V) to {-1,0,+1}
  double a_partial_isometry = 0.0;  // ||A A* A - A||
  double e_projection = 0.0;        // ||E^2 - E||
  double f_projection = 0.0;        // ||F^2 - F||
  double ef_cross = 0.0;            // ||E F||
  double b_idempotent = 0.0;        // ||B^2 - B||, B = Q+ S* Q- S
  int rank_e = 0;
  int rank_f = 0;
};

struct IsometryReport {
  double gram = 0.0;       // max ||(J*J - 1)f|| / ||f||
  double overlap = 0.0;    // max ||D+ D- f|| / ||f||
  double cross = 0.0;      // max ||Q- S Q+ f|| / ||f||
  bool jointly_small = false;
  bool jointly_large = false;
  bool consistent = false;  // small or large together
};

// The system in the outgoing spectral representation: the reference dynamics
// is multiplication by e^{-it lambda}, the outgoing projection is D+ = Q-,
// the incoming one is D- = S Q+ S*, and the identification operator is
// J = Q- + S Q+. Operators act as closures on coefficient data at the
// system truncation; scattering applications are compressed back to that
// truncation (the dropped mass is geometrically small for the probe family).
class LPSystem {
 public:
  LPSystem(ScatteringMatrix s, int trunc_n = kDefaultTruncation,
           int grid_factor = kDefaultGridFactor);

  const ScatteringMatrix& scattering() const { return s_; }
  const ScatteringMatrix& scattering_adjoint() const { return s_adj_; }
  int trunc_n() const { return trunc_n_; }
  const SamplingGrid& grid() const { return grid_; }

  SpectralFunction apply_s(const SpectralFunction& f) const;
  SpectralFunction apply_s_adjoint(const SpectralFunction& f) const;

  SpectralFunction d_plus(const SpectralFunction& f) const;   // Q- f
  SpectralFunction d_minus(const SpectralFunction& f) const;  // S Q+ S* f

  SpectralFunction identification_apply(const SpectralFunction& f) const;
  SpectralFunction identification_adjoint_apply(const SpectralFunction& f) const;

  // (J*J - 1) f = Q+ S* Q- f + Q- S Q+ f.
  SpectralFunction gram_defect(const SpectralFunction& f) const;

  // (J J* - (Q- + S Q+ S*)) f; an identity for every pointwise-unitary S,
  // so the residual measures pure discretization error.
  SpectralFunction jjstar_defect(const SpectralFunction& f) const;

  CommutationReport check_commutation(const std::vector<SpectralFunction>& probes,
                                      double small_tol = 1e-6,
                                      double large_tol = 1e-2) const;

  // Densifies the algebra on the 2 * dense_n * k_dim coefficient space.
  ProjectionAlgebra theorem1_decompose(int dense_n = kDefaultDenseTruncation) const;

  // ||(J*J - 1) e^{-it H0} f|| for each listed t (both signs allowed).
  std::vector<double> asymptotic_equivalence_profile(const SpectralFunction& f,
                                                     const std::vector<double>& times) const;

  IsometryReport check_isometry_equivalences(const std::vector<SpectralFunction>& probes,
                                             double small_tol = 1e-6,
                                             double large_tol = 1e-2) const;

  // Applies an operator closure to every coordinate vector at truncation
  // dense_n; the workhorse behind theorem1_decompose and the resonance
  // projector.
  template <typename Op>
  Mat densify(Op&& op, int dense_n) const {
    const int dim = 2 * dense_n * s_.k_dim();
    Mat m(dim, dim);
    SpectralFunction basis(s_.k_dim(), dense_n);
    for (int col = 0; col < dim; ++col) {
      basis.coeffs().setZero();
      basis.coeffs()(col % s_.k_dim(), col / s_.k_dim()) = 1.0;
      m.col(col) = flatten(op(basis), dense_n);
    }
    return m;
  }

  Vec flatten(const SpectralFunction& f, int dense_n) const;

 private:
  ScatteringMatrix s_;
  ScatteringMatrix s_adj_;
  int trunc_n_;
  int grid_factor_;
  SamplingGrid grid_;
};

}  // namespace lps
