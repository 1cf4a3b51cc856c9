#pragma once

#include <vector>

#include "lps/lp_system.hpp"

namespace lps {

struct ResonanceSubspace {
  int dense_n = 0;
  int rank = 0;
  Mat basis;                  // orthonormal columns spanning range(R)
  double idempotency = 0.0;   // ||R^2 - R||
  double self_adjointness = 0.0;  // ||R - R*||
};

struct BoundCheck {
  Complex z;
  double value = 0.0;        // ||(S* f_{zeta,k})(z)||
  double global_bound = 0.0;  // ||k|| / |Im zeta|
  double local_bound = 0.0;   // ||k|| / |z - zeta|
  bool violated = false;
};

struct SurvivalVerdict {
  Complex zeta;
  Vec k;
  double residual = 0.0;  // ||Q+ (S* f_{zeta,k})|| / ||f_{zeta,k}||
  bool survives = false;
  std::vector<BoundCheck> bound_checks;  // populated when survives and S rational
  int bound_violations = 0;
};

struct PoleRecord {
  Complex zeta;                 // candidate resonance (lower-half pole of S)
  int multiplicity = 0;         // factor projection rank
  double worst_survival = 0.0;  // max survival residual over a range basis
  double eigen_residual = 0.0;  // max ||Z+(1) f - e^{-i zeta} f|| / ||f||
};

struct PoleCorrespondence {
  std::vector<PoleRecord> resonances;
  int total_multiplicity = 0;
  int resonance_rank = 0;  // rank of the densified R
  bool matched = false;
};

struct Prop9Report {
  Complex zeta;
  Vec k;
  bool hypothesis_holds = false;
  double worst_residue = 0.0;  // largest uncancelled lower-half residue norm
  std::vector<double> pw_integrals;  // at y in {0.1, 1, 10}
  double pw_constant = 0.0;          // ||k||^2 (2/eps + 2 eps / |Im zeta|^2)
  bool pw_bounded = false;
  double survival_residual = 0.0;
  bool survives = false;
};

// Z+(t) f = T+(t) S Q- S* f: the generalized semigroup in the outgoing
// representation. A semigroup exactly when D+ and D- commute.
SpectralFunction lp_semigroup_apply(const LPSystem& sys, const SpectralFunction& f, double t);

// max over probes of ||Z+(t1) Z+(t2) f - Z+(t1 + t2) f|| / ||f||.
double verify_semigroup_property(const LPSystem& sys,
                                 const std::vector<SpectralFunction>& probes, double t1,
                                 double t2);

// Densifies R = Q+ S Q- S*, checks it is an orthogonal projection, and
// extracts its rank and an orthonormal range basis. Throws DomainError when
// R fails the projection test (non-commuting system).
ResonanceSubspace resonance_projector(const LPSystem& sys,
                                      int dense_n = kDefaultDenseTruncation,
                                      double tol = 1e-6);

SurvivalVerdict survival_test(const LPSystem& sys, Complex zeta, const Vec& k,
                              double tol = 1e-4);

PoleCorrespondence pole_correspondence(const LPSystem& sys,
                                       int dense_n = kDefaultDenseTruncation);

Prop9Report prop9_sufficiency_check(const LPSystem& sys, Complex zeta, const Vec& k);

}  // namespace lps
