#include "lps/lp_system.hpp"

#include <algorithm>
#include <cmath>

namespace lps {

LPSystem::LPSystem(ScatteringMatrix s, int trunc_n, int grid_factor)
    : s_(std::move(s)),
      s_adj_(s_.adjoint()),
      trunc_n_(trunc_n),
      grid_factor_(grid_factor),
      grid_(SamplingGrid::for_truncation(trunc_n + s_.blaschke_count(), grid_factor)) {
  if (trunc_n < 2) throw DomainError("truncation too small");
}

SpectralFunction LPSystem::apply_s(const SpectralFunction& f) const {
  return apply_scattering(s_, f, grid_).resized(trunc_n_);
}

SpectralFunction LPSystem::apply_s_adjoint(const SpectralFunction& f) const {
  return apply_scattering(s_adj_, f, grid_).resized(trunc_n_);
}

SpectralFunction LPSystem::d_plus(const SpectralFunction& f) const {
  return hardy::hardy_project(f, HardySign::minus);
}

SpectralFunction LPSystem::d_minus(const SpectralFunction& f) const {
  return apply_s(hardy::hardy_project(apply_s_adjoint(f), HardySign::plus));
}

SpectralFunction LPSystem::identification_apply(const SpectralFunction& f) const {
  return hardy::hardy_project(f, HardySign::minus) +
         apply_s(hardy::hardy_project(f, HardySign::plus));
}

SpectralFunction LPSystem::identification_adjoint_apply(const SpectralFunction& f) const {
  return hardy::hardy_project(f, HardySign::minus) +
         hardy::hardy_project(apply_s_adjoint(f), HardySign::plus);
}

SpectralFunction LPSystem::gram_defect(const SpectralFunction& f) const {
  SpectralFunction a = hardy::hardy_project(
      apply_s_adjoint(hardy::hardy_project(f, HardySign::minus)), HardySign::plus);
  SpectralFunction b = hardy::hardy_project(
      apply_s(hardy::hardy_project(f, HardySign::plus)), HardySign::minus);
  return a + b;
}

SpectralFunction LPSystem::jjstar_defect(const SpectralFunction& f) const {
  return identification_apply(identification_adjoint_apply(f)) -
         (hardy::hardy_project(f, HardySign::minus) + d_minus(f));
}

CommutationReport LPSystem::check_commutation(const std::vector<SpectralFunction>& probes,
                                              double small_tol, double large_tol) const {
  CommutationReport rep;
  for (const auto& f : probes) {
    const SpectralFunction diff = d_plus(d_minus(f)) - d_minus(d_plus(f));
    rep.residual = std::max(rep.residual, diff.norm() / f.norm());
  }
  if (rep.residual <= small_tol)
    rep.verdict = CommutationVerdict::commuting;
  else if (rep.residual >= large_tol)
    rep.verdict = CommutationVerdict::non_commuting;
  else
    rep.verdict = CommutationVerdict::inconclusive;
  return rep;
}

Vec LPSystem::flatten(const SpectralFunction& f, int dense_n) const {
  const SpectralFunction g = f.trunc_n() == dense_n ? f : f.resized(dense_n);
  const int k = g.k_dim();
  Vec out(2 * dense_n * k);
  for (int j = 0; j < 2 * dense_n; ++j) out.segment(j * k, k) = g.coeffs().col(j);
  return out;
}

ProjectionAlgebra LPSystem::theorem1_decompose(int dense_n) const {
  // Rebuild the closures at the densification truncation so the dense matrix
  // is the operator on exactly the space it is indexed by.
  const LPSystem small(s_, dense_n, grid_factor_);
  ProjectionAlgebra out;
  out.dense_n = dense_n;
  out.a = small.densify(
      [&small](const SpectralFunction& f) {
        return hardy::hardy_project(
            small.apply_s_adjoint(hardy::hardy_project(f, HardySign::minus)),
            HardySign::plus);
      },
      dense_n);
  out.v = out.a + out.a.adjoint();
  out.p = out.v * out.v;
  out.e = 0.5 * (out.p + out.v);
  out.f = 0.5 * (out.p - out.v);

  Eigen::SelfAdjointEigenSolver<Mat> es(out.v);
  out.v_eigenvalues = es.eigenvalues();
  for (int j = 0; j < out.v_eigenvalues.size(); ++j) {
    const double x = out.v_eigenvalues(j);
    const double d = std::min({std::abs(x + 1.0), std::abs(x), std::abs(x - 1.0)});
    out.spectrum_residual = std::max(out.spectrum_residual, d);
    if (x > 0.5) ++out.rank_e;
    if (x < -0.5) ++out.rank_f;
  }
  out.a_partial_isometry = (out.a * out.a.adjoint() * out.a - out.a).norm();
  out.e_projection = (out.e * out.e - out.e).norm();
  out.f_projection = (out.f * out.f - out.f).norm();
  out.ef_cross = (out.e * out.f).norm();

  const Mat b = small.densify(
      [&small](const SpectralFunction& f) {
        return hardy::hardy_project(
            small.apply_s_adjoint(hardy::hardy_project(small.apply_s(f), HardySign::minus)),
            HardySign::plus);
      },
      dense_n);
  out.b_idempotent = (b * b - b).norm();
  return out;
}

std::vector<double> LPSystem::asymptotic_equivalence_profile(
    const SpectralFunction& f, const std::vector<double>& times) const {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times)
    out.push_back(gram_defect(semigroups::reference_evolve(f, t).f).norm());
  return out;
}

IsometryReport LPSystem::check_isometry_equivalences(
    const std::vector<SpectralFunction>& probes, double small_tol, double large_tol) const {
  IsometryReport rep;
  for (const auto& f : probes) {
    const double n = f.norm();
    rep.gram = std::max(rep.gram, gram_defect(f).norm() / n);
    rep.overlap = std::max(rep.overlap, d_plus(d_minus(f)).norm() / n);
    rep.cross = std::max(
        rep.cross,
        hardy::hardy_project(apply_s(hardy::hardy_project(f, HardySign::plus)),
                             HardySign::minus)
                .norm() /
            n);
  }
  rep.jointly_small =
      rep.gram <= small_tol && rep.overlap <= small_tol && rep.cross <= small_tol;
  rep.jointly_large =
      rep.gram >= large_tol && rep.overlap >= large_tol && rep.cross >= large_tol;
  rep.consistent = rep.jointly_small || rep.jointly_large;
  return rep;
}

}  // namespace lps
