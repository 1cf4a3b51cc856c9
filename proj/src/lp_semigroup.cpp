#include "lps/lp_semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "lps/quadrature.hpp"

namespace lps {

namespace {

SpectralFunction incoming_projection(const LPSystem& sys, const SpectralFunction& f) {
  return sys.apply_s(
      hardy::hardy_project(sys.apply_s_adjoint(f), HardySign::minus));
}

// Orthonormal basis of a projection's range (eigenvalues clustered at 1).
Mat projection_range(const Mat& p) {
  Eigen::SelfAdjointEigenSolver<Mat> es(p);
  int rank = 0;
  for (int j = 0; j < es.eigenvalues().size(); ++j)
    if (es.eigenvalues()(j) > 0.5) ++rank;
  return es.eigenvectors().rightCols(rank);
}

}  // namespace

SpectralFunction lp_semigroup_apply(const LPSystem& sys, const SpectralFunction& f,
                                    double t) {
  if (t < 0.0) throw DomainError("the generalized semigroup needs t >= 0");
  return semigroups::characteristic_apply(incoming_projection(sys, f), t);
}

double verify_semigroup_property(const LPSystem& sys,
                                 const std::vector<SpectralFunction>& probes, double t1,
                                 double t2) {
  double worst = 0.0;
  for (const auto& f : probes) {
    const SpectralFunction lhs = lp_semigroup_apply(sys, lp_semigroup_apply(sys, f, t2), t1);
    const SpectralFunction rhs = lp_semigroup_apply(sys, f, t1 + t2);
    worst = std::max(worst, (lhs - rhs).norm() / f.norm());
  }
  return worst;
}

ResonanceSubspace resonance_projector(const LPSystem& sys, int dense_n, double tol) {
  const LPSystem small(sys.scattering(), dense_n, 4);
  const Mat r = small.densify(
      [&small](const SpectralFunction& f) {
        return hardy::hardy_project(incoming_projection(small, f), HardySign::plus);
      },
      dense_n);
  ResonanceSubspace out;
  out.dense_n = dense_n;
  out.idempotency = (r * r - r).norm();
  out.self_adjointness = (r - r.adjoint()).norm();
  if (out.idempotency > tol || out.self_adjointness > tol)
    throw DomainError("resonance projector is not an orthogonal projection (residual " +
                      std::to_string(std::max(out.idempotency, out.self_adjointness)) +
                      "); the incoming and outgoing projections do not commute");
  const Mat sym = 0.5 * (r + Mat(r.adjoint()));
  out.basis = projection_range(sym);
  out.rank = static_cast<int>(out.basis.cols());
  return out;
}

SurvivalVerdict survival_test(const LPSystem& sys, Complex zeta, const Vec& k, double tol) {
  SurvivalVerdict out;
  out.zeta = zeta;
  out.k = k;
  if (sys.scattering().rational()) {
    for (const auto& entry : sys.scattering_adjoint().pole_set().lower)
      if (std::abs(zeta - entry.pole) < 1e-8)
        throw PoleError("candidate eigenvalue sits on a pole of the adjoint continuation",
                        entry.pole);
  }
  const SpectralFunction f = semigroups::make_reproducing(zeta, k, sys.trunc_n());
  const SpectralFunction g = sys.apply_s_adjoint(f);
  out.residual = std::sqrt(std::max(0.0, g.plus_mass())) / f.norm();
  out.survives = out.residual <= tol;

  if (out.survives && sys.scattering().rational()) {
    const auto& s_adj = sys.scattering_adjoint();
    std::vector<Complex> excluded{zeta};
    for (const auto& entry : s_adj.pole_set().lower) excluded.push_back(entry.pole);
    const double knorm = k.norm();
    for (double y : {0.05, 0.1, 0.25, 0.6, 1.5, 4.0, 10.0}) {
      for (double x : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
        const Complex z(x, -y);
        bool skip = false;
        for (Complex p : excluded)
          if (std::abs(z - p) < 0.05) skip = true;
        if (skip) continue;
        BoundCheck c;
        c.z = z;
        c.value = (s_adj.eval(z) * k / (z - zeta)).norm();
        c.global_bound = knorm / std::abs(zeta.imag());
        c.local_bound = knorm / std::abs(z - zeta);
        c.violated = c.value > (1.0 + 1e-9) * std::min(c.global_bound, c.local_bound);
        if (c.violated) ++out.bound_violations;
        out.bound_checks.push_back(c);
      }
    }
  }
  return out;
}

PoleCorrespondence pole_correspondence(const LPSystem& sys, int dense_n) {
  const auto& s = sys.scattering();
  if (!s.rational() || !s.inner_only())
    throw DomainError("pole correspondence applies to inner-only rational scattering");
  PoleCorrespondence out;
  for (const auto& entry : s.pole_set().lower) {
    PoleRecord rec;
    rec.zeta = entry.pole;
    rec.multiplicity = entry.rank;
    for (const auto& factor : s.factors()) {
      if (factor.kind != Factor::Kind::inner) continue;
      if (std::abs(std::conj(factor.mu) - entry.pole) > 1e-9) continue;
      const Mat basis = projection_range(factor.matrix);
      for (int j = 0; j < basis.cols(); ++j) {
        const Vec k = basis.col(j);
        rec.worst_survival = std::max(rec.worst_survival, survival_test(sys, rec.zeta, k).residual);
        const SpectralFunction f = semigroups::make_reproducing(rec.zeta, k, sys.trunc_n());
        const SpectralFunction evolved = lp_semigroup_apply(sys, f, 1.0);
        const Complex eig = std::exp(-kI * rec.zeta);
        rec.eigen_residual =
            std::max(rec.eigen_residual, (evolved - eig * f).norm() / f.norm());
      }
    }
    out.total_multiplicity += rec.multiplicity;
    out.resonances.push_back(rec);
  }
  out.resonance_rank = resonance_projector(sys, dense_n).rank;
  out.matched = out.resonance_rank == out.total_multiplicity;
  return out;
}

Prop9Report prop9_sufficiency_check(const LPSystem& sys, Complex zeta, const Vec& k) {
  const auto& s = sys.scattering();
  if (!s.rational())
    throw DomainError("the sufficiency check needs a rational scattering matrix");
  Prop9Report out;
  out.zeta = zeta;
  out.k = k;

  const auto& s_adj = sys.scattering_adjoint();
  const auto g = [&s_adj, &k, zeta](Complex z) -> Vec {
    return s_adj.eval(z) * k / (z - zeta);
  };

  // Candidate lower-half singularities of S* f: the adjoint's own poles and
  // the kernel pole at zeta. Residues by a small trapezoid contour.
  std::vector<Complex> candidates{zeta};
  for (const auto& entry : s_adj.pole_set().lower) candidates.push_back(entry.pole);
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    double radius = 0.02;
    for (std::size_t l = 0; l < candidates.size(); ++l)
      if (l != j)
        radius = std::min(radius, 0.4 * std::abs(candidates[j] - candidates[l]));
    const int n_nodes = 32;
    Vec residue = Vec::Zero(k.size());
    for (int m = 0; m < n_nodes; ++m) {
      const Complex e = std::exp(kI * (2.0 * kPi * (m + 0.5) / n_nodes));
      residue += g(candidates[j] + radius * e) * (radius * e);
    }
    residue /= static_cast<double>(n_nodes);
    out.worst_residue = std::max(out.worst_residue, residue.norm());
  }
  out.hypothesis_holds = out.worst_residue <= 1e-8 * k.norm();

  const double im = std::abs(zeta.imag());
  const double eps = im / 2.0;
  out.pw_constant = k.squaredNorm() * (2.0 / eps + 2.0 * eps / (im * im));
  if (out.hypothesis_holds) {
    hardy::DecayEnvelope decay{2.0 * k.norm(), 1, std::max(8.0, 2.0 * std::abs(zeta))};
    hardy::QuadratureOptions opts;
    opts.tolerance = 1e-6;
    out.pw_bounded = true;
    for (double y : {0.1, 1.0, 10.0}) {
      const double integral = hardy::line_squared_norm_complex(g, y, decay, opts);
      out.pw_integrals.push_back(integral);
      if (integral > (1.0 + 1e-6) * out.pw_constant) out.pw_bounded = false;
    }
  }

  const SurvivalVerdict verdict = survival_test(sys, zeta, k);
  out.survival_residual = verdict.residual;
  out.survives = verdict.survives;
  return out;
}

}  // namespace lps
