#include "lps/scattering.hpp"

#include <cmath>

namespace lps {

namespace {
constexpr double kPoleMergeRadius = 1e-12;
constexpr double kStructureTol = 1e-10;
}  // namespace

Factor Factor::constant(const Mat& unitary) {
  Factor f;
  f.kind = Kind::unitary;
  f.matrix = unitary;
  const int k = static_cast<int>(unitary.rows());
  if ((unitary.adjoint() * unitary - Mat::Identity(k, k)).norm() > kStructureTol)
    throw DomainError("constant factor is not unitary");
  return f;
}

Factor Factor::blaschke(Kind kind, Complex mu, const Mat& proj) {
  if (kind == Kind::unitary) throw DomainError("use Factor::constant for unitaries");
  if (mu.imag() <= 0.0) throw DomainError("Blaschke factor needs Im mu > 0");
  if ((proj * proj - proj).norm() > kStructureTol ||
      (proj - proj.adjoint()).norm() > kStructureTol)
    throw DomainError("factor projection is not an orthogonal projection");
  Factor f;
  f.kind = kind;
  f.mu = mu;
  f.matrix = proj;
  return f;
}

Factor Factor::blaschke_scalar(Kind kind, Complex mu) {
  return blaschke(kind, mu, Mat::Identity(1, 1));
}

Mat Factor::eval(Complex z) const {
  if (kind == Kind::unitary) return matrix;
  const int k = static_cast<int>(matrix.rows());
  const Complex num = z - mu, den = z - std::conj(mu);
  Complex b;
  if (kind == Kind::inner) {
    if (std::abs(den) < kPoleMergeRadius)
      throw PoleError("inner factor pole", std::conj(mu));
    b = num / den;
  } else {
    if (std::abs(num) < kPoleMergeRadius) throw PoleError("anti-inner factor pole", mu);
    b = den / num;
  }
  return Mat::Identity(k, k) - matrix + b * matrix;
}

Factor Factor::adjoint() const {
  Factor f = *this;
  switch (kind) {
    case Kind::unitary:
      f.matrix = matrix.adjoint();
      break;
    case Kind::inner:
      f.kind = Kind::anti_inner;
      break;
    case Kind::anti_inner:
      f.kind = Kind::inner;
      break;
  }
  return f;
}

int Factor::rank() const {
  if (kind == Kind::unitary) return 0;
  return static_cast<int>(std::lround(matrix.trace().real()));
}

ScatteringMatrix::ScatteringMatrix(int k_dim) : k_dim_(k_dim) {
  if (k_dim < 1) throw DomainError("multiplicity dimension must be >= 1");
}

ScatteringMatrix& ScatteringMatrix::push_factor(const Factor& f) {
  if (f.matrix.rows() != k_dim_ || f.matrix.cols() != k_dim_)
    throw DomainError("factor dimension mismatch");
  factors_.push_back(f);
  return *this;
}

ScatteringMatrix& ScatteringMatrix::set_phase_amplitude(double amplitude) {
  phase_amplitude_ = amplitude;
  return *this;
}

int ScatteringMatrix::blaschke_count() const {
  int n = 0;
  for (const auto& f : factors_)
    if (f.kind != Factor::Kind::unitary) ++n;
  return n;
}

int ScatteringMatrix::blaschke_degree() const {
  int d = 0;
  for (const auto& f : factors_)
    if (f.kind == Factor::Kind::inner) d += f.rank();
  return d;
}

bool ScatteringMatrix::inner_only() const {
  if (!rational()) return false;
  for (const auto& f : factors_)
    if (f.kind == Factor::Kind::anti_inner) return false;
  return true;
}

Mat ScatteringMatrix::eval(Complex z) const {
  Mat acc = Mat::Identity(k_dim_, k_dim_);
  for (const auto& f : factors_) acc = acc * f.eval(z);
  if (phase_amplitude_) {
    const Complex d = 1.0 + z * z;
    if (std::abs(d) < kPoleMergeRadius)
      throw PoleError("phase factor singular at z = +-i", z);
    acc *= std::exp(kI * (*phase_amplitude_) / d);
  }
  return acc;
}

ScatteringMatrix ScatteringMatrix::adjoint() const {
  ScatteringMatrix out(k_dim_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    out.push_factor(it->adjoint());
  if (phase_amplitude_) out.set_phase_amplitude(-*phase_amplitude_);
  return out;
}

PoleSet ScatteringMatrix::pole_set() const {
  if (!rational())
    throw DomainError("pole_set is unsupported for non-rational scattering matrices");
  PoleSet out;
  auto merge = [](std::vector<PoleEntry>& list, Complex pole, int rank) {
    for (auto& e : list) {
      if (std::abs(e.pole - pole) <= kPoleMergeRadius) {
        e.rank += rank;
        return;
      }
    }
    list.push_back({pole, rank});
  };
  for (const auto& f : factors_) {
    if (f.kind == Factor::Kind::inner) merge(out.lower, std::conj(f.mu), f.rank());
    if (f.kind == Factor::Kind::anti_inner) merge(out.upper, f.mu, f.rank());
  }
  return out;
}

double ScatteringMatrix::unitarity_residual(const SamplingGrid& grid) const {
  double worst = 0.0;
  const Mat id = Mat::Identity(k_dim_, k_dim_);
  for (int m = 0; m < grid.size(); ++m) {
    const Mat s = eval(Complex(grid.node(m), 0.0));
    worst = std::max(worst, (s.adjoint() * s - id).norm());
  }
  return worst;
}

SpectralFunction apply_scattering(const ScatteringMatrix& s, const SpectralFunction& f,
                                  const SamplingGrid& grid, ApplyDiagnostics* diag) {
  if (s.k_dim() != f.k_dim()) throw DomainError("multiplicity mismatch");
  const int n_out = f.trunc_n() + s.blaschke_count();
  if (!grid.resolves(n_out))
    throw GridError("grid too coarse for the expanded output truncation");
  Mat samples = hardy::synthesize(f.resized(n_out), grid);
  for (int m = 0; m < grid.size(); ++m)
    samples.col(m) = s.eval(Complex(grid.node(m), 0.0)) * samples.col(m);
  auto res = hardy::analyze(samples, grid, n_out);
  if (diag) diag->alias_mass = res.alias_mass;
  return std::move(res.f);
}

}  // namespace lps
