#include "lps/spectral.hpp"

#include <cmath>

#include "lps/fft.hpp"

namespace lps {

SamplingGrid::SamplingGrid(int m_samples) : m_samples_(m_samples) {
  if (m_samples < 2) throw GridError("sampling grid needs at least 2 nodes");
  circle_.resize(m_samples);
  nodes_.resize(m_samples);
  for (int m = 0; m < m_samples; ++m) {
    const double theta = 2.0 * kPi * (m + 0.5) / m_samples;
    circle_[m] = std::polar(1.0, theta);
    // lambda = i(1+w)/(1-w) is real on |w| = 1; equals -cot(theta/2).
    nodes_[m] = -1.0 / std::tan(theta / 2.0);
  }
}

SamplingGrid SamplingGrid::for_truncation(int trunc_n, int grid_factor) {
  if (grid_factor < 4) throw GridError("grid factor below anti-aliasing minimum 4");
  return SamplingGrid(grid_factor * trunc_n);
}

SpectralFunction::SpectralFunction(int k_dim, int trunc_n)
    : k_dim_(k_dim), trunc_n_(trunc_n) {
  if (k_dim < 1) throw DomainError("multiplicity dimension must be >= 1");
  if (trunc_n < 1) throw DomainError("truncation must be >= 1");
  coeffs_ = Mat::Zero(k_dim, 2 * trunc_n);
}

int SpectralFunction::col(int n) const {
  if (n < -trunc_n_ || n >= trunc_n_)
    throw DomainError("basis index outside truncation window");
  return n + trunc_n_;
}

Complex SpectralFunction::inner(const SpectralFunction& g) const {
  if (k_dim_ != g.k_dim_) throw DomainError("multiplicity mismatch");
  if (trunc_n_ == g.trunc_n_)
    return (coeffs_.conjugate().cwiseProduct(g.coeffs_)).sum();
  const int n = std::max(trunc_n_, g.trunc_n_);
  return resized(n).inner(g.resized(n));
}

double SpectralFunction::plus_mass() const {
  return coeffs_.rightCols(trunc_n_).squaredNorm();
}

double SpectralFunction::minus_mass() const {
  return coeffs_.leftCols(trunc_n_).squaredNorm();
}

SpectralFunction SpectralFunction::resized(int new_trunc_n, double* dropped_mass) const {
  SpectralFunction out(k_dim_, new_trunc_n);
  const int keep = std::min(trunc_n_, new_trunc_n);
  out.coeffs_.middleCols(new_trunc_n - keep, 2 * keep) =
      coeffs_.middleCols(trunc_n_ - keep, 2 * keep);
  if (dropped_mass) *dropped_mass = squared_norm() - out.squared_norm();
  return out;
}

SpectralFunction& SpectralFunction::operator+=(const SpectralFunction& g) {
  if (trunc_n_ != g.trunc_n_ || k_dim_ != g.k_dim_) {
    if (k_dim_ != g.k_dim_) throw DomainError("multiplicity mismatch");
    *this = resized(std::max(trunc_n_, g.trunc_n_));
    coeffs_ += g.resized(trunc_n_).coeffs();
    return *this;
  }
  coeffs_ += g.coeffs_;
  return *this;
}

SpectralFunction& SpectralFunction::operator-=(const SpectralFunction& g) {
  *this += Complex(-1.0) * g;
  return *this;
}

SpectralFunction& SpectralFunction::operator*=(Complex a) {
  coeffs_ *= a;
  return *this;
}

namespace hardy {

Mat synthesize(const SpectralFunction& f, const SamplingGrid& grid) {
  const int n_trunc = f.trunc_n();
  const int m_total = grid.size();
  if (!grid.resolves(n_trunc))
    throw GridError("grid too coarse for truncation (need M >= 4N)");
  Mat samples(f.k_dim(), m_total);
  std::vector<Complex> buf(m_total);
  for (int row = 0; row < f.k_dim(); ++row) {
    std::fill(buf.begin(), buf.end(), Complex(0.0));
    for (int n = -n_trunc; n < n_trunc; ++n) {
      // w_m^n = e^{2pi i n m / M} e^{i pi n / M}
      const Complex twiddle = std::polar(1.0, kPi * n / m_total);
      buf[((n % m_total) + m_total) % m_total] =
          f.coeffs()(row, n + n_trunc) * twiddle;
    }
    detail::dft(buf, /*forward=*/false);
    for (int m = 0; m < m_total; ++m) {
      samples(row, m) = buf[m] / (kSqrtPi * (grid.node(m) + kI));
    }
  }
  return samples;
}

AnalysisResult analyze(const Mat& samples, const SamplingGrid& grid, int trunc_n) {
  const int m_total = grid.size();
  if (samples.cols() != m_total)
    throw GridError("sample count does not match grid size");
  if (!grid.resolves(trunc_n))
    throw GridError("grid too coarse for truncation (need M >= 4N)");
  AnalysisResult out{SpectralFunction(static_cast<int>(samples.rows()), trunc_n), 0.0};
  std::vector<Complex> buf(m_total);
  for (int row = 0; row < samples.rows(); ++row) {
    for (int m = 0; m < m_total; ++m)
      buf[m] = kSqrtPi * (grid.node(m) + kI) * samples(row, m);
    detail::dft(buf, /*forward=*/true);
    double total = 0.0;
    for (int n = -m_total / 2; n < m_total - m_total / 2; ++n) {
      const Complex c = buf[((n % m_total) + m_total) % m_total] *
                        std::polar(1.0, -kPi * n / m_total) / double(m_total);
      total += std::norm(c);
      if (n >= -trunc_n && n < trunc_n) out.f.coeffs()(row, n + trunc_n) = c;
    }
    out.alias_mass += total;
  }
  out.alias_mass -= out.f.squared_norm();
  if (out.alias_mass < 0.0) out.alias_mass = 0.0;
  return out;
}

SpectralFunction hardy_project(const SpectralFunction& f, HardySign sign) {
  SpectralFunction out = f;
  const int n_trunc = f.trunc_n();
  if (sign == HardySign::plus)
    out.coeffs().leftCols(n_trunc).setZero();
  else
    out.coeffs().rightCols(n_trunc).setZero();
  return out;
}

namespace {

// sum over the requested index range of c_n phi_n(z); |w(z)| < 1 selects
// which half converges.
Vec evaluate_half(const SpectralFunction& f, Complex z, bool plus_half) {
  const Complex w = cayley(z);
  const int n_trunc = f.trunc_n();
  Vec acc = Vec::Zero(f.k_dim());
  if (plus_half) {
    // Horner in w over n = N-1 .. 0
    for (int n = n_trunc - 1; n >= 0; --n) acc = acc * w + f.coeff(n);
  } else {
    const Complex wi = 1.0 / w;
    for (int n = -n_trunc; n < 0; ++n) acc = acc * wi + f.coeff(n);
    acc *= wi;  // lowest power is w^{-1}
  }
  return acc / (kSqrtPi * (z + kI));
}

}  // namespace

Vec evaluate_upper(const SpectralFunction& f, Complex z) {
  if (z.imag() <= 0.0)
    throw DomainError("evaluate_upper requires Im z > 0 (use evaluate_lower below the axis)");
  return evaluate_half(f, z, /*plus_half=*/true);
}

Vec evaluate_lower(const SpectralFunction& f, Complex z) {
  if (z.imag() >= 0.0)
    throw DomainError("evaluate_lower requires Im z < 0");
  return evaluate_half(f, z, /*plus_half=*/false);
}

}  // namespace hardy

}  // namespace lps
