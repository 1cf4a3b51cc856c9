#include "lps/semigroup.hpp"

#include <cmath>

namespace lps::semigroups {

std::vector<double> phase_symbol(double t, int length) {
  if (t < 0.0) throw DomainError("phase_symbol needs t >= 0");
  std::vector<double> a(length, 0.0);
  if (length == 0) return a;
  const double et = std::exp(-t);
  a[0] = et;
  // Generalized Laguerre L^{(1)}_n(x) by the standard three-term recurrence.
  const double x = 2.0 * t;
  double lm1 = 0.0, l = 1.0;  // L^{(1)}_{-1}, L^{(1)}_0
  for (int d = 1; d < length; ++d) {
    a[d] = -(x / d) * et * l;
    const int n = d - 1;  // advance to L^{(1)}_{n+1}
    const double lp = ((2.0 * n + 2.0 - x) * l - (n + 1.0) * lm1) / (n + 1.0);
    lm1 = l;
    l = lp;
  }
  return a;
}

EvolveResult reference_evolve(const SpectralFunction& f, double t, double envelope) {
  if (std::abs(t) > envelope)
    throw DomainError("evolution time outside the accuracy envelope");
  const int n_trunc = f.trunc_n();
  const int width = 2 * n_trunc;
  EvolveResult out{SpectralFunction(f.k_dim(), n_trunc), 0.0};
  const auto a = phase_symbol(std::abs(t), width);
  const Mat& c = f.coeffs();
  Mat& o = out.f.coeffs();
  if (t >= 0.0) {
    // out_m = sum_{n >= m} a_{n-m} c_n : lower-triangular Toeplitz
    for (int m = 0; m < width; ++m)
      for (int n = m; n < width; ++n) o.col(m) += a[n - m] * c.col(n);
  } else {
    // adjoint: out_m = sum_{n <= m} conj(a_{m-n}) c_n (the symbol is real)
    for (int m = 0; m < width; ++m)
      for (int n = 0; n <= m; ++n) o.col(m) += a[m - n] * c.col(n);
  }
  out.escaped_mass = std::max(0.0, f.squared_norm() - out.f.squared_norm());
  return out;
}

SpectralFunction characteristic_apply(const SpectralFunction& f, double t,
                                      double* projected_mass) {
  if (t < 0.0) throw DomainError("characteristic semigroup needs t >= 0");
  if (projected_mass) *projected_mass = f.minus_mass();
  const SpectralFunction fp = hardy::hardy_project(f, HardySign::plus);
  return hardy::hardy_project(reference_evolve(fp, t).f, HardySign::plus);
}

SpectralFunction characteristic_adjoint_apply(const SpectralFunction& f, double t,
                                              double* projected_mass) {
  if (t < 0.0) throw DomainError("characteristic adjoint needs t >= 0");
  if (projected_mass) *projected_mass = f.minus_mass();
  const SpectralFunction fp = hardy::hardy_project(f, HardySign::plus);
  return hardy::hardy_project(reference_evolve(fp, -t).f, HardySign::plus);
}

SpectralFunction make_reproducing(Complex zeta, const Vec& k, int trunc_n,
                                  const ReproducingOptions& opts) {
  if (zeta.imag() >= 0.0)
    throw DomainError("reproducing vectors require Im zeta < 0");
  if (k.norm() == 0.0) throw DomainError("reproducing vectors need k != 0");
  if (-zeta.imag() < opts.min_imag && !opts.allow_near_axis)
    throw DomainError("pole too close to the axis for the default truncation; "
                      "raise N and set allow_near_axis");
  SpectralFunction out(static_cast<int>(k.size()), trunc_n);
  const Complex q = (zeta + kI) / (zeta - kI);
  Complex c = 2.0 * kI * kSqrtPi / (kI - zeta);
  for (int n = 0; n < trunc_n; ++n) {
    out.coeffs().col(n + trunc_n) = c * k;
    c *= q;
  }
  return out;
}

double reproducing_squared_norm(Complex zeta, const Vec& k) {
  return kPi * k.squaredNorm() / std::abs(zeta.imag());
}

std::vector<double> decay_profile(const SpectralFunction& f, const std::vector<double>& times) {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(characteristic_apply(f, t).norm());
  return out;
}

}  // namespace lps::semigroups
