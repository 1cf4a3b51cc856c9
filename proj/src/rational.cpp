#include "lps/rational.hpp"

#include <cmath>

namespace lps {

void RationalFunction::add_pole(Complex pole, const Vec& residue) {
  if (pole.imag() == 0.0) throw DomainError("rational test functions need off-axis poles");
  if (residue.size() != k_dim_) throw DomainError("residue dimension mismatch");
  poles_.push_back(pole);
  residues_.push_back(residue);
}

Vec RationalFunction::eval(Complex z) const {
  Vec acc = Vec::Zero(k_dim_);
  for (size_t j = 0; j < poles_.size(); ++j) acc += residues_[j] / (z - poles_[j]);
  return acc;
}

SpectralFunction RationalFunction::to_spectral(int trunc_n) const {
  SpectralFunction out(k_dim_, trunc_n);
  for (size_t j = 0; j < poles_.size(); ++j) {
    const Complex p = poles_[j];
    if (p.imag() < 0.0) {
      // r/(z - p) = sum_{n>=0} 2i sqrt(pi)/(i - p) q^n phi_n,  q = (p+i)/(p-i)
      const Complex q = (p + kI) / (p - kI);
      Complex c = 2.0 * kI * kSqrtPi / (kI - p);
      for (int n = 0; n < trunc_n; ++n) {
        out.coeffs().col(n + trunc_n) += c * residues_[j];
        c *= q;
      }
    } else {
      // r/(z - p) = sum_{m>=1} 2i sqrt(pi)/(i + p) w(p)^{m-1} phi_{-m}
      const Complex w = (p - kI) / (p + kI);
      Complex c = 2.0 * kI * kSqrtPi / (kI + p);
      for (int m = 1; m <= trunc_n; ++m) {
        out.coeffs().col(trunc_n - m) += c * residues_[j];
        c *= w;
      }
    }
  }
  return out;
}

RationalFunction RationalFunction::pole_product(const std::vector<Complex>& poles,
                                                const Vec& direction) {
  RationalFunction f(static_cast<int>(direction.size()));
  for (size_t j = 0; j < poles.size(); ++j) {
    Complex r = 1.0;
    for (size_t l = 0; l < poles.size(); ++l) {
      if (l == j) continue;
      r /= (poles[j] - poles[l]);
    }
    f.add_pole(poles[j], r * direction);
  }
  return f;
}

hardy::DecayEnvelope RationalFunction::decay_envelope(int guaranteed_power) const {
  double sum_res = 0.0, max_abs_pole = 1.0;
  for (size_t j = 0; j < poles_.size(); ++j) {
    sum_res += residues_[j].norm();
    max_abs_pole = std::max(max_abs_pole, std::abs(poles_[j]));
  }
  // For |x| >= 2 max|p|: ||f(x)|| <= sum||r_j|| * (2/|x|); for a pole product
  // the leading moments cancel and the bound tightens to the stated power
  // with a (2 max|p|)^{power-1} coefficient.
  hardy::DecayEnvelope env;
  env.power = guaranteed_power;
  env.amplitude = 2.0 * sum_res * std::pow(2.0 * max_abs_pole, guaranteed_power - 1);
  env.onset = 2.0 * max_abs_pole;
  return env;
}

double RationalFunction::min_pole_distance() const {
  double d = 1e300;
  for (Complex p : poles_) d = std::min(d, std::abs(p.imag()));
  return d;
}

}  // namespace lps
