#pragma once

#include <vector>

#include "lps/quadrature.hpp"
#include "lps/spectral.hpp"

namespace lps {

// A rational L^2 element with simple off-axis poles,
//   f(z) = sum_j residue_j / (z - pole_j),
// the closed-form test family. Poles in the lower half-plane contribute only
// to the n >= 0 coefficients, upper poles only to n < 0, with geometric decay.
class RationalFunction {
 public:
  RationalFunction(int k_dim) : k_dim_(k_dim) {}

  void add_pole(Complex pole, const Vec& residue);
  int k_dim() const { return k_dim_; }
  const std::vector<Complex>& poles() const { return poles_; }
  const std::vector<Vec>& residues() const { return residues_; }

  Vec eval(Complex z) const;
  SpectralFunction to_spectral(int trunc_n) const;

  // Product of simple factors 1/(z - p_j) times a direction vector; the
  // resulting residues carry the moment cancellations that give |z|^{-d}
  // far-field decay (d = number of poles).
  static RationalFunction pole_product(const std::vector<Complex>& poles, const Vec& direction);

  // Envelope usable with the quadrature oracle. Conservative: power is the
  // guaranteed decay (1 for a generic sum, poles.size() for pole products).
  hardy::DecayEnvelope decay_envelope(int guaranteed_power = 1) const;

  double min_pole_distance() const;  // min |Im pole|

  hardy::LineFunction as_line_function() const {
    return [copy = *this](double x) { return copy.eval(Complex(x, 0.0)); };
  }

 private:
  int k_dim_;
  std::vector<Complex> poles_;
  std::vector<Vec> residues_;
};

}  // namespace lps
