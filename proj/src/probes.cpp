#include "lps/probes.hpp"

#include <cmath>

namespace lps::probes {

std::vector<Complex> ProbeFactory::draw_poles(int n_poles, bool lower) {
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.3, 2.0);
  std::vector<Complex> poles;
  while (static_cast<int>(poles.size()) < n_poles) {
    Complex p(re(rng_), lower ? -im(rng_) : im(rng_));
    bool ok = true;
    for (Complex q : poles)
      if (std::abs(p - q) < 0.2) ok = false;
    if (ok) poles.push_back(p);
  }
  return poles;
}

RationalFunction ProbeFactory::lower_pole_product(int k_dim, int n_poles) {
  return RationalFunction::pole_product(draw_poles(n_poles, true), random_direction(k_dim));
}

RationalFunction ProbeFactory::upper_pole_product(int k_dim, int n_poles) {
  return RationalFunction::pole_product(draw_poles(n_poles, false), random_direction(k_dim));
}

RationalFunction ProbeFactory::two_sided(int k_dim, int n_poles) {
  RationalFunction lo = lower_pole_product(k_dim, n_poles);
  RationalFunction up = upper_pole_product(k_dim, n_poles);
  RationalFunction both(k_dim);
  for (std::size_t j = 0; j < lo.poles().size(); ++j)
    both.add_pole(lo.poles()[j], lo.residues()[j]);
  for (std::size_t j = 0; j < up.poles().size(); ++j)
    both.add_pole(up.poles()[j], up.residues()[j]);
  return both;
}

Vec ProbeFactory::random_direction(int k_dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(k_dim);
  for (int j = 0; j < k_dim; ++j) v(j) = Complex(g(rng_), g(rng_));
  v /= v.norm();
  return v;
}

}  // namespace lps::probes
