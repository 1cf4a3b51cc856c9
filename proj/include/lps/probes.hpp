#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lps/rational.hpp"
#include "lps/spectral.hpp"

namespace lps::probes {

// Deterministic probe factory. All draws go through one seeded engine so a
// scenario seed pins every probe in a run.
class ProbeFactory {
 public:
  explicit ProbeFactory(std::uint64_t seed) : rng_(seed) {}

  // Product of `n_poles` simple poles in the lower half plane (the function
  // lies in H2+) times a random direction, residues carrying the moment
  // cancellations that give |z|^{-n_poles} decay. Poles are drawn with Re in
  // [-2,2], Im in [-2,-0.3], pairwise separated.
  RationalFunction lower_pole_product(int k_dim = 1, int n_poles = 4);

  // Same construction reflected to the upper half plane (H2- member).
  RationalFunction upper_pole_product(int k_dim = 1, int n_poles = 4);

  // Two-sided probe: sum of one product in each half plane.
  RationalFunction two_sided(int k_dim = 1, int n_poles = 4);

  // Random vector amplitude for matrix-valued (k_dim > 1) probes.
  Vec random_direction(int k_dim);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::vector<Complex> draw_poles(int n_poles, bool lower);
  std::mt19937_64 rng_;
};

}  // namespace lps::probes
