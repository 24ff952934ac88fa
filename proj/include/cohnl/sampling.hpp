#pragma once

#include <cstdint>
#include <random>

#include "cohnl/coherence.hpp"

namespace cohnl {

/// Seeded generator used by every stochastic routine. Same seed, same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  /// Uniform integer in [0, n).
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// d x k matrix of independent standard complex Gaussians.
ComplexMatrix ginibre(int d, int k, Rng& rng);

/// Mixed state G G^dagger / Tr with G a d x rank Ginibre matrix
/// (rank = d gives the Hilbert-Schmidt ensemble).
DensityMatrix random_density(int d, Rng& rng, int rank = 0);

/// Haar-random pure state.
PureState random_pure(int d, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(int d, Rng& rng);

/// Random incoherent channel on a d-dimensional system. Mixes two
/// families of incoherent Kraus operators with a random weight: phased
/// partial permutations P_j D_j, and measure-and-prepare maps
/// |r_j><w_j| with {w_j} a random orthonormal basis.
KrausSet random_incoherent_kraus(int d, Rng& rng);

}  // namespace cohnl
