#pragma once

#include <cstdint>
#include <vector>

#include "qlur/partition.hpp"
#include "qlur/tensor.hpp"

namespace qlur {

// Pure multipartite state; amplitudes indexed big-endian like DensityMatrix.
struct PureState {
  std::vector<int> dims;
  std::vector<cplx> amplitudes;

  int dim() const;
  double norm() const;
};

// |psi><psi| as a density operator.
DensityMatrix density(const PureState& psi);

// (|10...0> + |01...0> + ... + |0...01>) / sqrt(n) on n qubits.
PureState w_state(int n);

// (|012> + |021> + |111>) / sqrt(3) on three qutrits.
PureState qutrit_phi();

// (1-q)/D * I + q |psi><psi|.
DensityMatrix noisy_mixture(const PureState& psi, double q);

// One-parameter family of noisy mixtures of a pure target.
struct NoiseFamily {
  PureState target;
  double q_lo = 0.0;
  double q_hi = 1.0;

  DensityMatrix at(double q) const;
};

// Closed-form full-separability threshold for the noisy W_n family:
// 1/(1 + 2^n sqrt((n-1)/(2n))) for 2 <= n <= 5, else n/(n + (n-2) 2^n).
double fully_separable_threshold(int n);

// Ginibre construction G G^dag / tr: full-rank state, deterministic per seed.
DensityMatrix random_density(const std::vector<int>& dims, std::uint64_t seed);

// Convex mixture of `terms` random product states across the bipartition.
DensityMatrix random_biseparable(const std::vector<int>& dims, const Bipartition& partition,
                                 int terms, std::uint64_t seed);

// Convex mixture of `terms` random fully-product states (one local pure state
// per site per term).
DensityMatrix random_fully_separable(const std::vector<int>& dims, int terms,
                                     std::uint64_t seed);

}  // namespace qlur
