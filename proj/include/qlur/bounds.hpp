#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlur/observables.hpp"
#include "qlur/states.hpp"

namespace qlur {

enum class BoundStrategy { zero, constant, commutator_at_state, family_minimum, reference_state };

// Lower bound for one subset's collective variance sum, with provenance.
struct SubsetBound {
  std::vector<int> subset;
  double value = 0;
  std::string provenance;
};

// Configuration for producing subset bounds. `overrides` wins over the
// strategy for any listed subset (for strategy `constant` the same map is the
// value table itself; missing subsets default to 0).
struct BoundProvider {
  BoundStrategy strategy = BoundStrategy::zero;
  std::map<std::vector<int>, double> overrides;
  std::optional<NoiseFamily> family;  // family_minimum
  int grid = 1001;                    // family_minimum grid resolution
  std::optional<PureState> reference; // reference_state

  static BoundProvider zero();
  static BoundProvider constant(std::map<std::vector<int>, double> values);
  static BoundProvider commutator_at_state();
  static BoundProvider family_minimum(NoiseFamily family, int grid_points = 1001);
  static BoundProvider reference_state(PureState psi);
};

// |tr(rho * (-i)[x,y])| for Hermitian x, y.
double commutator_bound(const Matrix& x, const Matrix& y, const DensityMatrix& rho);

// Upper estimate of min over pure states of sum_k variance(ops[k]) via
// random-restart projected gradient descent on the unit sphere (the minimum
// over density matrices is attained on pure states by concavity).
// Deterministic per seed; non-increasing in `restarts`.
double min_variance_sum(const std::vector<Matrix>& ops, int dim, int restarts,
                        std::uint64_t seed);

// U_subset under the provider's strategy. `context` is the state being
// evaluated (used by commutator_at_state; reductions taken from it).
SubsetBound bound_for(const BoundProvider& provider, const ObservableFamily& family,
                      const std::vector<int>& subset, const DensityMatrix& context);

}  // namespace qlur
