#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qlur/bounds.hpp"
#include "qlur/partition.hpp"

namespace qlur {

// One bipartition's lower bound on F: total = u_left + u_right + w^2 with
// w = sqrt(v_left - u_left) - sqrt(v_right - u_right).
struct PartitionBound {
  Bipartition partition;
  double u_left = 0;
  double u_right = 0;
  double v_left = 0;   // actual variance sums on the reductions
  double v_right = 0;
  double w = 0;
  double total = 0;
};

enum class Verdict { detected, inconclusive };

struct CriterionReport {
  std::string criterion;  // "gme" or "spin_gme"
  double f_total = 0;
  std::vector<PartitionBound> partition_bounds;
  double min_bound = 0;
  double f = 0;  // f_total - min_bound
  Verdict verdict = Verdict::inconclusive;

  const PartitionBound& argmin() const;  // first partition attaining min_bound
};

// F = sum_k variance(collective_operator(family, k, all sites), rho).
double f_total(const DensityMatrix& rho, const ObservableFamily& family);

// Bound for a single bipartition. Radicand policy: values in [tol::radicand, 0)
// clamp to 0; below tol::radicand throws UnsoundBound.
PartitionBound partition_bound(const DensityMatrix& rho, const ObservableFamily& family,
                               const Bipartition& partition, const BoundProvider& provider);

// Genuine multipartite entanglement criterion: F against the minimum bound
// over all canonical bipartitions. verdict = detected iff f < tol::verdict.
CriterionReport gme_criterion(const DensityMatrix& rho, const ObservableFamily& family,
                              const BoundProvider& provider);

// Bipartite test value F = sum_k variance(A_k x I + I x B_k) - (u_a + u_b + M^2),
// M = sqrt(sum_k var A_k - u_a) - sqrt(sum_k var B_k - u_b); negative => entangled.
double lur_bipartite(const DensityMatrix& rho_ab, const ObservableFamily& family,
                     double u_a, double u_b);

// The six tripartite full-separability values. Pairwise F^AB, F^AC, F^BC on
// two-site reductions, then F^{AB|C}, F^{AC|B}, F^{BC|A} on the full state.
// A pairwise value below tol::verdict makes sqrt(F^XY) in the dependent
// combined term undefined: that term is skipped (nullopt + flag) and the
// pairwise violation already decides the verdict.
struct FullSeparabilityReport {
  double f_ab = 0;
  double f_ac = 0;
  double f_bc = 0;
  std::array<std::optional<double>, 3> combined;  // AB|C, AC|B, BC|A
  std::array<bool, 3> skipped = {false, false, false};
  bool not_fully_separable = false;

  std::vector<double> defined_values() const;  // all six that exist
};

FullSeparabilityReport full_separability_tripartite(const DensityMatrix& rho,
                                                    const ObservableFamily& family,
                                                    const BoundProvider& provider);

// Spin form of the criterion: k=2 family (h_i Jx_i, g_i Jy_i); each subset's
// bound is |sum_{i in S} h_i g_i <Jz_i>| evaluated on rho's reductions, both
// as the additive U term and inside the W radicands.
CriterionReport spin_gme_criterion(const DensityMatrix& rho,
                                   const std::vector<double>& j_per_site,
                                   const SpinConfig& config);

}  // namespace qlur
