#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlur/criteria.hpp"

namespace qlur {

struct SweepRow {
  double q = 0;
  double f = 0;
  double f_total = 0;
  double min_bound = 0;
  Bipartition argmin_partition;
};

struct ThresholdResult {
  double q_star = 0;
  double lo = 0;  // final bracket
  double hi = 0;
  int iterations = 0;
  int sign_lo = 0;  // sign of f at the original bracket endpoints
  int sign_hi = 0;
};

// A named, fully wired reproduction setup: noise family + observable family
// + bound provider.
struct DemoConfig {
  std::string name;
  NoiseFamily family;
  ObservableFamily observables;
  BoundProvider provider;
};

// Built-in demos: "w3", "w4", "w5", "w6" (noisy W states with the mixed-sign
// Pauli configurations) and "qutrit3" (noisy three-qutrit state with the
// signed spin-1 triple). All use the family-minimum provider.
DemoConfig demo_config(const std::string& name);

// gme_criterion on `grid` evenly spaced q values across the family range.
std::vector<SweepRow> sweep(const NoiseFamily& family, const ObservableFamily& observables,
                            const BoundProvider& provider, int grid);

// Bisection on f over [lo, hi] to bracket width tol::bisection.
ThresholdResult find_threshold(const NoiseFamily& family, const ObservableFamily& observables,
                               const BoundProvider& provider, double lo, double hi);

struct FullsepRow {
  int n = 0;
  std::optional<double> q_gme;  // absent when f never changes sign
  double q_fullsep = 0;
};

// Pairs each W_n demo's detection threshold with the closed-form
// full-separability threshold, n in [n_lo, n_hi].
std::vector<FullsepRow> compare_fullsep(int n_lo, int n_hi);

// CSV with header q,f,f_total,min_bound,argmin_partition; %.12g numbers,
// \n line endings. Byte-deterministic for identical input.
std::string to_csv(const std::vector<SweepRow>& rows);

// Command-line surface; exit 0 success, 2 input error, 3 unsound bound.
int run_cli(int argc, const char* const* argv);

}  // namespace qlur
