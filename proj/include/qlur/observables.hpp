#pragma once

#include <array>
#include <vector>

#include "qlur/tensor.hpp"

namespace qlur {

// k local observables per site; the k-th observables across sites are summed
// into collective operators. per_site[i][k] is dims[i] x dims[i] Hermitian.
struct ObservableFamily {
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> per_site;

  int n_sites() const;
  int n_observables() const;  // k, uniform across sites (enforced on construction)
};

// Validates shape, uniform k and hermiticity; returns its argument.
ObservableFamily make_family(std::vector<int> dims, std::vector<std::vector<Matrix>> per_site);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// Site i gets (s_i1*sigma_x, s_i2*sigma_y, s_i3*sigma_z); signs in {+1,-1}.
ObservableFamily pauli_family(const std::vector<std::array<int, 3>>& signs);

struct SpinTriple {
  Matrix jx, jy, jz;
};

// Standard (2j+1)-dimensional angular momentum matrices, Jz = diag(j..-j),
// ladder construction, commutator convention [Jx,Jy] = i Jz.
SpinTriple spin_matrices(double j);

// Per-site weights for the two collective spin observables
// u = sum_i h_i Jx_i and v = sum_i g_i Jy_i.
struct SpinConfig {
  std::vector<double> h;
  std::vector<double> g;
};

// k=2 family: site i gets (h_i Jx(j_i), g_i Jy(j_i)).
ObservableFamily spin_family(const std::vector<double>& j_per_site, const SpinConfig& config);

// Full-space collective operator sum_{i in subset} embed(per_site[i][k], i).
Matrix collective_operator(const ObservableFamily& family, int k, const std::vector<int>& subset);

// The same operator restricted to the subset's joint space.
Matrix collective_on_subset(const ObservableFamily& family, int k, const std::vector<int>& subset);

// First and second moments of each collective subset operator on rho's
// reduction, computed from single-site and pair reductions (the expanded
// square needs nothing larger).
struct CollectiveMoments {
  std::vector<double> first;   // <K_k>
  std::vector<double> second;  // <K_k^2>
};
CollectiveMoments collective_moments(const ObservableFamily& family,
                                     const std::vector<int>& subset, const DensityMatrix& rho);

// sum_k variance of the subset collective operators on rho's reduction.
double collective_variance_sum(const ObservableFamily& family, const std::vector<int>& subset,
                               const DensityMatrix& rho);

// Family restricted to `sites` (renumbered 0..m-1, order preserved).
ObservableFamily restrict_family(const ObservableFamily& family, const std::vector<int>& sites);

}  // namespace qlur
