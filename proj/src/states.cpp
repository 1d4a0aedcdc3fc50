#include "qlur/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qlur/errors.hpp"
#include "qlur/tolerances.hpp"

namespace qlur {

namespace {

int product(const std::vector<int>& dims) {
  int d = 1;
  for (int x : dims) d *= x;
  return d;
}

std::vector<cplx> random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<cplx> v(dim);
  double norm2 = 0;
  for (auto& z : v) {
    z = cplx(nd(rng), nd(rng));
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

// Digit of the big-endian computational index at `site`.
int digit_at(int index, int site, const std::vector<int>& dims) {
  int stride = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i > site; --i) stride *= dims[i];
  return (index / stride) % dims[site];
}

void add_weighted_projector(Matrix& m, const std::vector<cplx>& amp, double weight) {
  const int d = static_cast<int>(amp.size());
  for (int i = 0; i < d; ++i) {
    if (amp[i].real() == 0.0 && amp[i].imag() == 0.0) continue;
    for (int j = 0; j < d; ++j) m(i, j) += weight * amp[i] * std::conj(amp[j]);
  }
}

}  // namespace

int PureState::dim() const { return product(dims); }

double PureState::norm() const {
  double n2 = 0;
  for (const auto& z : amplitudes) n2 += std::norm(z);
  return std::sqrt(n2);
}

DensityMatrix density(const PureState& psi) {
  const int D = psi.dim();
  if (static_cast<int>(psi.amplitudes.size()) != D)
    throw InputError("density: amplitude count does not match dims");
  if (std::abs(psi.norm() - 1.0) > tol::hermiticity)
    throw InputError("density: state norm deviates from 1 by more than tolerance");
  Matrix m(D, D);
  add_weighted_projector(m, psi.amplitudes, 1.0);
  return DensityMatrix{psi.dims, std::move(m)};
}

PureState w_state(int n) {
  if (n < 2) throw InputError("w_state: need at least 2 qubits");
  PureState psi;
  psi.dims.assign(n, 2);
  psi.amplitudes.assign(1 << n, cplx(0));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) psi.amplitudes[1 << (n - 1 - i)] = amp;
  return psi;
}

PureState qutrit_phi() {
  PureState psi;
  psi.dims = {3, 3, 3};
  psi.amplitudes.assign(27, cplx(0));
  const double amp = 1.0 / std::sqrt(3.0);
  psi.amplitudes[0 * 9 + 1 * 3 + 2] = amp;  // |012>
  psi.amplitudes[0 * 9 + 2 * 3 + 1] = amp;  // |021>
  psi.amplitudes[1 * 9 + 1 * 3 + 1] = amp;  // |111>
  return psi;
}

DensityMatrix noisy_mixture(const PureState& psi, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("noisy_mixture: q outside [0,1]");
  const int D = psi.dim();
  if (static_cast<int>(psi.amplitudes.size()) != D)
    throw InputError("noisy_mixture: amplitude count does not match dims");
  Matrix m(D, D);
  const double diag = (1.0 - q) / D;
  for (int i = 0; i < D; ++i) m(i, i) = diag;
  add_weighted_projector(m, psi.amplitudes, q);
  return DensityMatrix{psi.dims, std::move(m)};
}

DensityMatrix NoiseFamily::at(double q) const { return noisy_mixture(target, q); }

double fully_separable_threshold(int n) {
  if (n < 2) throw InputError("fully_separable_threshold: need at least 2 qubits");
  if (n <= 5) {
    const double root = std::sqrt((n - 1) / (2.0 * n));
    return 1.0 / (1.0 + std::pow(2.0, n) * root);
  }
  return n / (n + (n - 2) * std::pow(2.0, n));
}

DensityMatrix random_density(const std::vector<int>& dims, std::uint64_t seed) {
  const int D = product(dims);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix g(D, D);
  for (auto& z : g.a) z = cplx(nd(rng), nd(rng));
  Matrix rho = kernels::matmul(g, adjoint(g));
  const double tr = trace(rho).real();
  rho = rho * cplx(1.0 / tr);
  return DensityMatrix{dims, std::move(rho)};
}

DensityMatrix random_biseparable(const std::vector<int>& dims, const Bipartition& partition,
                                 int terms, std::uint64_t seed) {
  if (terms < 1) throw InputError("random_biseparable: need at least 1 term");
  const int n = static_cast<int>(dims.size());
  std::vector<bool> seen(n, false);
  for (int s : partition.left) {
    if (s < 0 || s >= n || seen[s]) throw InputError("random_biseparable: bad partition");
    seen[s] = true;
  }
  for (int s : partition.right) {
    if (s < 0 || s >= n || seen[s]) throw InputError("random_biseparable: bad partition");
    seen[s] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InputError("random_biseparable: partition does not cover all sites");

  const int D = product(dims);
  int d_left = 1, d_right = 1;
  for (int s : partition.left) d_left *= dims[s];
  for (int s : partition.right) d_right *= dims[s];

  // Joint index of `sites` digits inside the global index.
  auto sub_index = [&](int global, const std::vector<int>& sites) {
    int idx = 0;
    for (int s : sites) idx = idx * dims[s] + digit_at(global, s, dims);
    return idx;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.1, 1.0);
  std::vector<double> weights(terms);
  double wsum = 0;
  for (auto& w : weights) {
    w = ud(rng);
    wsum += w;
  }

  Matrix m(D, D);
  std::vector<cplx> amp(D);
  for (int t = 0; t < terms; ++t) {
    const auto psi_l = random_unit_vector(d_left, rng);
    const auto psi_r = random_unit_vector(d_right, rng);
    for (int g = 0; g < D; ++g)
      amp[g] = psi_l[sub_index(g, partition.left)] * psi_r[sub_index(g, partition.right)];
    add_weighted_projector(m, amp, weights[t] / wsum);
  }
  return DensityMatrix{dims, std::move(m)};
}

DensityMatrix random_fully_separable(const std::vector<int>& dims, int terms,
                                     std::uint64_t seed) {
  if (terms < 1) throw InputError("random_fully_separable: need at least 1 term");
  const int n = static_cast<int>(dims.size());
  const int D = product(dims);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.1, 1.0);
  std::vector<double> weights(terms);
  double wsum = 0;
  for (auto& w : weights) {
    w = ud(rng);
    wsum += w;
  }

  Matrix m(D, D);
  std::vector<cplx> amp(D);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::vector<cplx>> locals;
    locals.reserve(n);
    for (int s = 0; s < n; ++s) locals.push_back(random_unit_vector(dims[s], rng));
    for (int g = 0; g < D; ++g) {
      cplx a = 1.0;
      for (int s = 0; s < n; ++s) a *= locals[s][digit_at(g, s, dims)];
      amp[g] = a;
    }
    add_weighted_projector(m, amp, weights[t] / wsum);
  }
  return DensityMatrix{dims, std::move(m)};
}

}  // namespace qlur
