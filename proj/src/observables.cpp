#include "qlur/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlur/errors.hpp"
#include "qlur/tolerances.hpp"

namespace qlur {

namespace {

void check_subset(const std::vector<int>& subset, int n, const char* what) {
  if (subset.empty()) throw InputError(std::string(what) + ": empty subset");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n)
      throw InputError(std::string(what) + ": site index out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw InputError(std::string(what) + ": subset must be strictly ascending");
  }
}

}  // namespace

int ObservableFamily::n_sites() const { return static_cast<int>(dims.size()); }

int ObservableFamily::n_observables() const {
  return per_site.empty() ? 0 : static_cast<int>(per_site[0].size());
}

ObservableFamily make_family(std::vector<int> dims, std::vector<std::vector<Matrix>> per_site) {
  if (dims.empty() || dims.size() != per_site.size())
    throw InputError("make_family: dims and per_site site counts differ");
  const std::size_t k = per_site[0].size();
  if (k == 0) throw InputError("make_family: no observables");
  for (std::size_t i = 0; i < per_site.size(); ++i) {
    if (per_site[i].size() != k)
      throw InputError("make_family: ragged observable counts across sites");
    for (const Matrix& op : per_site[i]) {
      if (op.rows != op.cols || op.rows != dims[i])
        throw InputError("make_family: operator size does not match the site dimension");
      if (hermiticity_deviation(op) > tol::hermiticity)
        throw InputError("make_family: non-Hermitian observable at site " + std::to_string(i));
    }
  }
  return ObservableFamily{std::move(dims), std::move(per_site)};
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m(0, 1) = cplx(0, -1);
  m(1, 0) = cplx(0, 1);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

ObservableFamily pauli_family(const std::vector<std::array<int, 3>>& signs) {
  if (signs.empty()) throw InputError("pauli_family: no sites");
  std::vector<int> dims(signs.size(), 2);
  std::vector<std::vector<Matrix>> per_site;
  per_site.reserve(signs.size());
  const Matrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  for (const auto& s : signs) {
    for (int c : s)
      if (c != 1 && c != -1) throw InputError("pauli_family: signs must be +1 or -1");
    per_site.push_back({cplx(s[0]) * sx, cplx(s[1]) * sy, cplx(s[2]) * sz});
  }
  return make_family(std::move(dims), std::move(per_site));
}

SpinTriple spin_matrices(double j) {
  const double two_j = 2.0 * j;
  if (!(j > 0) || std::abs(two_j - std::round(two_j)) > 1e-12)
    throw InputError("spin_matrices: 2j must be a positive integer");
  const int d = static_cast<int>(std::round(two_j)) + 1;
  Matrix jz(d, d), jp(d, d);
  for (int r = 0; r < d; ++r) jz(r, r) = j - r;
  // <m+1|J+|m> = sqrt(j(j+1) - m(m+1)); basis row r holds m = j - r.
  for (int r = 1; r < d; ++r) {
    const double m = j - r;
    jp(r - 1, r) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Matrix jm = adjoint(jp);
  SpinTriple t;
  t.jx = cplx(0.5) * (jp + jm);
  t.jy = cplx(0, -0.5) * (jp - jm);
  t.jz = std::move(jz);
  return t;
}

ObservableFamily spin_family(const std::vector<double>& j_per_site, const SpinConfig& config) {
  const std::size_t n = j_per_site.size();
  if (n == 0) throw InputError("spin_family: no sites");
  if (config.h.size() != n || config.g.size() != n)
    throw InputError("spin_family: weight lengths do not match the site count");
  std::vector<int> dims(n);
  std::vector<std::vector<Matrix>> per_site;
  per_site.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SpinTriple t = spin_matrices(j_per_site[i]);
    dims[i] = t.jz.rows;
    per_site.push_back({cplx(config.h[i]) * t.jx, cplx(config.g[i]) * t.jy});
  }
  return make_family(std::move(dims), std::move(per_site));
}

Matrix collective_operator(const ObservableFamily& family, int k, const std::vector<int>& subset) {
  check_subset(subset, family.n_sites(), "collective_operator");
  if (k < 0 || k >= family.n_observables())
    throw InputError("collective_operator: observable index out of range");
  int D = 1;
  for (int d : family.dims) D *= d;
  Matrix out(D, D);
  for (int s : subset) out = out + embed(family.per_site[s][k], s, family.dims);
  return out;
}

Matrix collective_on_subset(const ObservableFamily& family, int k, const std::vector<int>& subset) {
  check_subset(subset, family.n_sites(), "collective_on_subset");
  if (k < 0 || k >= family.n_observables())
    throw InputError("collective_on_subset: observable index out of range");
  std::vector<int> sub_dims;
  for (int s : subset) sub_dims.push_back(family.dims[s]);
  int D = 1;
  for (int d : sub_dims) D *= d;
  Matrix out(D, D);
  for (std::size_t i = 0; i < subset.size(); ++i)
    out = out + embed(family.per_site[subset[i]][k], static_cast<int>(i), sub_dims);
  return out;
}

CollectiveMoments collective_moments(const ObservableFamily& family,
                                     const std::vector<int>& subset, const DensityMatrix& rho) {
  check_subset(subset, family.n_sites(), "collective_moments");
  if (family.dims != rho.dims)
    throw InputError("collective_moments: family dims do not match the state dims");
  const int K = family.n_observables();
  const int m = static_cast<int>(subset.size());

  std::vector<DensityMatrix> singles;
  singles.reserve(m);
  for (int s : subset) singles.push_back(partial_trace(rho, {s}));
  // pairs[i][j - i - 1] = reduction onto {subset[i], subset[j]}
  std::vector<std::vector<DensityMatrix>> pairs(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      pairs[i].push_back(partial_trace(rho, {subset[i], subset[j]}));

  CollectiveMoments mom{std::vector<double>(K, 0.0), std::vector<double>(K, 0.0)};
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < m; ++i) {
      const Matrix& op = family.per_site[subset[i]][k];
      mom.first[k] += expectation(op, singles[i]);
      mom.second[k] += expectation(kernels::matmul(op, op), singles[i]);
      for (int j = i + 1; j < m; ++j) {
        const Matrix& opj = family.per_site[subset[j]][k];
        mom.second[k] += 2.0 * expectation(kron(op, opj), pairs[i][j - i - 1]);
      }
    }
  }
  return mom;
}

double collective_variance_sum(const ObservableFamily& family, const std::vector<int>& subset,
                               const DensityMatrix& rho) {
  const CollectiveMoments mom = collective_moments(family, subset, rho);
  double total = 0;
  for (std::size_t k = 0; k < mom.first.size(); ++k) {
    const double var = mom.second[k] - mom.first[k] * mom.first[k];
    if (var < tol::verdict)
      throw InputError("collective_variance_sum: negative variance beyond tolerance");
    total += std::max(var, 0.0);
  }
  return total;
}

ObservableFamily restrict_family(const ObservableFamily& family, const std::vector<int>& sites) {
  check_subset(sites, family.n_sites(), "restrict_family");
  std::vector<int> dims;
  std::vector<std::vector<Matrix>> per_site;
  for (int s : sites) {
    dims.push_back(family.dims[s]);
    per_site.push_back(family.per_site[s]);
  }
  return ObservableFamily{std::move(dims), std::move(per_site)};
}

}  // namespace qlur
