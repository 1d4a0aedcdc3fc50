#include "qlur/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qlur/errors.hpp"
#include "qlur/tolerances.hpp"

namespace qlur {

namespace {

int dims_product(const std::vector<int>& dims) {
  if (dims.empty()) throw InputError("dims: empty dimension list");
  long long d = 1;
  for (int x : dims) {
    if (x < 1) throw InputError("dims: nonpositive local dimension");
    d *= x;
    if (d > (1 << 20)) throw InputError("dims: total dimension too large");
  }
  return static_cast<int>(d);
}

// stride[i] = product of dims after site i (big-endian index arithmetic).
std::vector<int> strides_for(const std::vector<int>& dims) {
  std::vector<int> s(dims.size());
  int acc = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    s[i] = acc;
    acc *= dims[i];
  }
  return s;
}

void check_sites(const std::vector<int>& sites, int n, const char* what) {
  if (sites.empty()) throw InputError(std::string(what) + ": empty site list");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 0 || sites[i] >= n)
      throw InputError(std::string(what) + ": site index out of range");
    if (i > 0 && sites[i] <= sites[i - 1])
      throw InputError(std::string(what) + ": site list must be strictly ascending");
  }
}

double real_with_residue_check(const cplx& z, const char* what) {
  if (std::abs(z.imag()) > tol::imag_residue)
    throw InputError(std::string(what) + ": imaginary residue " + std::to_string(z.imag()) +
                     " exceeds tolerance (non-Hermitian input?)");
  return z.real();
}

}  // namespace

int DensityMatrix::dim() const { return dims_product(dims); }

Matrix kron(const Matrix& a, const Matrix& b) { return kernels::kron(a, b); }

Matrix kron_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw InputError("kron_all: no factors");
  Matrix acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
  return acc;
}

Matrix embed(const Matrix& op, int site, const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  if (site < 0 || site >= n) throw InputError("embed: site index out of range");
  if (op.rows != op.cols || op.rows != dims[site])
    throw InputError("embed: operator size does not match the site dimension");
  const int D = dims_product(dims);
  int left = 1, right = 1;
  for (int i = 0; i < site; ++i) left *= dims[i];
  for (int i = site + 1; i < n; ++i) right *= dims[i];
  const int d = dims[site];
  Matrix out(D, D);
  for (int l = 0; l < left; ++l)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const cplx v = op(a, b);
        if (v.real() == 0.0 && v.imag() == 0.0) continue;
        for (int r = 0; r < right; ++r)
          out((l * d + a) * right + r, (l * d + b) * right + r) = v;
      }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = static_cast<int>(rho.dims.size());
  check_sites(keep, n, "partial_trace");
  const int D = rho.dim();
  if (rho.m.rows != D || rho.m.cols != D)
    throw InputError("partial_trace: matrix size does not match dims");

  std::vector<int> traced;
  for (int s = 0; s < n; ++s)
    if (!std::binary_search(keep.begin(), keep.end(), s)) traced.push_back(s);

  const std::vector<int> strides = strides_for(rho.dims);
  std::vector<int> kept_dims;
  for (int s : keep) kept_dims.push_back(rho.dims[s]);

  // Global-index offsets of every kept / traced digit combination.
  auto offsets = [&](const std::vector<int>& sites) {
    int count = 1;
    for (int s : sites) count *= rho.dims[s];
    std::vector<int> off(count, 0);
    for (int c = 0; c < count; ++c) {
      int rem = c;
      for (int i = static_cast<int>(sites.size()) - 1; i >= 0; --i) {
        const int d = rho.dims[sites[i]];
        off[c] += (rem % d) * strides[sites[i]];
        rem /= d;
      }
    }
    return off;
  };
  const std::vector<int> kept_off = offsets(keep);
  const std::vector<int> traced_off = traced.empty() ? std::vector<int>{0} : offsets(traced);

  const int Dk = static_cast<int>(kept_off.size());
  DensityMatrix out{kept_dims, Matrix(Dk, Dk)};
#pragma omp parallel for schedule(static)
  for (int p = 0; p < Dk; ++p) {
    for (int q = 0; q < Dk; ++q) {
      cplx acc = 0;
      for (int t : traced_off) acc += rho.m(kept_off[p] + t, kept_off[q] + t);
      out.m(p, q) = acc;
    }
  }
  return out;
}

double expectation(const Matrix& op, const DensityMatrix& rho) {
  const int D = rho.dim();
  if (op.rows != op.cols || op.rows != D || rho.m.rows != D || rho.m.cols != D)
    throw InputError("expectation: operator/state dimension mismatch");
  cplx acc = 0;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) acc += op(i, j) * rho.m(j, i);
  return real_with_residue_check(acc, "expectation");
}

double variance(const Matrix& op, const DensityMatrix& rho) {
  const int D = rho.dim();
  if (op.rows != op.cols || op.rows != D || rho.m.rows != D || rho.m.cols != D)
    throw InputError("variance: operator/state dimension mismatch");
  const Matrix b = kernels::matmul(op, rho.m);
  const double first = real_with_residue_check(trace(b), "variance <op>");
  cplx acc = 0;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) acc += op(i, j) * b(j, i);
  const double second = real_with_residue_check(acc, "variance <op^2>");
  const double var = second - first * first;
  if (var < tol::verdict)
    throw InputError("variance: negative beyond tolerance (" + std::to_string(var) + ")");
  return std::max(var, 0.0);
}

DensityMatrix validate_density(const Matrix& m, const std::vector<int>& dims,
                               ValidationReport* report) {
  const int D = dims_product(dims);
  if (m.rows != m.cols || m.rows != D)
    throw InputError("validate_density: matrix is " + std::to_string(m.rows) + "x" +
                     std::to_string(m.cols) + " but dims imply " + std::to_string(D));

  ValidationReport rep;
  rep.hermiticity_deviation = hermiticity_deviation(m);
  rep.trace_deviation = std::abs(trace(m) - cplx(1.0));

  Eigen::MatrixXcd em(D, D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) em(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = solver.eigenvalues().minCoeff();

  if (report) *report = rep;
  if (rep.hermiticity_deviation > tol::hermiticity)
    throw InputError("validate_density: hermiticity deviation " +
                     std::to_string(rep.hermiticity_deviation) + " exceeds tolerance");
  if (rep.trace_deviation > tol::trace_dev)
    throw InputError("validate_density: trace deviation " +
                     std::to_string(rep.trace_deviation) + " exceeds tolerance");
  if (rep.min_eigenvalue < tol::psd_eigen)
    throw InputError("validate_density: minimum eigenvalue " +
                     std::to_string(rep.min_eigenvalue) + " below tolerance");
  return DensityMatrix{dims, m};
}

}  // namespace qlur
