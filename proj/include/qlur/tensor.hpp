#pragma once

#include <vector>

#include "qlur/matrix.hpp"

namespace qlur {

// Multipartite density operator. dims[i] is the local dimension of site i;
// sites are ordered big-endian: site 0 is the most significant digit of the
// computational-basis index.
struct DensityMatrix {
  std::vector<int> dims;
  Matrix m;

  int dim() const;  // product of dims
};

struct ValidationReport {
  double hermiticity_deviation = 0;
  double trace_deviation = 0;
  double min_eigenvalue = 0;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(const std::vector<Matrix>& factors);

// Full-space operator acting as `op` on `site` and identity elsewhere.
Matrix embed(const Matrix& op, int site, const std::vector<int>& dims);

// Reduction onto `keep` (strictly ascending site indices, nonempty); the kept
// sites preserve their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Re(tr(op * rho)); throws InputError if the imaginary residue exceeds
// tol::imag_residue (non-Hermitian input).
double expectation(const Matrix& op, const DensityMatrix& rho);

// <op^2> - <op>^2, clamped to [0, inf); tiny negatives beyond tolerance are
// rejected as invalid input.
double variance(const Matrix& op, const DensityMatrix& rho);

// Checks hermiticity, unit trace and positive semidefiniteness against the
// central tolerances; throws InputError with diagnostics on failure. The
// optional report receives the measured deviations either way.
DensityMatrix validate_density(const Matrix& m, const std::vector<int>& dims,
                               ValidationReport* report = nullptr);

}  // namespace qlur
