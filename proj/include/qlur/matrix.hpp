#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qlur {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Sized for this problem domain (largest
// operator 729x729), so no blocking or expression templates.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  static Matrix identity(int n);

  cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const cplx& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const cplx& s, const Matrix& m);
Matrix operator*(const Matrix& m, const cplx& s);
Matrix operator*(const Matrix& a, const Matrix& b);  // kernels::matmul

Matrix adjoint(const Matrix& m);
cplx trace(const Matrix& m);
double hermiticity_deviation(const Matrix& m);  // max |a_ij - conj(a_ji)|
double max_abs_diff(const Matrix& a, const Matrix& b);
std::vector<cplx> matvec(const Matrix& m, const std::vector<cplx>& v);

namespace kernels {

enum class Mode { serial, parallel };

// Global kernel selector. Defaults to parallel when built with OpenMP.
// Both variants produce bit-identical results: parallel loops partition
// output elements, never accumulation order.
Mode mode();
void set_mode(Mode m);

Matrix matmul_serial(const Matrix& a, const Matrix& b);
Matrix matmul_parallel(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix kron_serial(const Matrix& a, const Matrix& b);
Matrix kron_parallel(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace kernels

}  // namespace qlur
