#include "qlur/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlur/errors.hpp"

namespace qlur {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows != b.rows || a.cols != b.cols) {
    throw InputError(std::string(what) + ": shape mismatch (" + std::to_string(a.rows) + "x" +
                     std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                     std::to_string(b.cols) + ")");
  }
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "add");
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] + b.a[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "subtract");
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
  return c;
}

Matrix operator*(const cplx& s, const Matrix& m) {
  Matrix c(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) c.a[i] = s * m.a[i];
  return c;
}

Matrix operator*(const Matrix& m, const cplx& s) { return s * m; }

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::matmul(a, b); }

Matrix adjoint(const Matrix& m) {
  Matrix c(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) c(j, i) = std::conj(m(i, j));
  return c;
}

cplx trace(const Matrix& m) {
  if (m.rows != m.cols) throw InputError("trace: matrix not square");
  cplx t = 0;
  for (int i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

double hermiticity_deviation(const Matrix& m) {
  if (m.rows != m.cols) throw InputError("hermiticity_deviation: matrix not square");
  double dev = 0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i; j < m.cols; ++j)
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  return dev;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "max_abs_diff");
  double dev = 0;
  for (std::size_t i = 0; i < a.a.size(); ++i) dev = std::max(dev, std::abs(a.a[i] - b.a[i]));
  return dev;
}

std::vector<cplx> matvec(const Matrix& m, const std::vector<cplx>& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw InputError("matvec: dimension mismatch");
  std::vector<cplx> out(m.rows, cplx(0));
  for (int i = 0; i < m.rows; ++i) {
    const cplx* row = &m.a[static_cast<std::size_t>(i) * m.cols];
    cplx acc = 0;
    for (int j = 0; j < m.cols; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

namespace kernels {

namespace {

Mode g_mode =
#ifdef _OPENMP
    Mode::parallel;
#else
    Mode::serial;
#endif

// One output row of the product; identical inner order in both kernel
// variants keeps serial and parallel results bit-identical.
inline void matmul_row(const Matrix& a, const Matrix& b, Matrix& c, int i) {
  const cplx* arow = &a.a[static_cast<std::size_t>(i) * a.cols];
  cplx* crow = &c.a[static_cast<std::size_t>(i) * b.cols];
  for (int k = 0; k < a.cols; ++k) {
    const cplx aik = arow[k];
    if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
    const cplx* brow = &b.a[static_cast<std::size_t>(k) * b.cols];
    for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
  }
}

inline void kron_row_block(const Matrix& a, const Matrix& b, Matrix& c, int i) {
  for (int j = 0; j < a.cols; ++j) {
    const cplx aij = a(i, j);
    for (int r = 0; r < b.rows; ++r) {
      cplx* crow = &c.a[static_cast<std::size_t>(i * b.rows + r) * c.cols +
                        static_cast<std::size_t>(j) * b.cols];
      const cplx* brow = &b.a[static_cast<std::size_t>(r) * b.cols];
      for (int s = 0; s < b.cols; ++s) crow[s] = aij * brow[s];
    }
  }
}

void check_matmul_shapes(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw InputError("matmul: inner dimension mismatch (" + std::to_string(a.cols) + " vs " +
                     std::to_string(b.rows) + ")");
  }
}

}  // namespace

Mode mode() { return g_mode; }
void set_mode(Mode m) { g_mode = m; }

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  check_matmul_shapes(a, b);
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) matmul_row(a, b, c, i);
  return c;
}

Matrix matmul_parallel(const Matrix& a, const Matrix& b) {
  check_matmul_shapes(a, b);
  Matrix c(a.rows, b.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows; ++i) matmul_row(a, b, c, i);
  return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  return g_mode == Mode::parallel ? matmul_parallel(a, b) : matmul_serial(a, b);
}

Matrix kron_serial(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i) kron_row_block(a, b, c, i);
  return c;
}

Matrix kron_parallel(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows * b.rows, a.cols * b.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows; ++i) kron_row_block(a, b, c, i);
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return g_mode == Mode::parallel ? kron_parallel(a, b) : kron_serial(a, b);
}

}  // namespace kernels

}  // namespace qlur
