#include <random>
#include <vector>

#include "doctest.h"
#include "qlur/errors.hpp"
#include "qlur/matrix.hpp"

using namespace qlur;

namespace {

Matrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(rows, cols);
  for (auto& z : m.a) z = cplx(dist(rng), dist(rng));
  return m;
}

bool bits_equal(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    if (a.a[i].real() != b.a[i].real() || a.a[i].imag() != b.a[i].imag()) return false;
  return true;
}

struct mode_guard {
  kernels::Mode saved = kernels::mode();
  ~mode_guard() { kernels::set_mode(saved); }
};

}  // namespace

TEST_CASE("matrix construction and element access") {
  Matrix m(2, 3);
  CHECK(m.rows == 2);
  CHECK(m.cols == 3);
  CHECK(m.a.size() == 6);
  CHECK(m(1, 2) == cplx(0, 0));
  m(1, 2) = cplx(3, -4);
  CHECK(m(1, 2) == cplx(3, -4));

  const Matrix id = Matrix::identity(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id(i, j) == cplx(i == j ? 1 : 0, 0));
}

TEST_CASE("matrix arithmetic") {
  const Matrix a = random_matrix(3, 3, 1);
  const Matrix b = random_matrix(3, 3, 2);

  const Matrix s = a + b;
  const Matrix d = a - b;
  for (int i = 0; i < 9; ++i) {
    CHECK(s.a[i] == a.a[i] + b.a[i]);
    CHECK(d.a[i] == a.a[i] - b.a[i]);
  }

  const Matrix sc = cplx(0, 2) * a;
  const Matrix sc2 = a * cplx(0, 2);
  CHECK(bits_equal(sc, sc2));
  CHECK(sc.a[4] == cplx(0, 2) * a.a[4]);

  CHECK_THROWS_AS(a + random_matrix(2, 3, 3), InputError);
  CHECK_THROWS_AS(a - random_matrix(3, 2, 3), InputError);
  CHECK_THROWS_AS(a * random_matrix(2, 2, 3), InputError);
}

TEST_CASE("matmul against a hand-computed product") {
  Matrix a(2, 2), b(2, 2);
  a(0, 0) = 1;
  a(0, 1) = cplx(0, 1);
  a(1, 0) = 2;
  a(1, 1) = -1;
  b(0, 0) = 3;
  b(0, 1) = 1;
  b(1, 0) = cplx(0, -1);
  b(1, 1) = 4;
  const Matrix c = a * b;
  CHECK(c(0, 0) == cplx(4, 0));   // 3 + i*(-i)
  CHECK(c(0, 1) == cplx(1, 4));
  CHECK(c(1, 0) == cplx(6, 1));
  CHECK(c(1, 1) == cplx(-2, 0));

  const Matrix id = Matrix::identity(5);
  const Matrix r = random_matrix(5, 5, 7);
  CHECK(max_abs_diff(id * r, r) == 0.0);
  CHECK(max_abs_diff(r * id, r) == 0.0);
}

TEST_CASE("adjoint, trace, hermiticity deviation") {
  const Matrix a = random_matrix(4, 4, 5);
  const Matrix ad = adjoint(a);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(ad(i, j) == std::conj(a(j, i)));

  cplx t = 0;
  for (int i = 0; i < 4; ++i) t += a(i, i);
  CHECK(trace(a) == t);

  const Matrix h = a + adjoint(a);
  CHECK(hermiticity_deviation(h) < 1e-15);
  Matrix nh = h;
  nh(0, 1) += cplx(0, 1e-3);
  CHECK(hermiticity_deviation(nh) > 5e-4);
}

TEST_CASE("matvec matches matmul with a column") {
  const Matrix a = random_matrix(6, 6, 9);
  std::vector<cplx> v(6);
  std::mt19937_64 rng(10);
  std::normal_distribution<double> dist;
  for (auto& z : v) z = cplx(dist(rng), dist(rng));
  const std::vector<cplx> w = matvec(a, v);
  for (int i = 0; i < 6; ++i) {
    cplx want = 0;
    for (int j = 0; j < 6; ++j) want += a(i, j) * v[j];
    CHECK(std::abs(w[i] - want) < 1e-12);
  }
  CHECK_THROWS_AS(matvec(a, std::vector<cplx>(5)), InputError);
}

TEST_CASE("serial and parallel matmul are bit-identical") {
  for (int n : {1, 2, 7, 64}) {
    const Matrix a = random_matrix(n, n, 100 + n);
    const Matrix b = random_matrix(n, n, 200 + n);
    CHECK(bits_equal(kernels::matmul_serial(a, b), kernels::matmul_parallel(a, b)));
  }
  // rectangular shapes
  const Matrix a = random_matrix(5, 9, 1);
  const Matrix b = random_matrix(9, 3, 2);
  CHECK(bits_equal(kernels::matmul_serial(a, b), kernels::matmul_parallel(a, b)));
}

TEST_CASE("serial and parallel kron are bit-identical") {
  for (int n : {1, 2, 7}) {
    const Matrix a = random_matrix(n, n, 300 + n);
    const Matrix b = random_matrix(n + 1, n + 1, 400 + n);
    CHECK(bits_equal(kernels::kron_serial(a, b), kernels::kron_parallel(a, b)));
  }
}

TEST_CASE("kernel mode switch routes both implementations") {
  mode_guard guard;
  const Matrix a = random_matrix(8, 8, 31);
  const Matrix b = random_matrix(8, 8, 32);
  kernels::set_mode(kernels::Mode::serial);
  const Matrix cs = a * b;
  const Matrix ks = kernels::kron(a, b);
  kernels::set_mode(kernels::Mode::parallel);
  const Matrix cp = a * b;
  const Matrix kp = kernels::kron(a, b);
  CHECK(bits_equal(cs, cp));
  CHECK(bits_equal(ks, kp));
}

TEST_CASE("kron dimensions and associativity") {
  const Matrix a = random_matrix(2, 2, 51);
  const Matrix b = random_matrix(3, 3, 52);
  const Matrix c = random_matrix(2, 2, 53);

  const Matrix ab = kernels::kron(a, b);
  CHECK(ab.rows == 6);
  CHECK(ab.cols == 6);
  // block (i,j) of a (x) b is a_ij * b
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          CHECK(std::abs(ab(3 * i + p, 3 * j + q) - a(i, j) * b(p, q)) == 0.0);

  CHECK(max_abs_diff(kernels::kron(kernels::kron(a, b), c),
                     kernels::kron(a, kernels::kron(b, c))) < 1e-12);

  // (a (x) b)(c (x) d) = ac (x) bd
  const Matrix d = random_matrix(3, 3, 54);
  CHECK(max_abs_diff(kernels::kron(a, b) * kernels::kron(c, d),
                     kernels::kron(a * c, b * d)) < 1e-12);
}
