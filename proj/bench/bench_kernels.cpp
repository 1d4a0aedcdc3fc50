// Compares the serial and OpenMP kernel paths on the operations that dominate
// criterion evaluation: dense matmul, Kronecker products, partial traces, and
// a full end-to-end criterion run on the 3-qutrit demo family.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qlur/analysis.hpp"
#include "qlur/criteria.hpp"
#include "qlur/matrix.hpp"
#include "qlur/states.hpp"
#include "qlur/tensor.hpp"

namespace {

using qlur::cplx;
using qlur::Matrix;

Matrix random_matrix(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(n, n);
  for (auto& z : m.a) z = cplx(dist(rng), dist(rng));
  return m;
}

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

volatile double g_sink = 0.0;

void report(const std::string& label, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.3f ms %10.3f ms %8.2fx\n", label.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

double run_mode(qlur::kernels::Mode mode, const std::function<double()>& fn, int reps) {
  const auto saved = qlur::kernels::mode();
  qlur::kernels::set_mode(mode);
  const double ms = time_best_of(reps, [&] { g_sink = fn(); });
  qlur::kernels::set_mode(saved);
  return ms;
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("kernel benchmark (%d thread%s available)\n", threads, threads == 1 ? "" : "s");
  std::printf("%-34s %13s %13s %9s\n", "operation", "serial", "parallel", "speedup");

  for (int n : {128, 256, 729}) {
    const Matrix a = random_matrix(n, 11);
    const Matrix b = random_matrix(n, 22);
    auto work = [&]() -> double {
      Matrix c = a * b;
      return c(0, 0).real();
    };
    report("matmul " + std::to_string(n) + "x" + std::to_string(n),
           run_mode(qlur::kernels::Mode::serial, work, 3),
           run_mode(qlur::kernels::Mode::parallel, work, 3));
  }

  {
    const Matrix a = random_matrix(27, 33);
    const Matrix b = random_matrix(27, 44);
    auto work = [&]() -> double {
      Matrix c = qlur::kernels::kron(a, b);
      return c(0, 0).real();
    };
    report("kron 27x27 (x) 27x27", run_mode(qlur::kernels::Mode::serial, work, 5),
           run_mode(qlur::kernels::Mode::parallel, work, 5));
  }

  {
    const qlur::DensityMatrix rho = qlur::random_density({3, 3, 3, 3, 3, 3}, 7);
    auto work = [&]() -> double {
      const qlur::DensityMatrix red = qlur::partial_trace(rho, {0, 1, 2, 3});
      return red.m(0, 0).real();
    };
    report("partial_trace 729 -> 81", run_mode(qlur::kernels::Mode::serial, work, 5),
           run_mode(qlur::kernels::Mode::parallel, work, 5));
  }

  {
    const qlur::DemoConfig cfg = qlur::demo_config("qutrit3");
    const qlur::DensityMatrix rho = cfg.family.at(0.5);
    auto work = [&]() -> double {
      const qlur::CriterionReport rep = qlur::gme_criterion(rho, cfg.observables, cfg.provider);
      return rep.f;
    };
    report("gme_criterion qutrit3 @ q=0.5", run_mode(qlur::kernels::Mode::serial, work, 3),
           run_mode(qlur::kernels::Mode::parallel, work, 3));
  }

  {
    const qlur::DemoConfig cfg = qlur::demo_config("w6");
    auto work = [&]() -> double {
      const auto rows = qlur::sweep(cfg.family, cfg.observables, cfg.provider, 21);
      return rows.back().f;
    };
    report("sweep w6, 21 grid points", run_mode(qlur::kernels::Mode::serial, work, 2),
           run_mode(qlur::kernels::Mode::parallel, work, 2));
  }

  std::printf("(best-of-N wall times; identical results are asserted in the test suite)\n");
  return 0;
}
