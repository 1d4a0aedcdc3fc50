#include "qlur/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qlur/errors.hpp"
#include "qlur/tolerances.hpp"

namespace qlur {

namespace {

std::string fmt_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

DemoConfig w_demo(int n) {
  // Three all-positive sites, then max(1, n-3) sites with flipped x and y
  // components; z stays positive everywhere.
  const int flips = std::max(1, n - 3);
  std::vector<std::array<int, 3>> signs(n, {1, 1, 1});
  for (int i = n - flips; i < n; ++i) signs[i] = {-1, -1, 1};
  DemoConfig cfg;
  cfg.name = "w" + std::to_string(n);
  cfg.family = NoiseFamily{w_state(n), 0.0, 1.0};
  cfg.observables = pauli_family(signs);
  cfg.provider = BoundProvider::family_minimum(cfg.family, 1001);
  return cfg;
}

DemoConfig qutrit_demo() {
  // Signed spin-1 triple (s_i Jx, s_i Jy, Jz) with s = (+1, -1, -1).
  const SpinTriple t = spin_matrices(1.0);
  const double s[3] = {1.0, -1.0, -1.0};
  std::vector<std::vector<Matrix>> per_site;
  for (int i = 0; i < 3; ++i)
    per_site.push_back({cplx(s[i]) * t.jx, cplx(s[i]) * t.jy, t.jz});
  DemoConfig cfg;
  cfg.name = "qutrit3";
  cfg.family = NoiseFamily{qutrit_phi(), 0.0, 1.0};
  cfg.observables = make_family({3, 3, 3}, std::move(per_site));
  cfg.provider = BoundProvider::family_minimum(cfg.family, 1001);
  return cfg;
}

}  // namespace

DemoConfig demo_config(const std::string& name) {
  if (name == "qutrit3") return qutrit_demo();
  if (name.size() >= 2 && name[0] == 'w') {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 2 && n <= 12) return w_demo(n);
  }
  throw InputError("demo_config: unknown demo '" + name +
                   "' (available: w3, w4, w5, w6, qutrit3; wN accepted for N = 2..12)");
}

std::vector<SweepRow> sweep(const NoiseFamily& family, const ObservableFamily& observables,
                            const BoundProvider& provider, int grid) {
  if (grid < 2) throw InputError("sweep: grid must be at least 2");
  if (!(family.q_lo <= family.q_hi)) throw InputError("sweep: empty family range");

  std::vector<SweepRow> rows(grid);
  std::vector<std::exception_ptr> errors(grid);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < grid; ++i) {
    const double q =
        family.q_lo + (family.q_hi - family.q_lo) * static_cast<double>(i) / (grid - 1);
    try {
      const CriterionReport rep = gme_criterion(family.at(q), observables, provider);
      rows[i] = SweepRow{q, rep.f, rep.f_total, rep.min_bound, rep.argmin().partition};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (int i = 0; i < grid; ++i) {
    if (!errors[i]) continue;
    const double q =
        family.q_lo + (family.q_hi - family.q_lo) * static_cast<double>(i) / (grid - 1);
    try {
      std::rethrow_exception(errors[i]);
    } catch (const UnsoundBoundError& e) {
      throw UnsoundBoundError(e.subset, e.radicand, "sweep at q=" + fmt_g12(q));
    } catch (const std::exception& e) {
      throw InputError("sweep at q=" + fmt_g12(q) + ": " + e.what());
    }
  }
  return rows;
}

ThresholdResult find_threshold(const NoiseFamily& family, const ObservableFamily& observables,
                               const BoundProvider& provider, double lo, double hi) {
  if (!(lo < hi)) throw InputError("find_threshold: need lo < hi");
  auto f_at = [&](double q) {
    return gme_criterion(family.at(q), observables, provider).f;
  };
  const double f_lo = f_at(lo);
  const double f_hi = f_at(hi);
  if ((f_lo >= 0) == (f_hi >= 0)) throw NoSignChangeError(f_lo, f_hi);

  double a = lo, b = hi, fa = f_lo;
  int iterations = 0;
  while (b - a >= tol::bisection) {
    const double mid = 0.5 * (a + b);
    const double fm = f_at(mid);
    ++iterations;
    if ((fm >= 0) == (fa >= 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  ThresholdResult res;
  res.q_star = 0.5 * (a + b);
  res.lo = a;
  res.hi = b;
  res.iterations = iterations;
  res.sign_lo = f_lo >= 0 ? 1 : -1;
  res.sign_hi = f_hi >= 0 ? 1 : -1;
  return res;
}

std::vector<FullsepRow> compare_fullsep(int n_lo, int n_hi) {
  if (n_lo > n_hi) throw InputError("compare_fullsep: empty range");
  std::vector<FullsepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const DemoConfig cfg = demo_config("w" + std::to_string(n));
    FullsepRow row;
    row.n = n;
    row.q_fullsep = fully_separable_threshold(n);
    try {
      row.q_gme = find_threshold(cfg.family, cfg.observables, cfg.provider,
                                 cfg.family.q_lo, cfg.family.q_hi).q_star;
    } catch (const NoSignChangeError&) {
      row.q_gme = std::nullopt;  // criterion never fires on this family
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "q,f,f_total,min_bound,argmin_partition\n";
  for (const SweepRow& r : rows) {
    out += fmt_g12(r.q);
    out += ',';
    out += fmt_g12(r.f);
    out += ',';
    out += fmt_g12(r.f_total);
    out += ',';
    out += fmt_g12(r.min_bound);
    out += ',';
    out += r.argmin_partition.render();
    out += '\n';
  }
  return out;
}

}  // namespace qlur
