#include "qlur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>

#include "qlur/errors.hpp"
#include "qlur/tolerances.hpp"

namespace qlur {

namespace {

std::string subset_label(const std::vector<int>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(subset[i]);
  }
  out += '}';
  return out;
}

// Variance sum of the subset collectives along the noise family, expressed
// through the endpoint moments: both <K> and <K^2> are affine in q, so
// v(q) = sum_k lerp(second) - lerp(first)^2 is an exact per-k quadratic.
struct FamilyCurve {
  CollectiveMoments lo, hi;
  double q_lo, q_hi;

  double value(double q) const {
    const double t = q_hi > q_lo ? (q - q_lo) / (q_hi - q_lo) : 0.0;
    double v = 0;
    for (std::size_t k = 0; k < lo.first.size(); ++k) {
      const double first = (1.0 - t) * lo.first[k] + t * hi.first[k];
      const double second = (1.0 - t) * lo.second[k] + t * hi.second[k];
      v += second - first * first;
    }
    return std::max(v, 0.0);
  }
};

struct MinResult {
  double value;
  double q;
};

// Uniform grid scan plus one golden-section refinement pass around the grid
// argmin; never returns a value above the grid minimum.
MinResult family_minimum_scan(const FamilyCurve& curve, int grid) {
  if (grid < 2) throw InputError("family_minimum: grid resolution must be at least 2");
  double best_v = std::numeric_limits<double>::infinity();
  double best_q = curve.q_lo;
  int best_i = 0;
  for (int i = 0; i < grid; ++i) {
    const double q =
        curve.q_lo + (curve.q_hi - curve.q_lo) * static_cast<double>(i) / (grid - 1);
    const double v = curve.value(q);
    if (v < best_v) {
      best_v = v;
      best_q = q;
      best_i = i;
    }
  }
  double a = curve.q_lo + (curve.q_hi - curve.q_lo) *
                              static_cast<double>(std::max(0, best_i - 1)) / (grid - 1);
  double b = curve.q_lo + (curve.q_hi - curve.q_lo) *
                              static_cast<double>(std::min(grid - 1, best_i + 1)) / (grid - 1);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = curve.value(x1), f2 = curve.value(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = curve.value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = curve.value(x2);
    }
    const double x = f1 <= f2 ? x1 : x2;
    const double fx = std::min(f1, f2);
    if (fx < best_v) {
      best_v = fx;
      best_q = x;
    }
  }
  return {best_v, best_q};
}

double objective(const std::vector<Matrix>& ops, const std::vector<cplx>& psi) {
  double f = 0;
  for (const Matrix& op : ops) {
    const std::vector<cplx> u = matvec(op, psi);
    double mean = 0, second = 0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      mean += (std::conj(psi[i]) * u[i]).real();
      second += std::norm(u[i]);
    }
    f += second - mean * mean;
  }
  return f;
}

}  // namespace

BoundProvider BoundProvider::zero() { return BoundProvider{}; }

BoundProvider BoundProvider::constant(std::map<std::vector<int>, double> values) {
  for (const auto& [subset, value] : values)
    if (value < 0)
      throw InputError("constant bounds: negative value for subset " + subset_label(subset));
  BoundProvider p;
  p.strategy = BoundStrategy::constant;
  p.overrides = std::move(values);
  return p;
}

BoundProvider BoundProvider::commutator_at_state() {
  BoundProvider p;
  p.strategy = BoundStrategy::commutator_at_state;
  return p;
}

BoundProvider BoundProvider::family_minimum(NoiseFamily family, int grid_points) {
  if (grid_points < 2) throw InputError("family_minimum: grid resolution must be at least 2");
  if (!(family.q_lo >= 0 && family.q_hi <= 1 && family.q_lo <= family.q_hi))
    throw InputError("family_minimum: family range must be a nonempty subset of [0,1]");
  BoundProvider p;
  p.strategy = BoundStrategy::family_minimum;
  p.family = std::move(family);
  p.grid = grid_points;
  return p;
}

BoundProvider BoundProvider::reference_state(PureState psi) {
  BoundProvider p;
  p.strategy = BoundStrategy::reference_state;
  p.reference = std::move(psi);
  return p;
}

double commutator_bound(const Matrix& x, const Matrix& y, const DensityMatrix& rho) {
  if (hermiticity_deviation(x) > tol::hermiticity || hermiticity_deviation(y) > tol::hermiticity)
    throw InputError("commutator_bound: observables must be Hermitian");
  const Matrix c = kernels::matmul(x, y) - kernels::matmul(y, x);
  return std::abs(expectation(cplx(0, -1) * c, rho));
}

double min_variance_sum(const std::vector<Matrix>& ops, int dim, int restarts,
                        std::uint64_t seed) {
  if (ops.empty()) throw InputError("min_variance_sum: no operators");
  if (dim < 1) throw InputError("min_variance_sum: bad dimension");
  if (restarts < 1) throw InputError("min_variance_sum: need at least 1 restart");
  for (const Matrix& op : ops) {
    if (op.rows != dim || op.cols != dim)
      throw InputError("min_variance_sum: operator size does not match dim");
    if (hermiticity_deviation(op) > tol::hermiticity)
      throw InputError("min_variance_sum: operators must be Hermitian");
  }

  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<cplx> psi(dim);
    double norm2 = 0;
    for (auto& z : psi) {
      z = cplx(nd(rng), nd(rng));
      norm2 += std::norm(z);
    }
    for (auto& z : psi) z /= std::sqrt(norm2);

    double f = objective(ops, psi);
    double eta = 0.2;
    for (int it = 0; it < 2000 && eta > 1e-14 && f > 1e-13; ++it) {
      // gradient wrt conj(psi): sum_k (O^2 psi - 2 <O> O psi)
      std::vector<cplx> grad(dim, cplx(0));
      for (const Matrix& op : ops) {
        const std::vector<cplx> u = matvec(op, psi);
        double mean = 0;
        for (int i = 0; i < dim; ++i) mean += (std::conj(psi[i]) * u[i]).real();
        const std::vector<cplx> ou = matvec(op, u);
        for (int i = 0; i < dim; ++i) grad[i] += ou[i] - 2.0 * mean * u[i];
      }
      std::vector<cplx> cand(dim);
      double cnorm2 = 0;
      for (int i = 0; i < dim; ++i) {
        cand[i] = psi[i] - eta * grad[i];
        cnorm2 += std::norm(cand[i]);
      }
      if (cnorm2 <= 0) {
        eta *= 0.5;
        continue;
      }
      for (auto& z : cand) z /= std::sqrt(cnorm2);
      const double fc = objective(ops, cand);
      if (fc <= f) {
        psi = std::move(cand);
        f = fc;
        eta *= 1.25;
      } else {
        eta *= 0.5;
      }
    }
    best = std::min(best, f);
  }
  return std::max(best, 0.0);
}

SubsetBound bound_for(const BoundProvider& provider, const ObservableFamily& family,
                      const std::vector<int>& subset, const DensityMatrix& context) {
  if (family.dims != context.dims)
    throw InputError("bound_for: family dims do not match the context state dims");

  if (provider.strategy != BoundStrategy::constant) {
    const auto it = provider.overrides.find(subset);
    if (it != provider.overrides.end()) {
      if (it->second < 0) throw InputError("bound_for: negative override value");
      return SubsetBound{subset, it->second, "override"};
    }
  }

  switch (provider.strategy) {
    case BoundStrategy::zero:
      return SubsetBound{subset, 0.0, "zero"};

    case BoundStrategy::constant: {
      const auto it = provider.overrides.find(subset);
      if (it == provider.overrides.end())
        return SubsetBound{subset, 0.0, "constant (no entry, default 0)"};
      return SubsetBound{subset, it->second, "constant"};
    }

    case BoundStrategy::commutator_at_state: {
      if (family.n_observables() != 2)
        throw InputError(
            "bound_for: commutator strategy needs exactly 2 observables per site (got " +
            std::to_string(family.n_observables()) + ")");
      const Matrix x = collective_on_subset(family, 0, subset);
      const Matrix y = collective_on_subset(family, 1, subset);
      const DensityMatrix reduced = partial_trace(context, subset);
      const double value = commutator_bound(x, y, reduced);
      return SubsetBound{subset, value, "commutator |<-i[X1,X2]>| at the evaluated state"};
    }

    case BoundStrategy::reference_state: {
      if (!provider.reference)
        throw InputError("bound_for: reference strategy configured without a reference state");
      if (provider.reference->dims != family.dims)
        throw InputError("bound_for: reference state dims do not match the family dims");
      const double value = collective_variance_sum(family, subset, density(*provider.reference));
      return SubsetBound{subset, value, "variance sum at the reference state"};
    }

    case BoundStrategy::family_minimum: {
      if (!provider.family)
        throw InputError("bound_for: family-minimum strategy configured without a family");
      if (provider.family->target.dims != family.dims)
        throw InputError("bound_for: noise-family dims do not match the observable dims");
      FamilyCurve curve{collective_moments(family, subset, provider.family->at(provider.family->q_lo)),
                        collective_moments(family, subset, provider.family->at(provider.family->q_hi)),
                        provider.family->q_lo, provider.family->q_hi};
      const MinResult res = family_minimum_scan(curve, provider.grid);
      char buf[96];
      std::snprintf(buf, sizeof(buf), "family-min (grid=%d, q*=%.6g)", provider.grid, res.q);
      return SubsetBound{subset, std::max(res.value, 0.0), buf};
    }
  }
  throw InputError("bound_for: unknown strategy");
}

}  // namespace qlur
