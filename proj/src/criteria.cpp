#include "qlur/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qlur/errors.hpp"
#include "qlur/tolerances.hpp"

namespace qlur {

namespace {

// sqrt(v - u) under the radicand policy: dust in [tol::radicand, 0) clamps to
// zero; anything lower means the bound is unsound for this state.
double sqrt_radicand(double v, double u, const std::vector<int>& subset, const char* context) {
  const double r = v - u;
  if (r < tol::radicand) throw UnsoundBoundError(subset, r, context);
  return r <= 0 ? 0.0 : std::sqrt(r);
}

std::vector<int> all_sites(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace

const PartitionBound& CriterionReport::argmin() const {
  if (partition_bounds.empty()) throw InputError("CriterionReport: no partition bounds");
  const PartitionBound* best = &partition_bounds[0];
  for (const PartitionBound& b : partition_bounds)
    if (b.total < best->total) best = &b;
  return *best;
}

double f_total(const DensityMatrix& rho, const ObservableFamily& family) {
  if (family.dims != rho.dims)
    throw InputError("f_total: family dims do not match the state dims");
  return collective_variance_sum(family, all_sites(static_cast<int>(rho.dims.size())), rho);
}

PartitionBound partition_bound(const DensityMatrix& rho, const ObservableFamily& family,
                               const Bipartition& partition, const BoundProvider& provider) {
  if (family.dims != rho.dims)
    throw InputError("partition_bound: family dims do not match the state dims");
  PartitionBound out;
  out.partition = partition;
  out.v_left = collective_variance_sum(family, partition.left, rho);
  out.v_right = collective_variance_sum(family, partition.right, rho);
  out.u_left = bound_for(provider, family, partition.left, rho).value;
  out.u_right = bound_for(provider, family, partition.right, rho).value;
  out.w = sqrt_radicand(out.v_left, out.u_left, partition.left, "partition bound, left subset") -
          sqrt_radicand(out.v_right, out.u_right, partition.right, "partition bound, right subset");
  out.total = out.u_left + out.u_right + out.w * out.w;
  return out;
}

namespace {

// Shared tail of the two criterion paths: fill bounds, take the deterministic
// minimum (first index wins ties), set f and the verdict.
void finish_report(CriterionReport& rep) {
  rep.min_bound = rep.partition_bounds[0].total;
  for (const PartitionBound& b : rep.partition_bounds)
    rep.min_bound = std::min(rep.min_bound, b.total);
  rep.f = rep.f_total - rep.min_bound;
  rep.verdict = rep.f < tol::verdict ? Verdict::detected : Verdict::inconclusive;
}

}  // namespace

CriterionReport gme_criterion(const DensityMatrix& rho, const ObservableFamily& family,
                              const BoundProvider& provider) {
  if (rho.dims.size() < 2) throw InputError("gme_criterion: need at least 2 subsystems");
  if (family.dims != rho.dims)
    throw InputError("gme_criterion: family dims do not match the state dims");

  const std::vector<Bipartition> parts =
      enumerate_bipartitions(static_cast<int>(rho.dims.size()));
  CriterionReport rep;
  rep.criterion = "gme";
  rep.f_total = f_total(rho, family);
  rep.partition_bounds.resize(parts.size());

  std::vector<std::exception_ptr> errors(parts.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    try {
      rep.partition_bounds[i] = partition_bound(rho, family, parts[i], provider);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  finish_report(rep);
  return rep;
}

double lur_bipartite(const DensityMatrix& rho_ab, const ObservableFamily& family,
                     double u_a, double u_b) {
  if (rho_ab.dims.size() != 2) throw InputError("lur_bipartite: need exactly 2 subsystems");
  if (family.dims != rho_ab.dims)
    throw InputError("lur_bipartite: family dims do not match the state dims");
  if (u_a < 0 || u_b < 0) throw InputError("lur_bipartite: bounds must be nonnegative");
  const double f2 = collective_variance_sum(family, {0, 1}, rho_ab);
  const double va = collective_variance_sum(family, {0}, rho_ab);
  const double vb = collective_variance_sum(family, {1}, rho_ab);
  const double m = sqrt_radicand(va, u_a, {0}, "lur_bipartite, subsystem A") -
                   sqrt_radicand(vb, u_b, {1}, "lur_bipartite, subsystem B");
  return f2 - (u_a + u_b + m * m);
}

std::vector<double> FullSeparabilityReport::defined_values() const {
  std::vector<double> out{f_ab, f_ac, f_bc};
  for (const auto& c : combined)
    if (c) out.push_back(*c);
  return out;
}

FullSeparabilityReport full_separability_tripartite(const DensityMatrix& rho,
                                                    const ObservableFamily& family,
                                                    const BoundProvider& provider) {
  if (rho.dims.size() != 3)
    throw InputError("full_separability_tripartite: need exactly 3 subsystems");
  if (family.dims != rho.dims)
    throw InputError("full_separability_tripartite: family dims do not match the state dims");

  double u[3], sv[3];
  for (int i = 0; i < 3; ++i) {
    u[i] = bound_for(provider, family, {i}, rho).value;
    sv[i] = collective_variance_sum(family, {i}, rho);
  }

  auto pairwise = [&](int a, int b) {
    return lur_bipartite(partial_trace(rho, {a, b}), restrict_family(family, {a, b}), u[a], u[b]);
  };

  FullSeparabilityReport rep;
  rep.f_ab = pairwise(0, 1);
  rep.f_ac = pairwise(0, 2);
  rep.f_bc = pairwise(1, 2);

  const double f_full = f_total(rho, family);
  const double u_sum = u[0] + u[1] + u[2];
  const struct {
    int a, b, c;
    double f_pair;
  } combos[3] = {{0, 1, 2, rep.f_ab}, {0, 2, 1, rep.f_ac}, {1, 2, 0, rep.f_bc}};

  for (int idx = 0; idx < 3; ++idx) {
    const auto& [a, b, c, f_pair] = combos[idx];
    if (f_pair < tol::verdict) {
      // sqrt(F^pair) undefined; the pairwise violation already decides.
      rep.skipped[idx] = true;
      continue;
    }
    const double m_pair = sqrt_radicand(sv[a], u[a], {a}, "full separability, pair term") -
                          sqrt_radicand(sv[b], u[b], {b}, "full separability, pair term");
    const double m_mixed = std::sqrt(std::max(f_pair, 0.0)) -
                           sqrt_radicand(sv[c], u[c], {c}, "full separability, single term");
    rep.combined[idx] = f_full - (u_sum + m_pair * m_pair + m_mixed * m_mixed);
  }

  rep.not_fully_separable = false;
  for (double v : rep.defined_values())
    if (v < tol::verdict) rep.not_fully_separable = true;
  return rep;
}

CriterionReport spin_gme_criterion(const DensityMatrix& rho,
                                   const std::vector<double>& j_per_site,
                                   const SpinConfig& config) {
  const int n = static_cast<int>(rho.dims.size());
  if (n < 2) throw InputError("spin_gme_criterion: need at least 2 sites");
  if (static_cast<int>(j_per_site.size()) != n)
    throw InputError("spin_gme_criterion: j list length does not match the site count");
  if (static_cast<int>(config.h.size()) != n || static_cast<int>(config.g.size()) != n)
    throw InputError("spin_gme_criterion: weight lengths do not match the site count");

  const ObservableFamily family = spin_family(j_per_site, config);
  if (family.dims != rho.dims)
    throw InputError("spin_gme_criterion: 2j+1 does not match the state dims");

  // <Jz_i> on the single-site reductions; each subset bound is |sum h g <Jz>|.
  std::vector<double> jz_mean(n);
  for (int i = 0; i < n; ++i)
    jz_mean[i] = expectation(spin_matrices(j_per_site[i]).jz, partial_trace(rho, {i}));
  auto subset_u = [&](const std::vector<int>& subset) {
    double acc = 0;
    for (int i : subset) acc += config.h[i] * config.g[i] * jz_mean[i];
    return std::abs(acc);
  };

  const std::vector<Bipartition> parts = enumerate_bipartitions(n);
  CriterionReport rep;
  rep.criterion = "spin_gme";
  rep.f_total = f_total(rho, family);
  rep.partition_bounds.resize(parts.size());

  std::vector<std::exception_ptr> errors(parts.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    try {
      PartitionBound b;
      b.partition = parts[i];
      b.v_left = collective_variance_sum(family, parts[i].left, rho);
      b.v_right = collective_variance_sum(family, parts[i].right, rho);
      b.u_left = subset_u(parts[i].left);
      b.u_right = subset_u(parts[i].right);
      b.w = sqrt_radicand(b.v_left, b.u_left, parts[i].left, "spin bound, left subset") -
            sqrt_radicand(b.v_right, b.u_right, parts[i].right, "spin bound, right subset");
      b.total = b.u_left + b.u_right + b.w * b.w;
      rep.partition_bounds[i] = std::move(b);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  finish_report(rep);
  return rep;
}

}  // namespace qlur
