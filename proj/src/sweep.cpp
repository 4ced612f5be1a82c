#include "nashkit/sweep.hpp"

#include <omp.h>

#include <exception>

#include "nashkit/dual_graph.hpp"

namespace nashkit {

ClusterLatticeCheck check_cluster_lattice(const BlowupCluster& cluster) {
  ClusterLatticeCheck out;
  ExactMatrix m = intersection_matrix(simulate(cluster));
  out.proximity_identity = m == intersection_from_proximity(proximity_matrix(cluster));
  out.det = determinant(m);
  out.unimodular = out.det == 1 || out.det == -1;
  if (out.det == 0) return out;
  auto report = check_inverse_nonpositive(m);
  out.strictly_negative = report.all_negative;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.inverse_entry_sum += report.inverse(i, j);
  return out;
}

namespace {

SweepSummary summarize(std::vector<ClusterLatticeCheck> checks) {
  SweepSummary s;
  s.clusters = checks.size();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    s.proximity_identity += c.proximity_identity;
    s.unimodular += c.unimodular;
    s.strictly_negative += c.strictly_negative;
    if (!(c.proximity_identity && c.unimodular && c.strictly_negative)) s.failures.push_back(i);
  }
  s.checks = std::move(checks);
  return s;
}

}  // namespace

SweepSummary sweep_lattice_serial(const std::vector<BlowupCluster>& clusters) {
  std::vector<ClusterLatticeCheck> checks;
  checks.reserve(clusters.size());
  for (const auto& c : clusters) checks.push_back(check_cluster_lattice(c));
  return summarize(std::move(checks));
}

SweepSummary sweep_lattice_parallel(const std::vector<BlowupCluster>& clusters) {
  std::vector<ClusterLatticeCheck> checks(clusters.size());
  const auto n = static_cast<std::ptrdiff_t>(clusters.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      checks[i] = check_cluster_lattice(clusters[i]);
    } catch (...) {
#pragma omp critical(nashkit_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(std::move(checks));
}

}  // namespace nashkit
