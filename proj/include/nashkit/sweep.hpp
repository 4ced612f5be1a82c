#pragma once

#include <cstddef>
#include <vector>

#include "nashkit/cluster.hpp"

namespace nashkit {

/// Lattice facts for one cluster's final model.
struct ClusterLatticeCheck {
  Rational det;
  bool proximity_identity = false;  // M from simulation == -P^T P
  bool unimodular = false;          // det = +-1
  bool strictly_negative = false;   // every entry of M^{-1} < 0
  Rational inverse_entry_sum;       // digest for comparing runs

  friend bool operator==(const ClusterLatticeCheck&, const ClusterLatticeCheck&) = default;
};

ClusterLatticeCheck check_cluster_lattice(const BlowupCluster& cluster);

struct SweepSummary {
  std::size_t clusters = 0;
  std::size_t proximity_identity = 0;
  std::size_t unimodular = 0;
  std::size_t strictly_negative = 0;
  std::vector<std::size_t> failures;      // positions failing any check, ascending
  std::vector<ClusterLatticeCheck> checks;  // one per input cluster

  bool all_pass() const { return failures.empty(); }
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

/// Reference loop.
SweepSummary sweep_lattice_serial(const std::vector<BlowupCluster>& clusters);
/// Same results, clusters split across OpenMP threads.
SweepSummary sweep_lattice_parallel(const std::vector<BlowupCluster>& clusters);

}  // namespace nashkit
