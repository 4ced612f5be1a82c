#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nashkit/dual_graph.hpp"
#include "nashkit/exact_matrix.hpp"

namespace nashkit {

using PointIndex = std::size_t;

/// Direction on an exceptional line in the chart of its center: slope c of
/// y = c x, or the x = 0 direction.
struct Tangent {
  Rational slope;
  bool at_infinity = false;

  static Tangent infinity() { return {Rational(0), true}; }
  static Tangent finite(Rational c) { return {std::move(c), false}; }

  friend bool operator==(const Tangent&, const Tangent&) = default;
};

std::string to_string(const Tangent& t);

struct ClusterPoint {
  std::optional<PointIndex> parent;        // component F_parent carrying this point
  std::optional<PointIndex> satellite_of;  // second component for satellite points
  std::optional<Tangent> tangent;          // free points only

  friend bool operator==(const ClusterPoint&, const ClusterPoint&) = default;
};

/// Ordered constellation p_0, ..., p_k of infinitely near points over the
/// origin of a smooth surface; every point is blown up once, in order.
///
/// Local charts: at each blown-up point the (at most two) exceptional
/// components through it are the axes x = 0 ("x-axis component") and y = 0.
/// Blowing up with tangent c uses (x, y) -> (x, x(y + c)); the infinite
/// direction uses (x, y) -> (xy, x). The new component is x = 0.
class BlowupCluster {
 public:
  static constexpr std::size_t kMaxPoints = 24;

  BlowupCluster() = default;

  /// Validates ordering, satellite adjacency (by simulation) and, where
  /// supplied, tangent consistency. Throws InputError.
  explicit BlowupCluster(std::vector<ClusterPoint> points);

  const std::vector<ClusterPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Components carrying p_i before it is blown up (empty for p_0), ascending.
  const std::vector<PointIndex>& carriers(PointIndex i) const { return carriers_[i]; }
  bool is_satellite(PointIndex i) const { return carriers_[i].size() == 2; }
  /// The most recent carrier: p_i lies in the chart of this center.
  std::optional<PointIndex> chart_parent(PointIndex i) const;
  bool is_proximate(PointIndex i, PointIndex j) const;

  /// Direction of p_i in its chart parent's chart; known for satellites and
  /// for free points with tangent data.
  std::optional<Tangent> direction(PointIndex i) const { return direction_[i]; }
  /// Components through p_i along the axes x = 0 / y = 0 of its own chart.
  std::optional<PointIndex> x_axis(PointIndex i) const { return x_axis_[i]; }
  std::optional<PointIndex> y_axis(PointIndex i) const { return y_axis_[i]; }

  /// Points blown up inside the chart of p_i (points with chart parent i).
  std::vector<PointIndex> chart_children(PointIndex i) const;
  /// True if p_i and its chart ancestors all have known directions.
  bool has_coordinates(PointIndex i) const;
  bool has_coordinates() const;

  friend bool operator==(const BlowupCluster& a, const BlowupCluster& b) { return a.points_ == b.points_; }

 private:
  std::vector<ClusterPoint> points_;
  std::vector<std::vector<PointIndex>> carriers_;
  std::vector<std::optional<Tangent>> direction_;
  std::vector<std::optional<PointIndex>> x_axis_;
  std::vector<std::optional<PointIndex>> y_axis_;
};

/// Dual graph of the final model; vertex id i is the component F_i.
/// Starts from F_0 (-1); each blow-up adds a -1 vertex joined to its carriers,
/// lowers each carrier by one and separates two carriers.
DualGraph simulate(const BlowupCluster& cluster);

/// Lower unitriangular: P[i][i] = 1, P[i][j] = -1 iff p_i is proximate to p_j.
ExactMatrix proximity_matrix(const BlowupCluster& cluster);

/// -P^T P. Throws InputError unless P is lower unitriangular.
ExactMatrix intersection_from_proximity(const ExactMatrix& p);

/// Coefficients of K_Z = sum a_i F_i: a_i = 1 + sum of a_j over j with p_i proximate to p_j.
std::vector<long> canonical_coeffs(const BlowupCluster& cluster);

struct JointModel {
  BlowupCluster cluster;
  std::vector<PointIndex> original;  // original index of each kept point
  PointIndex e = 0;                  // reindexed e
  PointIndex f = 0;                  // reindexed f
};

/// Sub-cluster of all points p_e and p_f are infinitely near to (plus themselves).
JointModel minimal_joint_model(const BlowupCluster& cluster, PointIndex e, PointIndex f);

/// Dual graph of the minimal joint model with label "E" on p_e and "F" on p_f.
DualGraph pair_graph(const BlowupCluster& cluster, PointIndex e, PointIndex f);

/// Every cluster of 1..max_points points up to the ordering convention
/// (free points carry no tangent). Visits each sequence of carrier choices once.
void enumerate_clusters(std::size_t max_points, const std::function<void(const BlowupCluster&)>& visit);
std::vector<BlowupCluster> all_clusters(std::size_t max_points);

/// As enumerate_clusters, but every free point gets a tangent from `tangents`,
/// keeping only consistent assignments.
std::vector<BlowupCluster> all_clusters_with_tangents(std::size_t max_points, const std::vector<Tangent>& tangents);

}  // namespace nashkit
