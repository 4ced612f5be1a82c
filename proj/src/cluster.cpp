#include "nashkit/cluster.hpp"

#include <algorithm>

namespace nashkit {

std::string to_string(const Tangent& t) { return t.at_infinity ? "inf" : to_string(t.slope); }

namespace {

std::string point_name(PointIndex i) { return "point " + std::to_string(i); }

}  // namespace

BlowupCluster::BlowupCluster(std::vector<ClusterPoint> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n == 0) throw InputError("a cluster needs at least the origin p_0");
  if (n > kMaxPoints) throw InputError("cluster has " + std::to_string(n) + " points; limit is " + std::to_string(kMaxPoints));

  carriers_.resize(n);
  direction_.resize(n);
  x_axis_.resize(n);
  y_axis_.resize(n);
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));

  const auto& p0 = points_[0];
  if (p0.parent || p0.satellite_of) throw InputError("point 0 is the origin and cannot have a parent");
  if (p0.tangent) throw InputError("point 0 is the origin and cannot carry a tangent");

  for (PointIndex i = 1; i < n; ++i) {
    const auto& p = points_[i];
    if (!p.parent) throw InputError(point_name(i) + " has no parent");
    if (*p.parent >= i) throw InputError(point_name(i) + ": parent index " + std::to_string(*p.parent) + " is not below its own index");
    auto& carriers = carriers_[i];
    carriers.push_back(*p.parent);
    if (p.satellite_of) {
      PointIndex s = *p.satellite_of;
      if (s >= i) throw InputError(point_name(i) + ": satellite_of index " + std::to_string(s) + " is not below its own index");
      if (s == *p.parent) throw InputError(point_name(i) + ": satellite_of repeats the parent");
      if (!adjacent[s][*p.parent])
        throw InputError(point_name(i) + ": components F_" + std::to_string(s) + " and F_" + std::to_string(*p.parent) +
                         " do not meet when it is blown up");
      if (p.tangent) throw InputError(point_name(i) + " is a satellite point; its position is fixed and takes no tangent");
      carriers.push_back(s);
    }
    std::sort(carriers.begin(), carriers.end());
    const PointIndex m = carriers.back();
    x_axis_[i] = m;
    if (carriers.size() == 2) y_axis_[i] = carriers.front();

    if (is_satellite(i)) {
      const PointIndex j = carriers.front();
      if (y_axis_[m] == j)
        direction_[i] = Tangent::finite(0);
      else if (x_axis_[m] == j)
        direction_[i] = Tangent::infinity();
      else
        throw InvariantViolation(point_name(i) + ": adjacent components without a common point");
    } else if (p.tangent) {
      const Tangent& t = *p.tangent;
      if (!t.at_infinity && t.slope == 0 && y_axis_[m])
        throw InputError(point_name(i) + ": tangent 0 on F_" + std::to_string(m) + " is its intersection with F_" +
                         std::to_string(*y_axis_[m]) + "; declare it as a satellite point");
      if (t.at_infinity && x_axis_[m])
        throw InputError(point_name(i) + ": tangent inf on F_" + std::to_string(m) + " is its intersection with F_" +
                         std::to_string(*x_axis_[m]) + "; declare it as a satellite point");
      direction_[i] = t;
    }
    if (direction_[i]) {
      for (PointIndex k = 1; k < i; ++k)
        if (chart_parent(k) == m && direction_[k] == direction_[i])
          throw InputError(point_name(i) + " coincides with point " + std::to_string(k) + " (same direction " +
                           to_string(*direction_[i]) + " on F_" + std::to_string(m) + ")");
    }

    // Blow up p_i.
    if (carriers.size() == 2) adjacent[carriers[0]][carriers[1]] = adjacent[carriers[1]][carriers[0]] = false;
    for (PointIndex c : carriers) adjacent[c][i] = adjacent[i][c] = true;
  }
}

std::optional<PointIndex> BlowupCluster::chart_parent(PointIndex i) const {
  if (carriers_[i].empty()) return std::nullopt;
  return carriers_[i].back();
}

bool BlowupCluster::is_proximate(PointIndex i, PointIndex j) const {
  const auto& c = carriers_[i];
  return std::find(c.begin(), c.end(), j) != c.end();
}

std::vector<PointIndex> BlowupCluster::chart_children(PointIndex i) const {
  std::vector<PointIndex> out;
  for (PointIndex k = 1; k < size(); ++k)
    if (chart_parent(k) == i) out.push_back(k);
  return out;
}

bool BlowupCluster::has_coordinates(PointIndex i) const {
  for (std::optional<PointIndex> p = i; p && *p != 0; p = chart_parent(*p))
    if (!direction_[*p]) return false;
  return true;
}

bool BlowupCluster::has_coordinates() const {
  for (PointIndex i = 1; i < size(); ++i)
    if (!direction_[i]) return false;
  return true;
}

DualGraph simulate(const BlowupCluster& cluster) {
  const std::size_t n = cluster.size();
  std::vector<long> self(n, 0);
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (PointIndex i = 0; i < n; ++i) {
    const auto& carriers = cluster.carriers(i);
    if (carriers.size() == 2) {
      if (!adjacent[carriers[0]][carriers[1]])
        throw InputError("point " + std::to_string(i) + ": satellite of non-adjacent components");
      adjacent[carriers[0]][carriers[1]] = adjacent[carriers[1]][carriers[0]] = false;
    }
    for (PointIndex c : carriers) {
      --self[c];
      adjacent[c][i] = adjacent[i][c] = true;
    }
    self[i] = -1;
  }
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (PointIndex i = 0; i < n; ++i) {
    vertices.push_back({static_cast<VertexId>(i), self[i], 0, {}});
    for (PointIndex j = i + 1; j < n; ++j)
      if (adjacent[i][j]) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  return DualGraph(std::move(vertices), std::move(edges));
}

ExactMatrix proximity_matrix(const BlowupCluster& cluster) {
  const std::size_t n = cluster.size();
  ExactMatrix p = ExactMatrix::identity(n);
  for (PointIndex i = 0; i < n; ++i)
    for (PointIndex j : cluster.carriers(i)) p(i, j) = -1;
  return p;
}

ExactMatrix intersection_from_proximity(const ExactMatrix& p) {
  if (!p.is_square()) throw InputError("proximity matrix must be square");
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (i == j && p(i, j) != 1) throw InputError("proximity matrix must have unit diagonal");
      if (j > i && p(i, j) != 0) throw InputError("proximity matrix must be lower triangular");
    }
  return -(p.transpose() * p);
}

std::vector<long> canonical_coeffs(const BlowupCluster& cluster) {
  std::vector<long> a(cluster.size(), 0);
  for (PointIndex i = 0; i < cluster.size(); ++i) {
    a[i] = 1;
    for (PointIndex j : cluster.carriers(i)) a[i] += a[j];
  }
  return a;
}

JointModel minimal_joint_model(const BlowupCluster& cluster, PointIndex e, PointIndex f) {
  const std::size_t n = cluster.size();
  if (e >= n || f >= n) throw InputError("point index out of range");
  std::vector<bool> keep(n, false);
  keep[e] = keep[f] = true;
  for (PointIndex i = n; i-- > 0;)
    if (keep[i])
      for (PointIndex c : cluster.carriers(i)) keep[c] = true;

  JointModel jm;
  std::vector<PointIndex> reindex(n, 0);
  for (PointIndex i = 0; i < n; ++i)
    if (keep[i]) {
      reindex[i] = jm.original.size();
      jm.original.push_back(i);
    }
  std::vector<ClusterPoint> pts;
  for (PointIndex i : jm.original) {
    ClusterPoint p = cluster.points()[i];
    if (p.parent) p.parent = reindex[*p.parent];
    if (p.satellite_of) p.satellite_of = reindex[*p.satellite_of];
    pts.push_back(std::move(p));
  }
  jm.cluster = BlowupCluster(std::move(pts));
  jm.e = reindex[e];
  jm.f = reindex[f];
  return jm;
}

DualGraph pair_graph(const BlowupCluster& cluster, PointIndex e, PointIndex f) {
  auto jm = minimal_joint_model(cluster, e, f);
  return simulate(jm.cluster)
      .with_label(static_cast<VertexId>(jm.e), "E")
      .with_label(static_cast<VertexId>(jm.f), "F");
}

namespace {

void extend(std::vector<ClusterPoint>& pts, std::vector<std::vector<bool>>& adjacent, std::size_t max_points,
            const std::function<void(const BlowupCluster&)>& visit) {
  visit(BlowupCluster(pts));
  const std::size_t i = pts.size();
  if (i == max_points) return;
  auto blow = [&](std::vector<PointIndex> carriers) {
    auto saved = adjacent;
    for (auto& row : adjacent) row.push_back(false);
    adjacent.emplace_back(i + 1, false);
    if (carriers.size() == 2) adjacent[carriers[0]][carriers[1]] = adjacent[carriers[1]][carriers[0]] = false;
    for (PointIndex c : carriers) adjacent[c][i] = adjacent[i][c] = true;
    ClusterPoint p;
    p.parent = carriers.back();
    if (carriers.size() == 2) p.satellite_of = carriers.front();
    pts.push_back(p);
    extend(pts, adjacent, max_points, visit);
    pts.pop_back();
    adjacent = std::move(saved);
  };
  for (PointIndex j = 0; j < i; ++j) blow({j});
  for (PointIndex j = 0; j < i; ++j)
    for (PointIndex m = j + 1; m < i; ++m)
      if (adjacent[j][m]) blow({j, m});
}

}  // namespace

void enumerate_clusters(std::size_t max_points, const std::function<void(const BlowupCluster&)>& visit) {
  if (max_points == 0) return;
  std::vector<ClusterPoint> pts{ClusterPoint{}};
  std::vector<std::vector<bool>> adjacent{{false}};
  extend(pts, adjacent, max_points, visit);
}

std::vector<BlowupCluster> all_clusters(std::size_t max_points) {
  std::vector<BlowupCluster> out;
  enumerate_clusters(max_points, [&](const BlowupCluster& c) { out.push_back(c); });
  return out;
}

std::vector<BlowupCluster> all_clusters_with_tangents(std::size_t max_points, const std::vector<Tangent>& tangents) {
  std::vector<BlowupCluster> out;
  enumerate_clusters(max_points, [&](const BlowupCluster& c) {
    std::vector<PointIndex> free_points;
    for (PointIndex i = 1; i < c.size(); ++i)
      if (!c.is_satellite(i)) free_points.push_back(i);
    std::vector<std::size_t> choice(free_points.size(), 0);
    for (;;) {
      auto pts = c.points();
      for (std::size_t k = 0; k < free_points.size(); ++k) pts[free_points[k]].tangent = tangents[choice[k]];
      try {
        out.emplace_back(std::move(pts));
      } catch (const InputError&) {
      }
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == tangents.size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  });
  return out;
}

}  // namespace nashkit
