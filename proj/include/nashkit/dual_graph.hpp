#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nashkit/exact_matrix.hpp"

namespace nashkit {

using VertexId = std::int64_t;

struct Vertex {
  VertexId id = 0;
  long self_int = 0;
  long genus = 0;
  std::set<std::string> labels;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Dual graph of an exceptional divisor: one vertex per component, weighted by
/// self-intersection and genus; one edge per intersection point.
///
/// Immutable after construction. Vertex order is the order supplied and fixes
/// the row order of intersection_matrix().
class DualGraph {
 public:
  DualGraph() = default;

  /// Throws InputError on duplicate ids, dangling edges, loops or negative genus.
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }

  std::size_t index_of(VertexId id) const;
  std::optional<std::size_t> find(VertexId id) const;

  /// Number of edges between the vertices at positions i and j.
  long multiplicity(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  long degree(std::size_t i) const;
  bool is_connected() const;

  DualGraph with_label(VertexId id, const std::string& label) const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<long>> adjacency_;
};

/// M[i][i] = self-intersection, M[i][j] = number of edges between i and j.
ExactMatrix intersection_matrix(const DualGraph& g);

}  // namespace nashkit
