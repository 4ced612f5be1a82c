#include "nashkit/dual_graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace nashkit {

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::unordered_map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (!index.emplace(v.id, i).second) throw InputError("duplicate vertex id " + std::to_string(v.id));
    if (v.genus < 0) throw InputError("negative genus on vertex " + std::to_string(v.id));
  }
  adjacency_.assign(vertices_.size(), std::vector<long>(vertices_.size(), 0));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [a, b] = edges_[e];
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InputError("edge " + std::to_string(e) + " references a missing vertex (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    if (a == b) throw InputError("edge " + std::to_string(e) + " is a loop on vertex " + std::to_string(a));
    ++adjacency_[ia->second][ib->second];
    ++adjacency_[ib->second][ia->second];
  }
}

std::optional<std::size_t> DualGraph::find(VertexId id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t DualGraph::index_of(VertexId id) const {
  auto i = find(id);
  if (!i) throw InputError("no vertex with id " + std::to_string(id));
  return *i;
}

long DualGraph::degree(std::size_t i) const {
  long d = 0;
  for (long m : adjacency_[i]) d += m;
  return d;
}

bool DualGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < size(); ++j)
      if (adjacency_[i][j] > 0 && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

DualGraph DualGraph::with_label(VertexId id, const std::string& label) const {
  auto vs = vertices_;
  vs[index_of(id)].labels.insert(label);
  return DualGraph(std::move(vs), edges_);
}

ExactMatrix intersection_matrix(const DualGraph& g) {
  const std::size_t n = g.size();
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? g.vertices()[i].self_int : g.multiplicity(i, j);
  return m;
}

}  // namespace nashkit
