#include "nashkit/fixtures.hpp"

namespace nashkit::fixtures {

namespace {

DualGraph chain_with_leaves(int chain, const std::vector<int>& leaf_attachments) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int i = 0; i < chain; ++i) {
    vs.push_back({i, -2, 0, {}});
    if (i > 0) es.emplace_back(i - 1, i);
  }
  VertexId next = chain;
  for (int at : leaf_attachments) {
    vs.push_back({next, -2, 0, {}});
    es.emplace_back(at, next);
    ++next;
  }
  return DualGraph(std::move(vs), std::move(es));
}

}  // namespace

DualGraph a_n(int n) {
  if (n < 1 || n > 10) throw InputError("A_n fixture needs 1 <= n <= 10");
  return chain_with_leaves(n, {});
}

DualGraph d_n(int n) {
  if (n < 4 || n > 10) throw InputError("D_n fixture needs 4 <= n <= 10");
  return chain_with_leaves(n - 2, {n - 3, n - 3});
}

DualGraph e_n(int n) {
  if (n < 6 || n > 8) throw InputError("E_n fixture needs n in {6,7,8}");
  return chain_with_leaves(n - 1, {2});
}

std::optional<DualGraph> graph(const std::string& name) {
  std::string n = name;
  if (n.rfind("fixtures/", 0) == 0) n = n.substr(9);
  if (n.size() < 2) return std::nullopt;
  int k = 0;
  for (std::size_t i = 1; i < n.size(); ++i) {
    if (n[i] < '0' || n[i] > '9') return std::nullopt;
    k = k * 10 + (n[i] - '0');
    if (k > 100) return std::nullopt;
  }
  switch (n[0]) {
    case 'A':
      if (k >= 1 && k <= 10) return a_n(k);
      break;
    case 'D':
      if (k >= 4 && k <= 10) return d_n(k);
      break;
    case 'E':
      if (k >= 6 && k <= 8) return e_n(k);
      break;
    default:
      break;
  }
  return std::nullopt;
}

std::vector<std::string> graph_names() {
  std::vector<std::string> names;
  for (int k = 1; k <= 10; ++k) names.push_back("A" + std::to_string(k));
  for (int k = 4; k <= 10; ++k) names.push_back("D" + std::to_string(k));
  for (int k = 6; k <= 8; ++k) names.push_back("E" + std::to_string(k));
  return names;
}

std::optional<BlowupCluster> cluster(const std::string& name) {
  std::string n = name;
  if (n.rfind("fixtures/", 0) == 0) n = n.substr(9);
  const ClusterPoint origin{};
  auto on = [](PointIndex parent, long slope) { return ClusterPoint{parent, std::nullopt, Tangent::finite(slope)}; };
  if (n == "single") return BlowupCluster({origin});
  if (n == "chain2") return BlowupCluster({origin, on(0, 0)});
  if (n == "chain3") return BlowupCluster({origin, on(0, 0), on(1, 1)});
  if (n == "satellite3") return BlowupCluster({origin, on(0, 0), ClusterPoint{1, 0, std::nullopt}});
  if (n == "twodir") return BlowupCluster({origin, on(0, 0), on(0, 1)});
  return std::nullopt;
}

std::vector<std::string> cluster_names() { return {"single", "chain2", "chain3", "satellite3", "twodir"}; }

}  // namespace nashkit::fixtures
