#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nashkit/cluster.hpp"
#include "nashkit/dual_graph.hpp"

namespace nashkit::fixtures {

// Standard ADE dual graphs: every vertex -2, genus 0, ids 0..n-1.
DualGraph a_n(int n);  // 1 <= n <= 10
DualGraph d_n(int n);  // 4 <= n <= 10
DualGraph e_n(int n);  // n in {6, 7, 8}

/// "A3", "D5", "E8", ...; also accepts a "fixtures/" prefix.
std::optional<DualGraph> graph(const std::string& name);
std::vector<std::string> graph_names();

/// Small clusters with tangent data: "single", "chain2", "chain3",
/// "satellite3", "twodir". Also accepts a "fixtures/" prefix.
std::optional<BlowupCluster> cluster(const std::string& name);
std::vector<std::string> cluster_names();

}  // namespace nashkit::fixtures
