#pragma once

#include <optional>
#include <vector>

#include "nashkit/cluster.hpp"

namespace helpers {

using nashkit::BlowupCluster;
using nashkit::ClusterPoint;
using nashkit::Tangent;

inline ClusterPoint root(std::optional<Tangent> t = std::nullopt) { return {std::nullopt, std::nullopt, t}; }
inline ClusterPoint free_on(std::size_t parent, std::optional<Tangent> t = std::nullopt) { return {parent, std::nullopt, t}; }
inline ClusterPoint free_on(std::size_t parent, long slope) { return {parent, std::nullopt, Tangent::finite(slope)}; }
inline ClusterPoint satellite(std::size_t parent, std::size_t other) { return {parent, other, std::nullopt}; }

inline BlowupCluster single() { return BlowupCluster({root()}); }
inline BlowupCluster chain2(long slope = 0) { return BlowupCluster({root(), free_on(0, slope)}); }
inline BlowupCluster chain3() { return BlowupCluster({root(), free_on(0, 0L), free_on(1, 1L)}); }
inline BlowupCluster satellite3() { return BlowupCluster({root(), free_on(0, 0L), satellite(1, 0)}); }
inline BlowupCluster two_directions() { return BlowupCluster({root(), free_on(0, 0L), free_on(0, 1L)}); }

}  // namespace helpers
