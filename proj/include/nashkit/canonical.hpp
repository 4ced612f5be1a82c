#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nashkit/dual_graph.hpp"

namespace nashkit {

/// Byte string that is equal for two decorated graphs iff they are isomorphic
/// (respecting self-intersections, genera and label sets).
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const DualGraph& g);

/// Vertex positions in canonical order: result[k] is the position (in g) of
/// the vertex placed k-th by the canonical labeling.
std::vector<std::size_t> canonical_order(const DualGraph& g);

/// Encoding of g under a specific vertex order; canonical_key is the
/// lexicographic minimum of this over all orders.
std::string encode_in_order(const DualGraph& g, const std::vector<std::size_t>& order);

}  // namespace nashkit
