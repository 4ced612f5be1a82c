#include "nashkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace nashkit {

namespace {

using Colors = std::vector<int>;

template <typename Key>
Colors rank_by(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors c(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    c[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return c;
}

int count_colors(const Colors& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// Color refinement to the coarsest equitable partition finer than `c`.
// The previous color is the primary sort key, so cell order is preserved.
Colors refine(const DualGraph& g, Colors c) {
  const std::size_t n = g.size();
  using Signature = std::pair<int, std::vector<std::pair<int, long>>>;
  for (;;) {
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = c[v];
      for (std::size_t w = 0; w < n; ++w)
        if (g.multiplicity(v, w) > 0) sig[v].second.emplace_back(c[w], g.multiplicity(v, w));
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    Colors next = rank_by(sig);
    if (count_colors(next) == count_colors(c)) return next;
    c = std::move(next);
  }
}

Colors seed_colors(const DualGraph& g) {
  using Seed = std::tuple<long, long, std::set<std::string>, long>;
  std::vector<Seed> seeds;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertices()[i];
    seeds.emplace_back(v.self_int, v.genus, v.labels, g.degree(i));
  }
  return rank_by(seeds);
}

bool are_twins(const DualGraph& g, std::size_t u, std::size_t v) {
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (w == u || w == v) continue;
    if (g.multiplicity(u, w) != g.multiplicity(v, w)) return false;
  }
  return true;
}

struct Search {
  const DualGraph& g;
  std::optional<std::string> best;
  std::vector<std::size_t> best_order;

  void run(const Colors& colors) {
    const int k = count_colors(colors);
    if (k == static_cast<int>(g.size())) {
      std::vector<std::size_t> order(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) order[static_cast<std::size_t>(colors[v])] = v;
      std::string enc = encode_in_order(g, order);
      if (!best || enc < *best) {
        best = std::move(enc);
        best_order = std::move(order);
      }
      return;
    }
    // First non-singleton cell, in color order.
    std::vector<int> cell_size(static_cast<std::size_t>(k), 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] == 1) ++target;

    std::vector<std::size_t> cell;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<std::size_t> explored;
    for (std::size_t v : cell) {
      bool twin = std::any_of(explored.begin(), explored.end(), [&](std::size_t u) { return are_twins(g, u, v); });
      if (twin) continue;
      explored.push_back(v);
      std::vector<int> split(g.size());
      for (std::size_t w = 0; w < g.size(); ++w)
        split[w] = 2 * colors[w] + ((colors[w] == target && w != v) ? 1 : 0);
      run(refine(g, rank_by(split)));
    }
  }
};

}  // namespace

std::string encode_in_order(const DualGraph& g, const std::vector<std::size_t>& order) {
  std::string out = "nk1;n=" + std::to_string(g.size()) + ";";
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& v = g.vertices()[order[k]];
    out += "v(" + std::to_string(v.self_int) + "," + std::to_string(v.genus) + ",{";
    bool first = true;
    for (const auto& label : v.labels) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(label.size()) + ':' + label;
    }
    out += "})";
    for (std::size_t j = 0; j < k; ++j) {
      long m = g.multiplicity(order[k], order[j]);
      if (m > 0) out += "e" + std::to_string(j) + "x" + std::to_string(m);
    }
    out += ';';
  }
  return out;
}

std::vector<std::size_t> canonical_order(const DualGraph& g) {
  if (g.size() == 0) return {};
  Search s{g, std::nullopt, {}};
  s.run(refine(g, seed_colors(g)));
  return s.best_order;
}

CanonicalKey canonical_key(const DualGraph& g) { return {encode_in_order(g, canonical_order(g))}; }

}  // namespace nashkit
