#pragma once

#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "knapgap/numeric.hpp"

namespace knapgap::detail {

// Single-source shortest paths on the cycle group Z_M with arcs
// rho -> rho + step_i (mod M) of nonnegative cost cost_i, source 0.
// Parents form a tree ordered by settle time, so witness reconstruction
// terminates even with zero-cost arcs.
template <typename Cost>
struct ModularPaths {
  std::vector<Cost> dist;
  std::vector<char> reached;
  std::vector<int> parent_arc;      // -1 at the source / unreached
  std::vector<size_t> parent_node;
};

template <typename Cost>
ModularPaths<Cost> modular_shortest_paths(size_t modulus,
                                          const std::vector<size_t>& steps,
                                          const std::vector<Cost>& costs) {
  ModularPaths<Cost> out;
  out.dist.assign(modulus, Cost(0));
  out.reached.assign(modulus, 0);
  out.parent_arc.assign(modulus, -1);
  out.parent_node.assign(modulus, 0);

  using Item = std::pair<Cost, size_t>;
  auto cmp = [](const Item& a, const Item& b) { return b.first < a.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);

  std::vector<char> settled(modulus, 0);
  out.reached[0] = 1;
  pq.push({Cost(0), 0});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (size_t i = 0; i < steps.size(); ++i) {
      if (steps[i] == 0) continue;  // self loop, never improves
      size_t v = u + steps[i];
      if (v >= modulus) v -= modulus;
      Cost nd = d + costs[i];
      if (!out.reached[v] || nd < out.dist[v]) {
        out.reached[v] = 1;
        out.dist[v] = nd;
        out.parent_arc[v] = static_cast<int>(i);
        out.parent_node[v] = u;
        pq.push({nd, v});
      }
    }
  }
  return out;
}

// Arc usage counts along the parent chain from `target` back to the source.
template <typename Cost>
std::vector<Int> arc_counts(const ModularPaths<Cost>& paths, size_t target,
                            size_t arc_total) {
  std::vector<Int> counts(arc_total, 0);
  size_t node = target;
  while (paths.parent_arc[node] >= 0) {
    counts[static_cast<size_t>(paths.parent_arc[node])] += 1;
    node = paths.parent_node[node];
  }
  return counts;
}

}  // namespace knapgap::detail
