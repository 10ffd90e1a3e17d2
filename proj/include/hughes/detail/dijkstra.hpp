#pragma once

#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace hughes {

// Label-setting search grown outward from the sources. hop_cost(settled, next, w)
// is the cost of reaching `settled` from `next`, i.e. of the hop next -> settled.
template <typename HopCost>
Field<double> multi_source_distance(const WeightedGraph& g, std::span<const Index> sources,
                                    HopCost&& hop_cost) {
  const Index n = g.vertex_count();
  Field<double> dist = Field<double>::Constant(n, std::numeric_limits<double>::infinity());
  std::vector<char> settled(static_cast<std::size_t>(n), 0);

  using Item = std::pair<double, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (Index s : sources) {
    dist[s] = 0.0;
    queue.emplace(0.0, s);
  }
  while (!queue.empty()) {
    auto [d, y] = queue.top();
    queue.pop();
    if (settled[y]) continue;
    settled[y] = 1;
    for (const Neighbor& nb : g.neighbors(y)) {
      const Index x = nb.vertex;
      if (settled[x]) continue;
      const double candidate = d + hop_cost(y, x, nb.weight);
      if (candidate < dist[x]) {
        dist[x] = candidate;
        queue.emplace(candidate, x);
      }
    }
  }
  return dist;
}

}  // namespace hughes
