#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "hughes/eikonal.hpp"
#include "hughes/graph.hpp"

namespace hughes::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Index uniform_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

struct RandomGraphSpec {
  Index n = 0;
  std::vector<EdgeSpec> edges;
  std::vector<Index> boundary;

  WeightedGraph build() const { return build_graph(n, edges, boundary); }
};

// Random spanning tree plus extra edges, weights in [w_lo, w_hi], and a
// boundary of 1..max_boundary vertices.
inline RandomGraphSpec random_graph(Rng& rng, Index n, double extra_edge_prob = 0.3,
                                    double w_lo = 0.1, double w_hi = 2.0,
                                    Index max_boundary = 3) {
  RandomGraphSpec spec;
  spec.n = n;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  auto add = [&](Index a, Index b) {
    if (a == b || adj[a][b]) return;
    adj[a][b] = adj[b][a] = 1;
    spec.edges.push_back({a, b, uniform(rng, w_lo, w_hi)});
  };
  for (Index v = 1; v < n; ++v) add(v, uniform_index(rng, 0, v - 1));
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (uniform(rng, 0.0, 1.0) < extra_edge_prob) add(a, b);
    }
  }
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  const Index nb = uniform_index(rng, 1, std::min(max_boundary, n));
  spec.boundary.assign(order.begin(), order.begin() + nb);
  return spec;
}

inline DensityField random_density(Rng& rng, Index n, double hi) {
  DensityField rho(n);
  for (Index v = 0; v < n; ++v) rho[v] = uniform(rng, 0.0, hi);
  return rho;
}

// Visits every simple path starting at `from`; `visit(vertex, cost)` is called
// on arrival at each vertex with the accumulated cost, where a hop into y
// costs hop(y, w).
inline void enumerate_simple_paths(const WeightedGraph& g, Index from,
                                   const std::function<double(Index, double)>& hop,
                                   const std::function<void(Index, double)>& visit) {
  std::vector<char> on_path(g.vertex_count(), 0);
  std::function<void(Index, double)> dfs = [&](Index x, double cost) {
    visit(x, cost);
    on_path[x] = 1;
    for (const Neighbor& nb : g.neighbors(x)) {
      if (!on_path[nb.vertex]) dfs(nb.vertex, cost + hop(nb.vertex, nb.weight));
    }
    on_path[x] = 0;
  };
  dfs(from, 0.0);
}

inline double brute_force_distance(const WeightedGraph& g, Index x, Index y) {
  double best = std::numeric_limits<double>::infinity();
  enumerate_simple_paths(
      g, x, [](Index, double w) { return w; },
      [&](Index v, double c) {
        if (v == y) best = std::min(best, c);
      });
  return best;
}

// Minimum over simple paths from x to any boundary vertex of
// sum w / (1 - rho(next)), using the same floor as the solver.
inline PotentialField brute_force_potential(const WeightedGraph& g, const DensityField& rho,
                                            double floor = 1e-9) {
  PotentialField u(g.vertex_count());
  for (Index x = 0; x < g.vertex_count(); ++x) {
    double best = std::numeric_limits<double>::infinity();
    enumerate_simple_paths(
        g, x, [&](Index y, double w) { return w / std::max(1.0 - rho[y], floor); },
        [&](Index v, double c) {
          if (g.is_boundary(v)) best = std::min(best, c);
        });
    u[x] = best;
  }
  return u;
}

inline PotentialField infinite_start(Index n) {
  return PotentialField::Constant(n, std::numeric_limits<double>::infinity());
}

}  // namespace hughes::testing
