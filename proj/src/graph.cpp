#include "hughes/graph.hpp"

#include <algorithm>
#include <string>

namespace hughes {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptyBoundary: return "EmptyBoundary";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::CflViolation: return "CflViolation";
    case ErrorKind::DiffusionCflViolation: return "DiffusionCflViolation";
    case ErrorKind::BoundsViolation: return "BoundsViolation";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::DensityOutOfRange: return "DensityOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ScenarioInvalid: return "ScenarioInvalid";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string edge_name(Index a, Index b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

WeightedGraph::WeightedGraph(Index vertex_count, std::span<const EdgeSpec> edges,
                             std::span<const Index> boundary) {
  if (vertex_count <= 0) {
    throw Error(ErrorKind::VertexOutOfRange, "graph needs at least one vertex");
  }
  const auto n = static_cast<std::size_t>(vertex_count);

  edges_.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    if (e.a < 0 || e.a >= vertex_count || e.b < 0 || e.b >= vertex_count) {
      throw Error(ErrorKind::VertexOutOfRange, "edge " + edge_name(e.a, e.b) +
                                                   " has an endpoint outside [0, " +
                                                   std::to_string(vertex_count) + ")");
    }
    if (e.a == e.b) {
      throw Error(ErrorKind::SelfLoop, "edge " + edge_name(e.a, e.b) + " is a self-loop");
    }
    if (!(e.weight > 0.0)) {
      throw Error(ErrorKind::NonPositiveWeight,
                  "edge " + edge_name(e.a, e.b) + " has weight " + std::to_string(e.weight));
    }
    edges_.push_back({std::min(e.a, e.b), std::max(e.a, e.b), e.weight});
  }
  std::sort(edges_.begin(), edges_.end(), [](const EdgeSpec& l, const EdgeSpec& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].a == edges_[i - 1].a && edges_[i].b == edges_[i - 1].b) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge " + edge_name(edges_[i].a, edges_[i].b) + " appears more than once");
    }
  }

  // Mirror every undirected edge into both endpoint lists.
  std::vector<Index> count(n, 0);
  for (const EdgeSpec& e : edges_) {
    ++count[e.a];
    ++count[e.b];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) offsets_[x + 1] = offsets_[x] + count[x];
  adjacency_.resize(static_cast<std::size_t>(offsets_[n]));
  std::vector<Index> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const EdgeSpec& e : edges_) {
    adjacency_[cursor[e.a]++] = {e.b, e.weight};
    adjacency_[cursor[e.b]++] = {e.a, e.weight};
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::sort(adjacency_.begin() + offsets_[x], adjacency_.begin() + offsets_[x + 1],
              [](const Neighbor& l, const Neighbor& r) { return l.vertex < r.vertex; });
  }

  is_boundary_.assign(n, 0);
  for (Index b : boundary) {
    if (b < 0 || b >= vertex_count) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "boundary vertex " + std::to_string(b) + " is out of range");
    }
    is_boundary_[b] = 1;
  }
  for (Index x = 0; x < vertex_count; ++x) {
    (is_boundary_[x] ? boundary_ : interior_).push_back(x);
  }
  if (boundary_.empty()) {
    throw Error(ErrorKind::EmptyBoundary, "the boundary vertex set is empty");
  }

  std::vector<char> seen(n, 0);
  std::vector<Index> stack{0};
  seen[0] = 1;
  Index reached = 1;
  while (!stack.empty()) {
    const Index x = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : neighbors(x)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  if (reached != vertex_count) {
    const auto it = std::find(seen.begin(), seen.end(), 0);
    throw Error(ErrorKind::Disconnected,
                "vertex " + std::to_string(it - seen.begin()) + " is not reachable from vertex 0");
  }
}

double WeightedGraph::weight(Index x, Index y) const {
  const auto nbs = neighbors(x);
  const auto it = std::lower_bound(nbs.begin(), nbs.end(), y,
                                   [](const Neighbor& nb, Index v) { return nb.vertex < v; });
  return (it != nbs.end() && it->vertex == y) ? it->weight : 0.0;
}

WeightedGraph build_graph(Index vertex_count, std::span<const EdgeSpec> edges,
                          std::span<const Index> boundary) {
  return WeightedGraph(vertex_count, edges, boundary);
}

Index max_degree(const WeightedGraph& g) {
  Index d = 0;
  for (Index x = 0; x < g.vertex_count(); ++x) d = std::max(d, g.degree(x));
  return d;
}

double geodesic_distance(const WeightedGraph& g, Index x, Index y) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count()) {
    throw Error(ErrorKind::VertexOutOfRange, "geodesic_distance query out of range");
  }
  const Index src[] = {x};
  const auto dist = multi_source_distance(g, src, [](Index, Index, double w) { return w; });
  return dist[y];
}

Field<double> boundary_distance(const WeightedGraph& g) {
  return multi_source_distance(g, g.boundary(), [](Index, Index, double w) { return w; });
}

}  // namespace hughes
