#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hughes/error.hpp"

namespace hughes {

using Index = std::ptrdiff_t;

/// Per-vertex scalar field. Densities and potentials are both stored this way.
template <typename Scalar>
using Field = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using DensityField = Field<double>;
using PotentialField = Field<double>;

struct EdgeSpec {
  Index a = 0;
  Index b = 0;
  double weight = 0.0;
};

struct Neighbor {
  Index vertex;
  double weight;
};

/// Finite, simple, connected, undirected graph with positive symmetric
/// weights and a non-empty boundary (exit) set.
///
/// Adjacency is stored in CSR form with each neighbor list sorted by vertex
/// index, so every traversal visits neighbors in the same order. The graph
/// is immutable after construction.
class WeightedGraph {
 public:
  /// Validates and builds the graph. Throws Error with kind SelfLoop,
  /// DuplicateEdge, NonPositiveWeight, VertexOutOfRange, EmptyBoundary or
  /// Disconnected, naming the offending element.
  WeightedGraph(Index vertex_count, std::span<const EdgeSpec> edges,
                std::span<const Index> boundary);

  Index vertex_count() const noexcept { return static_cast<Index>(is_boundary_.size()); }
  Index edge_count() const noexcept { return static_cast<Index>(edges_.size()); }

  std::span<const Neighbor> neighbors(Index x) const {
    return {adjacency_.data() + offsets_[x], adjacency_.data() + offsets_[x + 1]};
  }
  Index degree(Index x) const noexcept { return offsets_[x + 1] - offsets_[x]; }
  /// Position of x's first neighbor in the flattened adjacency; slot
  /// offset(x) + j holds the j-th entry of neighbors(x).
  Index offset(Index x) const noexcept { return offsets_[x]; }
  Index slot_count() const noexcept { return static_cast<Index>(adjacency_.size()); }

  /// Undirected edges with a < b, sorted lexicographically.
  std::span<const EdgeSpec> edges() const noexcept { return edges_; }

  bool is_boundary(Index x) const noexcept { return is_boundary_[x] != 0; }
  std::span<const Index> boundary() const noexcept { return boundary_; }
  std::span<const Index> interior() const noexcept { return interior_; }

  /// Weight of edge {x, y}, or 0 when the vertices are not adjacent.
  double weight(Index x, Index y) const;

 private:
  std::vector<Index> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<EdgeSpec> edges_;
  std::vector<char> is_boundary_;
  std::vector<Index> boundary_;
  std::vector<Index> interior_;
};

WeightedGraph build_graph(Index vertex_count, std::span<const EdgeSpec> edges,
                          std::span<const Index> boundary);

/// D = max over vertices of |I(x)|.
Index max_degree(const WeightedGraph& g);

/// Shortest-path distance between two vertices (sum of edge weights).
double geodesic_distance(const WeightedGraph& g, Index x, Index y);

/// Multi-source shortest-path distances from a vertex set, with a positive
/// cost attached to each directed hop. `hop_cost(from, to, w)` must be > 0.
template <typename HopCost>
Field<double> multi_source_distance(const WeightedGraph& g, std::span<const Index> sources,
                                    HopCost&& hop_cost);

/// Distances d(x, V_b) for every vertex.
Field<double> boundary_distance(const WeightedGraph& g);

}  // namespace hughes

#include "hughes/detail/dijkstra.hpp"
