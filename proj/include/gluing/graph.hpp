#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gluing {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with first < second once inside a Graph.
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Immutable once built. Adjacency is kept both as sorted neighbour lists and
/// as a dense matrix, since counting is dominated by has_edge() probes.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Throws ArgumentError on self-loops, duplicate edges or endpoints out of
  /// range.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Like the constructor but silently merges parallel edges. Self-loops are
  /// still rejected.
  static Graph from_edge_union(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Sorted, each with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const noexcept;

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * order_ + v] != 0;
  }

  /// Index of {u,v} in edges(), or size() if absent.
  std::size_t edge_index(Vertex u, Vertex v) const noexcept;

  /// Graph with vertex v renamed to perm[v]. perm must be a permutation.
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  bool is_complete() const noexcept {
    return 2 * edges_.size() == order_ * (order_ == 0 ? 0 : order_ - 1);
  }

  /// Labeled equality (same order, same edge set).
  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

  std::string to_string() const;

 private:
  void build();

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

// Named families. Paths follow the edge-count convention: path_graph(k) has
// k edges and k+1 vertices.
Graph empty_graph(std::size_t order);
Graph path_graph(std::size_t edges);
Graph cycle_graph(std::size_t length);
Graph complete_graph(std::size_t order);
Graph star_graph(std::size_t leaves);

/// Vertices of parts[i] are shifted by the total order of parts[0..i).
Graph disjoint_union(std::span<const Graph> parts);

}  // namespace gluing
