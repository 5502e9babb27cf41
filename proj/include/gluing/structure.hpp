#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing {

/// Component index per vertex, numbered in order of first appearance.
std::vector<std::size_t> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);

/// The empty graph on zero vertices counts as disconnected.
bool is_connected(const Graph& g);

/// Vertex sets of the components, in order of smallest vertex.
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g);

/// Component subgraphs relabeled 0.., listed in CanonicalKey order.
std::vector<Graph> connected_components(const Graph& g);

/// Per-vertex block degree b(v) = components(G - v) - components(G).
struct BlockProfile {
  std::vector<std::size_t> block_degree;
  std::size_t max_block_degree = 0;
  std::vector<Vertex> block_leaves;   // b(v) == 0
  std::vector<Vertex> maximal;        // b(v) == max_block_degree
};

/// Throws PreconditionError unless g is connected.
BlockProfile block_profile(const Graph& g);

/// BFS distances from `sources`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const Graph& g,
                                        std::span<const Vertex> sources);

/// min over s in S of dist(v, s). Throws ArgumentError for empty S.
std::size_t distance_to_set(const Graph& g, Vertex v,
                            std::span<const Vertex> set);

/// d(u,S) + d(v,S) for e = {u,v}.
std::size_t edge_distance_to_set(const Graph& g, Edge e,
                                 std::span<const Vertex> set);

/// Connected, at least three vertices, and no cut vertex.
bool is_two_connected(const Graph& g);

/// Connected with |E| = |V| - 1.
bool is_tree(const Graph& g);

}  // namespace gluing
