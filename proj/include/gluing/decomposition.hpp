#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gluing/canonical.hpp"
#include "gluing/counting.hpp"
#include "gluing/graph.hpp"
#include "gluing/partition.hpp"

namespace gluing {

/// Default cap on the summed component orders for gluing enumeration.
inline constexpr std::size_t kGluingVertexBudget = 12;

/// One part H_i of a decomposition: a subgraph of the host, given by its
/// vertex set and edge set (host labels, both sorted).
struct SubgraphImage {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const SubgraphImage&, const SubgraphImage&) = default;
};

/// (H_1, ..., H_k) matched positionally to the pattern list.
using Decomposition = std::vector<SubgraphImage>;

/// A connected gluing H of the components with its decomposition count s(H)
/// and one witness decomposition.
struct GluingRecord {
  Graph host;
  CanonicalKey key;
  std::vector<CanonicalKey> components;
  Count s = 0;
  Decomposition witness;
};

using DecompositionVisitor = std::function<bool(const Decomposition&)>;

/// Visits every ordered tuple (H_1, ..., H_k) of subgraphs of `host` with
/// H_i isomorphic to patterns[i] whose edge sets (and vertex sets) cover the
/// host. Requires connected host and patterns (PreconditionError otherwise);
/// the host may have at most 64 vertices and 64 edges (SizeError).
bool for_each_decomposition(const Graph& host, std::span<const Graph> patterns,
                            const DecompositionVisitor& visit);

/// s(H) generalised to any pattern list: the number of such tuples.
Count count_decompositions(const Graph& host, std::span<const Graph> patterns);

std::optional<Decomposition> find_decomposition(const Graph& host,
                                                std::span<const Graph> patterns);

/// True iff count_decompositions(host, components) == 1.
bool is_uniquely_decomposable(const Graph& host, std::span<const Graph> components);

/// Every connected gluing of the components, one record per isomorphism
/// class, sorted by key. Components must be connected, pairwise
/// non-isomorphic and at least two (UnsupportedError for repeats).
/// SizeError if the summed order exceeds `vertex_budget`.
std::vector<GluingRecord> enumerate_gluings(
    std::span<const Graph> components,
    std::size_t vertex_budget = kGluingVertexBudget);

/// Same enumeration without the distinctness requirement; used by the
/// counting recursion, whose sub-patterns may repeat a component. Accepts a
/// single component (its only gluing is itself).
std::vector<GluingRecord> enumerate_gluings_with_repeats(
    std::span<const Graph> components,
    std::size_t vertex_budget = kGluingVertexBudget);

/// Intersection graph of the unique decomposition on vertex set {0..k-1}.
/// Throws DomainError unless the gluing is uniquely decomposable.
Graph structure_graph(const Graph& host, std::span<const Graph> components);

/// Uniquely decomposable with a tree as structure graph. Never throws for
/// non-unique inputs; returns false instead.
bool is_tree_like(const Graph& host, std::span<const Graph> components);

/// Partitions of the component indices whose blocks each induce a connected
/// edge-union in the unique decomposition. DomainError unless uniquely
/// decomposable.
std::vector<SetPartition> h_good_partitions(const Graph& host,
                                            std::span<const Graph> components);

}  // namespace gluing
