#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing {

using Count = std::uint64_t;

/// Called with image[v] = host vertex of pattern vertex v. Return false to
/// stop the enumeration early.
using EmbeddingVisitor = std::function<bool(std::span<const Vertex> image)>;

/// Visits every injective, edge-preserving map pattern -> host (non-induced).
/// Returns false if the visitor stopped the enumeration.
bool for_each_embedding(const Graph& pattern, const Graph& host,
                        const EmbeddingVisitor& visit);

/// Number of injective edge-preserving maps. Throws SizeError on overflow.
Count count_embeddings(const Graph& pattern, const Graph& host);

/// Every automorphism as a permutation array.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g);
Count automorphism_count(const Graph& g);

/// Visits one embedding per copy: the lexicographically smallest image among
/// those differing by an automorphism of the pattern.
bool for_each_copy(const Graph& pattern, const Graph& host,
                   const EmbeddingVisitor& visit);

/// Unlabeled, not necessarily induced copies of pattern in host. Connected
/// patterns divide embeddings by |Aut|; disconnected patterns combine
/// per-component copies under vertex-disjointness.
Count count_copies(const Graph& pattern, const Graph& host);

/// True iff some subgraph of big is isomorphic to small.
bool is_subgraph_of(const Graph& small, const Graph& big);

}  // namespace gluing
