#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gluing/counting.hpp"
#include "gluing/graph.hpp"

namespace gluing {

enum class EdgeOrientation { parallel, crossed };

/// Disjoint union of g1 and g2 with v1 and v2 identified. Vertices of g1 keep
/// their labels; the remaining vertices of g2 follow in order.
/// ArgumentError for out-of-range vertices.
Graph glue_at_vertices(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Disjoint union with e2 laid onto e1: parallel maps e2.first to e1.first,
/// crossed maps it to e1.second. The shared edge appears once.
/// ArgumentError unless e1 and e2 are edges of their graphs.
Graph glue_at_edges(const Graph& g1, Edge e1, const Graph& g2, Edge e2,
                    EdgeOrientation orientation = EdgeOrientation::parallel);

enum class CompositionCase { A, B, C, D, E, chain };

std::string to_string(CompositionCase c);

/// One identification: vertices of components[first] glued pairwise to
/// vertices of components[second] (one pair for a vertex gluing, two for an
/// edge gluing), in the components' own labels.
struct GlueSite {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<Vertex> first_vertices;
  std::vector<Vertex> second_vertices;
};

struct CompositionCertificate {
  Graph result;
  CompositionCase case_used = CompositionCase::A;
  /// Components in the order used by the construction (after the pair
  /// normalisation B(G2) >= B(G1)).
  std::vector<Graph> components;
  std::vector<GlueSite> glue_sites;
  bool uniqueness_verified = false;
  Count s_value = 0;
  /// Candidate sites rejected before this one verified.
  std::size_t rejected_candidates = 0;
  /// Every site prescribed by the case failed and the result came from the
  /// search over all vertex gluings, then all edge gluings.
  bool fallback = false;
};

/// Uniquely decomposable gluing of two connected graphs by the five-case
/// construction. UnsupportedError if the graphs are isomorphic, either is a
/// single vertex, or the pair is {P1, P2} or {P1, P3}. When no site of the
/// selected case verifies (Case C with a path as G2 does this), every vertex
/// and edge gluing is tried in canonical order; VerificationError if none
/// verifies.
CompositionCertificate compose_pair(const Graph& g1, const Graph& g2);

/// Chain of vertex gluings G1 - G2 - ... - Gk, v_i glued to u_{i+1}.
/// Requires connected components with at least two vertices each, pairwise
/// incomparable under is_subgraph_of (UnsupportedError otherwise).
CompositionCertificate compose_chain(std::span<const Graph> components);

}  // namespace gluing
