#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing::testing {

// Connected gluings of a triangle and a 4-cycle, one per isomorphism class.

/// Triangle and 4-cycle sharing one vertex.
inline Graph triangle_square_at_vertex() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 5}, {5, 4}, {4, 1}});
}

/// Triangle and 4-cycle sharing one edge.
inline Graph triangle_square_at_edge() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

/// 4-cycle with one chord (the diamond).
inline Graph square_with_chord() {
  return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

/// 4-cycle with a chord and a second path of length two across the chord.
inline Graph square_chord_and_ear() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 4}, {4, 2}});
}

/// Cycles C3, C4, ..., C(k+2) glued in a chain, each at a vertex two steps
/// along the previous cycle from where that cycle was attached.
inline Graph cycle_chain(std::size_t k) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
  Vertex attach = 2, next = 3;
  for (std::size_t len = 4; len < 3 + k; ++len) {
    std::vector<Vertex> cyc{attach};
    for (std::size_t i = 1; i < len; ++i) cyc.push_back(next++);
    for (std::size_t i = 0; i < len; ++i) edges.emplace_back(cyc[i], cyc[(i + 1) % len]);
    attach = cyc[2];
  }
  return Graph(next, edges);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n,
                                              std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace gluing::testing
