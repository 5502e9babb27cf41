#pragma once

#include <cstddef>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing {

inline constexpr std::size_t kEnumerateGuard = 7;

/// One canonical representative per isomorphism class on exactly n vertices,
/// ordered by edge count and then by canonical key. Built by adding one edge
/// at a time to the previous layer and deduplicating canonically.
/// Throws SizeError for n > kEnumerateGuard.
std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only);

}  // namespace gluing
