#pragma once

#include <cstddef>

#include "gluing/counting.hpp"
#include "gluing/graph.hpp"

namespace gluing {

inline constexpr std::size_t kOracleHostGuard = 12;

/// Copy count by exhaustive placement: every edge subset of the host whose
/// degree profile matches the pattern is tested for isomorphism directly, and
/// isolated pattern vertices are placed combinatorially. Shares no code with
/// count_copies beyond the Graph type. Throws SizeError if the host exceeds
/// `host_guard` vertices.
Count oracle_count(const Graph& pattern, const Graph& host,
                   std::size_t host_guard = kOracleHostGuard);

}  // namespace gluing
