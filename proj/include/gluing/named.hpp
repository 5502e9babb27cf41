#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing {

/// Small graph families by name:
///   K<n>  complete        C<n>  cycle          P<n>  path with n edges
///   S<n>  star, n leaves  E<n>  n isolated vertices
///   claw, paw, chair, diamond, bowtie, domino, house
/// Throws ArgumentError for unknown names.
Graph named_graph(std::string_view name);

/// Names accepted by named_graph that are not parameterised families.
std::vector<std::string> named_graph_catalog();

}  // namespace gluing
