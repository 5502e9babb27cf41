#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing {

/// Largest order accepted by the canonical labeling search.
inline constexpr std::size_t kCanonicalGuard = 64;

/// Total, bit-exact encoding of an unlabeled graph: the graph6 line of its
/// canonical form, prefixed by order and edge count so that keys sort by size
/// first.
struct CanonicalKey {
  std::size_t order = 0;
  std::size_t size = 0;
  std::string code;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// label[v] is the position of v in the canonical ordering. Relabeling two
/// isomorphic graphs by their canonical labelings yields identical graphs.
std::vector<Vertex> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace gluing

template <>
struct std::hash<gluing::CanonicalKey> {
  std::size_t operator()(const gluing::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.code);
  }
};
