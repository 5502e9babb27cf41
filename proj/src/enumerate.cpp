#include "gluing/enumerate.hpp"

#include <map>

#include "gluing/canonical.hpp"
#include "gluing/errors.hpp"
#include "gluing/structure.hpp"

namespace gluing {

std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
  if (n > kEnumerateGuard) {
    throw SizeError("enumerate_graphs is limited to n <= " +
                    std::to_string(kEnumerateGuard));
  }
  std::vector<Graph> out;
  std::map<CanonicalKey, Graph> layer;
  const Graph empty(n);
  layer.emplace(canonical_key(empty), canonical_form(empty));

  while (!layer.empty()) {
    std::map<CanonicalKey, Graph> next;
    for (const auto& [key, g] : layer) {
      if (!connected_only || is_connected(g)) out.push_back(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          std::vector<Edge> edges = g.edges();
          edges.emplace_back(u, v);
          Graph bigger(n, edges);
          auto child_key = canonical_key(bigger);
          if (!next.contains(child_key)) {
            next.emplace(std::move(child_key), canonical_form(bigger));
          }
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace gluing
