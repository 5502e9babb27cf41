#include "gluing/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "gluing/canonical.hpp"
#include "gluing/errors.hpp"

namespace gluing {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Components of g with `removed` deleted (pass order() for none).
std::size_t count_components_without(const Graph& g, Vertex removed) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> seen(n, 0);
  if (removed < n) seen[removed] = 1;
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace

std::vector<std::size_t> component_labels(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> label(n, kUnreached);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kUnreached) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnreached) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t component_count(const Graph& g) {
  return count_components_without(g, static_cast<Vertex>(g.order()));
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && component_count(g) == 1;
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
  const auto label = component_labels(g);
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> sets(count);
  for (Vertex v = 0; v < g.order(); ++v) sets[label[v]].push_back(v);
  return sets;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<std::pair<CanonicalKey, Graph>> parts;
  for (const auto& vs : component_vertex_sets(g)) {
    Graph part = g.induced(vs);
    parts.emplace_back(canonical_key(part), std::move(part));
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(std::move(p.second));
  return out;
}

BlockProfile block_profile(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("block_profile requires a connected graph");
  }
  BlockProfile profile;
  const std::size_t n = g.order();
  profile.block_degree.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    // G is connected, so subtract 1.
    profile.block_degree[v] = count_components_without(g, v) - 1;
  }
  profile.max_block_degree =
      *std::max_element(profile.block_degree.begin(), profile.block_degree.end());
  for (Vertex v = 0; v < n; ++v) {
    if (profile.block_degree[v] == 0) profile.block_leaves.push_back(v);
    if (profile.block_degree[v] == profile.max_block_degree) {
      profile.maximal.push_back(v);
    }
  }
  return profile;
}

std::vector<std::size_t> distances_from(const Graph& g,
                                        std::span<const Vertex> sources) {
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (s >= g.order()) throw ArgumentError("source vertex out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t distance_to_set(const Graph& g, Vertex v,
                            std::span<const Vertex> set) {
  if (set.empty()) throw ArgumentError("distance to an empty vertex set");
  if (v >= g.order()) throw ArgumentError("vertex out of range");
  return distances_from(g, set)[v];
}

std::size_t edge_distance_to_set(const Graph& g, Edge e,
                                 std::span<const Vertex> set) {
  if (set.empty()) throw ArgumentError("distance to an empty vertex set");
  if (e.first >= g.order() || e.second >= g.order()) {
    throw ArgumentError("edge endpoint out of range");
  }
  const auto dist = distances_from(g, set);
  return dist[e.first] + dist[e.second];
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_profile(g).max_block_degree == 0;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.size() + 1 == g.order();
}

}  // namespace gluing
