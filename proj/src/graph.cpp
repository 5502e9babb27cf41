#include "gluing/graph.hpp"

#include <algorithm>
#include <sstream>

#include "gluing/errors.hpp"

namespace gluing {

namespace {

std::vector<Edge> normalize(std::size_t order, std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw ArgumentError("edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "} has an endpoint >= order " +
                          std::to_string(order));
    }
    if (u == v) {
      throw ArgumentError("self-loop at vertex " + std::to_string(u));
    }
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph::Graph(std::size_t order) : order_(order) { build(); }

Graph::Graph(std::size_t order, std::span<const Edge> edges)
    : order_(order), edges_(normalize(order, edges)) {
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ArgumentError("duplicate edge");
  }
  build();
}

Graph Graph::from_edge_union(std::size_t order, std::span<const Edge> edges) {
  Graph g;
  g.order_ = order;
  g.edges_ = normalize(order, edges);
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.build();
  return g;
}

void Graph::build() {
  adj_.assign(order_, {});
  matrix_.assign(order_ * order_, 0);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    matrix_[static_cast<std::size_t>(u) * order_ + v] = 1;
    matrix_[static_cast<std::size_t>(v) * order_ + u] = 1;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const noexcept {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order_) {
    throw ArgumentError("relabeling has wrong length");
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (auto [u, v] : edges_) mapped.emplace_back(perm[u], perm[v]);
  return Graph(order_, mapped);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) {
        kept.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(vertices.size(), kept);
}

std::string Graph::to_string() const {
  std::ostringstream out;
  out << "Graph(" << order_ << "; ";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out << ' ';
    out << edges_[i].first << '-' << edges_[i].second;
  }
  out << ')';
  return out.str();
}

Graph empty_graph(std::size_t order) { return Graph(order); }

Graph path_graph(std::size_t edges) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < edges; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph(edges + 1, e);
}

Graph cycle_graph(std::size_t length) {
  if (length < 3) throw ArgumentError("cycle length must be at least 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < length; ++i) {
    e.emplace_back(static_cast<Vertex>(i),
                   static_cast<Vertex>((i + 1) % length));
  }
  return Graph(length, e);
}

Graph complete_graph(std::size_t order) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(order, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) {
    e.emplace_back(0, static_cast<Vertex>(i));
  }
  return Graph(leaves + 1, e);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t order = 0;
  std::vector<Edge> e;
  for (const Graph& g : parts) {
    const auto shift = static_cast<Vertex>(order);
    for (auto [u, v] : g.edges()) e.emplace_back(u + shift, v + shift);
    order += g.order();
  }
  return Graph(order, e);
}

}  // namespace gluing
