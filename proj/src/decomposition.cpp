#include "gluing/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "gluing/errors.hpp"
#include "gluing/structure.hpp"

namespace gluing {

namespace {

using Mask = std::uint64_t;

struct PlacedCopy {
  Mask edges = 0;
  Mask vertices = 0;
  SubgraphImage image;
};

std::vector<PlacedCopy> place_copies(const Graph& pattern, const Graph& host) {
  std::vector<PlacedCopy> out;
  for_each_copy(pattern, host, [&](std::span<const Vertex> image) {
    PlacedCopy c;
    for (Vertex v : image) c.vertices |= Mask{1} << v;
    for (auto [a, b] : pattern.edges()) {
      Vertex u = image[a], w = image[b];
      c.edges |= Mask{1} << host.edge_index(u, w);
      c.image.edges.emplace_back(std::min(u, w), std::max(u, w));
    }
    c.image.vertices.assign(image.begin(), image.end());
    std::sort(c.image.vertices.begin(), c.image.vertices.end());
    std::sort(c.image.edges.begin(), c.image.edges.end());
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

void require_connected(const Graph& host, std::span<const Graph> patterns) {
  if (!is_connected(host)) {
    throw PreconditionError("decomposition host must be connected");
  }
  for (const Graph& p : patterns) {
    if (!is_connected(p)) {
      throw PreconditionError("decomposition patterns must be connected");
    }
  }
}

// Enumerates tuples of copies covering the host. Patterns are processed in
// decreasing edge count so the coverage bound prunes early.
class DecompositionSearch {
 public:
  DecompositionSearch(const Graph& host, std::span<const Graph> patterns)
      : k_(patterns.size()) {
    require_connected(host, patterns);
    if (host.order() > 64 || host.size() > 64) {
      throw SizeError("decomposition hosts are limited to 64 vertices and edges");
    }
    full_edges_ = host.size() == 64 ? ~Mask{0} : (Mask{1} << host.size()) - 1;
    full_vertices_ =
        host.order() == 64 ? ~Mask{0} : (Mask{1} << host.order()) - 1;

    std::size_t edge_budget = 0, vertex_budget = 0;
    for (const Graph& p : patterns) {
      edge_budget += p.size();
      vertex_budget += p.order();
    }
    feasible_ = edge_budget >= host.size() && vertex_budget >= host.order();
    if (!feasible_) return;

    std::map<CanonicalKey, std::size_t> seen;
    for (const Graph& p : patterns) {
      auto key = canonical_key(p);
      auto it = seen.find(key);
      if (it == seen.end()) {
        it = seen.emplace(std::move(key), lists_.size()).first;
        lists_.push_back(place_copies(p, host));
      }
      list_of_.push_back(it->second);
    }
    order_.resize(k_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return patterns[a].size() > patterns[b].size();
    });
    edge_suffix_.assign(k_ + 1, 0);
    vertex_suffix_.assign(k_ + 1, 0);
    for (std::size_t d = k_; d-- > 0;) {
      edge_suffix_[d] = edge_suffix_[d + 1] + patterns[order_[d]].size();
      vertex_suffix_[d] = vertex_suffix_[d + 1] + patterns[order_[d]].order();
    }
    chosen_.assign(k_, 0);
  }

  template <class Leaf>
  bool run(Leaf&& leaf) {
    if (!feasible_) return true;
    return descend(0, 0, 0, leaf);
  }

  Decomposition current() const {
    Decomposition d(k_);
    for (std::size_t i = 0; i < k_; ++i) d[i] = lists_[list_of_[i]][chosen_[i]].image;
    return d;
  }

 private:
  template <class Leaf>
  bool descend(std::size_t depth, Mask edges, Mask vertices, Leaf& leaf) {
    if (depth == k_) {
      if (edges == full_edges_ && vertices == full_vertices_) return leaf();
      return true;
    }
    if (static_cast<std::size_t>(std::popcount(full_edges_ & ~edges)) >
            edge_suffix_[depth] ||
        static_cast<std::size_t>(std::popcount(full_vertices_ & ~vertices)) >
            vertex_suffix_[depth]) {
      return true;
    }
    const std::size_t slot = order_[depth];
    const auto& list = lists_[list_of_[slot]];
    for (std::size_t i = 0; i < list.size(); ++i) {
      chosen_[slot] = i;
      if (!descend(depth + 1, edges | list[i].edges, vertices | list[i].vertices,
                   leaf)) {
        return false;
      }
    }
    return true;
  }

  std::size_t k_;
  bool feasible_ = false;
  Mask full_edges_ = 0;
  Mask full_vertices_ = 0;
  std::vector<std::vector<PlacedCopy>> lists_;
  std::vector<std::size_t> list_of_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> edge_suffix_;
  std::vector<std::size_t> vertex_suffix_;
  std::vector<std::size_t> chosen_;
};

// Builds every union of the components (up to isomorphism) by attaching one
// component at a time: each vertex of the new component either lands on a
// distinct existing vertex or becomes a fresh one. Intermediate unions may be
// disconnected; only connected final unions are gluings.
std::map<CanonicalKey, Graph> connected_unions(std::span<const Graph> components) {
  std::map<CanonicalKey, Graph> unions;
  unions.emplace(canonical_key(components[0]), canonical_form(components[0]));

  for (std::size_t i = 1; i < components.size(); ++i) {
    const Graph& part = components[i];
    const bool last = i + 1 == components.size();
    std::map<CanonicalKey, Graph> next;
    for (const auto& [key, base] : unions) {
      const std::size_t base_order = base.order();
      std::vector<Vertex> target(part.order());
      std::vector<std::uint8_t> taken(base_order, 0);

      auto emit = [&] {
        std::vector<Vertex> placed(part.order());
        std::size_t order = base_order;
        for (Vertex v = 0; v < part.order(); ++v) {
          placed[v] = target[v] < base_order ? target[v]
                                             : static_cast<Vertex>(order++);
        }
        std::vector<Edge> edges = base.edges();
        for (auto [a, b] : part.edges()) edges.emplace_back(placed[a], placed[b]);
        Graph merged = Graph::from_edge_union(order, edges);
        if (last && !is_connected(merged)) return;
        auto merged_key = canonical_key(merged);
        if (!next.contains(merged_key)) {
          next.emplace(std::move(merged_key), canonical_form(merged));
        }
      };
      auto assign = [&](auto&& self, Vertex v) -> void {
        if (v == part.order()) {
          emit();
          return;
        }
        target[v] = static_cast<Vertex>(base_order);  // fresh vertex
        self(self, v + 1);
        for (Vertex t = 0; t < base_order; ++t) {
          if (taken[t]) continue;
          taken[t] = 1;
          target[v] = t;
          self(self, v + 1);
          taken[t] = 0;
        }
      };
      assign(assign, 0);
    }
    unions = std::move(next);
  }
  return unions;
}

std::vector<GluingRecord> enumerate_impl(std::span<const Graph> components,
                                         std::size_t vertex_budget) {
  if (components.empty()) throw ArgumentError("no components to glue");
  std::size_t total = 0;
  for (const Graph& g : components) {
    if (!is_connected(g)) throw PreconditionError("components must be connected");
    total += g.order();
  }
  if (total > vertex_budget) {
    throw SizeError("gluing enumeration over " + std::to_string(total) +
                    " vertices exceeds the budget of " +
                    std::to_string(vertex_budget));
  }

  std::vector<CanonicalKey> component_keys;
  for (const Graph& g : components) component_keys.push_back(canonical_key(g));

  std::vector<GluingRecord> out;
  for (auto& [key, host] : connected_unions(components)) {
    GluingRecord record;
    DecompositionSearch search(host, components);
    bool have_witness = false;
    search.run([&] {
      if (!have_witness) {
        record.witness = search.current();
        have_witness = true;
      }
      ++record.s;
      return true;
    });
    if (record.s == 0) {
      throw VerificationError("constructed union " + host.to_string() +
                              " has no decomposition");
    }
    record.host = std::move(host);
    record.key = key;
    record.components = component_keys;
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace

bool for_each_decomposition(const Graph& host, std::span<const Graph> patterns,
                            const DecompositionVisitor& visit) {
  DecompositionSearch search(host, patterns);
  return search.run([&] { return visit(search.current()); });
}

Count count_decompositions(const Graph& host, std::span<const Graph> patterns) {
  DecompositionSearch search(host, patterns);
  Count total = 0;
  search.run([&] {
    ++total;
    return true;
  });
  return total;
}

std::optional<Decomposition> find_decomposition(const Graph& host,
                                                std::span<const Graph> patterns) {
  DecompositionSearch search(host, patterns);
  std::optional<Decomposition> found;
  search.run([&] {
    found = search.current();
    return false;
  });
  return found;
}

bool is_uniquely_decomposable(const Graph& host,
                              std::span<const Graph> components) {
  DecompositionSearch search(host, components);
  Count total = 0;
  search.run([&] { return ++total < 2; });
  return total == 1;
}

std::vector<GluingRecord> enumerate_gluings(std::span<const Graph> components,
                                            std::size_t vertex_budget) {
  if (components.size() < 2) {
    throw ArgumentError("enumerate_gluings needs at least two components");
  }
  std::vector<CanonicalKey> keys;
  for (const Graph& g : components) keys.push_back(canonical_key(g));
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw UnsupportedError("gluings of isomorphic components are not supported");
  }
  return enumerate_impl(components, vertex_budget);
}

std::vector<GluingRecord> enumerate_gluings_with_repeats(
    std::span<const Graph> components, std::size_t vertex_budget) {
  return enumerate_impl(components, vertex_budget);
}

namespace {

Decomposition unique_decomposition(const Graph& host,
                                   std::span<const Graph> components) {
  DecompositionSearch search(host, components);
  Count total = 0;
  Decomposition found;
  search.run([&] {
    if (total == 0) found = search.current();
    return ++total < 2;
  });
  if (total != 1) {
    throw DomainError("gluing is not uniquely decomposable (" +
                      std::string(total == 0 ? "no" : "several") +
                      " decompositions)");
  }
  return found;
}

bool intersects(const SubgraphImage& a, const SubgraphImage& b) {
  auto i = a.vertices.begin();
  auto j = b.vertices.begin();
  while (i != a.vertices.end() && j != b.vertices.end()) {
    if (*i == *j) return true;
    (*i < *j) ? ++i : ++j;
  }
  return false;
}

// Edge-union of the parts in `block` is connected (as a graph on the union of
// their vertex sets).
bool block_connected(const Decomposition& parts, const Block& block) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::size_t i : block) {
    vertices.insert(vertices.end(), parts[i].vertices.begin(),
                    parts[i].vertices.end());
    edges.insert(edges.end(), parts[i].edges.begin(), parts[i].edges.end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Edge> local;
  for (auto [u, v] : edges) {
    const auto a = std::lower_bound(vertices.begin(), vertices.end(), u) - vertices.begin();
    const auto b = std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
    local.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return is_connected(Graph::from_edge_union(vertices.size(), local));
}

}  // namespace

Graph structure_graph(const Graph& host, std::span<const Graph> components) {
  const auto parts = unique_decomposition(host, components);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (intersects(parts[i], parts[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(parts.size(), edges);
}

bool is_tree_like(const Graph& host, std::span<const Graph> components) {
  if (!is_connected(host)) return false;
  for (const Graph& g : components) {
    if (!is_connected(g)) return false;
  }
  if (!is_uniquely_decomposable(host, components)) return false;
  return is_tree(structure_graph(host, components));
}

std::vector<SetPartition> h_good_partitions(const Graph& host,
                                            std::span<const Graph> components) {
  const auto parts = unique_decomposition(host, components);
  std::vector<SetPartition> good;
  for (auto& p : enumerate_set_partitions(components.size())) {
    const bool ok = std::all_of(p.blocks().begin(), p.blocks().end(),
                                [&](const Block& b) { return block_connected(parts, b); });
    if (ok) good.push_back(std::move(p));
  }
  return good;
}

}  // namespace gluing
