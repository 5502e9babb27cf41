#include "gluing/composer.hpp"

#include <algorithm>
#include <optional>

#include "gluing/canonical.hpp"
#include "gluing/decomposition.hpp"
#include "gluing/errors.hpp"
#include "gluing/structure.hpp"

namespace gluing {

namespace {

// Vertex map of g2 into the glued graph: `fixed` pairs g2 vertices with g1
// vertices; every other g2 vertex gets the next fresh label.
std::vector<Vertex> place_second(const Graph& g1, const Graph& g2,
                                 std::span<const std::pair<Vertex, Vertex>> fixed) {
  std::vector<Vertex> image(g2.order(), 0);
  std::vector<bool> done(g2.order(), false);
  for (auto [in_g2, in_g1] : fixed) {
    image[in_g2] = in_g1;
    done[in_g2] = true;
  }
  Vertex next = static_cast<Vertex>(g1.order());
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (!done[v]) image[v] = next++;
  }
  return image;
}

Graph merge(const Graph& g1, const Graph& g2, std::span<const Vertex> image,
            std::size_t order) {
  std::vector<Edge> edges = g1.edges();
  for (auto [a, b] : g2.edges()) edges.emplace_back(image[a], image[b]);
  return Graph::from_edge_union(order, edges);
}

bool is_k2(const Graph& g) { return g.order() == 2 && g.size() == 1; }

bool is_path(const Graph& g) {
  return is_tree(g) && g.order() >= 2 && g.max_degree() <= 2;
}

// Vertices sorted by their position in the canonical ordering.
std::vector<Vertex> by_label(const Graph& g, std::vector<Vertex> vs) {
  const auto label = canonical_labeling(g);
  std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return label[a] < label[b]; });
  return vs;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(g.order());
  for (Vertex v = 0; v < g.order(); ++v) vs[v] = v;
  return vs;
}

template <class Score>
std::vector<Vertex> maximisers(std::span<const Vertex> vs, Score score) {
  std::vector<Vertex> out;
  std::size_t best = 0;
  for (Vertex v : vs) {
    const std::size_t s = score(v);
    if (out.empty() || s > best) {
      out.assign(1, v);
      best = s;
    } else if (s == best) {
      out.push_back(v);
    }
  }
  return out;
}

// Edges sorted by the canonical labels of their endpoints, each written with
// the lower-labelled endpoint first.
std::vector<Edge> edges_by_label(const Graph& g, std::vector<Edge> es) {
  const auto label = canonical_labeling(g);
  for (auto& [a, b] : es) {
    if (label[a] > label[b]) std::swap(a, b);
  }
  std::sort(es.begin(), es.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(label[x.first], label[x.second]) <
           std::pair(label[y.first], label[y.second]);
  });
  return es;
}

struct Candidate {
  Graph result;
  GlueSite site;
};

class PairComposer {
 public:
  PairComposer(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2) {
    parts_ = {g1_, g2_};
  }

  std::optional<CompositionCertificate> try_candidate(Candidate c, CompositionCase kind) {
    if (are_isomorphic(c.result, g1_) || are_isomorphic(c.result, g2_)) {
      ++rejected_;
      return std::nullopt;
    }
    const Count s = count_decompositions(c.result, parts_);
    if (s != 1) {
      ++rejected_;
      return std::nullopt;
    }
    CompositionCertificate cert;
    cert.result = std::move(c.result);
    cert.case_used = kind;
    cert.components = parts_;
    cert.glue_sites.push_back(std::move(c.site));
    cert.uniqueness_verified = true;
    cert.s_value = s;
    cert.rejected_candidates = rejected_;
    return cert;
  }

  std::optional<CompositionCertificate> vertex_sites(std::span<const Vertex> in_g1,
                                                     std::span<const Vertex> in_g2,
                                                     CompositionCase kind) {
    for (Vertex v2 : in_g2) {
      for (Vertex v1 : in_g1) {
        Candidate c{glue_at_vertices(g1_, v1, g2_, v2), GlueSite{0, 1, {v1}, {v2}}};
        if (auto cert = try_candidate(std::move(c), kind)) return cert;
      }
    }
    return std::nullopt;
  }

  std::optional<CompositionCertificate> edge_sites(std::span<const Edge> in_g1,
                                                   std::span<const Edge> in_g2,
                                                   CompositionCase kind) {
    for (const Edge& e2 : in_g2) {
      for (const Edge& e1 : in_g1) {
        for (auto o : {EdgeOrientation::parallel, EdgeOrientation::crossed}) {
          const bool straight = o == EdgeOrientation::parallel;
          Candidate c{glue_at_edges(g1_, e1, g2_, e2, o),
                      GlueSite{0,
                               1,
                               {e1.first, e1.second},
                               {straight ? e2.first : e2.second,
                                straight ? e2.second : e2.first}}};
          if (auto cert = try_candidate(std::move(c), kind)) return cert;
        }
      }
    }
    return std::nullopt;
  }

 private:
  const Graph& g1_;
  const Graph& g2_;
  std::vector<Graph> parts_;
  std::size_t rejected_ = 0;
};

}  // namespace

Graph glue_at_vertices(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (v1 >= g1.order() || v2 >= g2.order()) {
    throw ArgumentError("glue vertex out of range");
  }
  const std::pair<Vertex, Vertex> fixed[] = {{v2, v1}};
  const auto image = place_second(g1, g2, fixed);
  return merge(g1, g2, image, g1.order() + g2.order() - 1);
}

Graph glue_at_edges(const Graph& g1, Edge e1, const Graph& g2, Edge e2,
                    EdgeOrientation orientation) {
  if (e1.first >= g1.order() || e1.second >= g1.order() ||
      !g1.has_edge(e1.first, e1.second)) {
    throw ArgumentError("first glue site is not an edge");
  }
  if (e2.first >= g2.order() || e2.second >= g2.order() ||
      !g2.has_edge(e2.first, e2.second)) {
    throw ArgumentError("second glue site is not an edge");
  }
  if (orientation == EdgeOrientation::crossed) std::swap(e2.first, e2.second);
  const std::pair<Vertex, Vertex> fixed[] = {{e2.first, e1.first},
                                             {e2.second, e1.second}};
  const auto image = place_second(g1, g2, fixed);
  return merge(g1, g2, image, g1.order() + g2.order() - 2);
}

std::string to_string(CompositionCase c) {
  switch (c) {
    case CompositionCase::A: return "A";
    case CompositionCase::B: return "B";
    case CompositionCase::C: return "C";
    case CompositionCase::D: return "D";
    case CompositionCase::E: return "E";
    case CompositionCase::chain: return "CHAIN";
  }
  return "?";
}

CompositionCertificate compose_pair(const Graph& first, const Graph& second) {
  if (!is_connected(first) || !is_connected(second)) {
    throw PreconditionError("components must be connected");
  }
  if (are_isomorphic(first, second)) {
    throw UnsupportedError("components are isomorphic");
  }
  if (first.order() == 1 || second.order() == 1) {
    throw UnsupportedError("a single-vertex component has no unique gluing");
  }
  const auto k1 = canonical_key(first), k2 = canonical_key(second);
  const auto p1 = canonical_key(path_graph(1));
  for (std::size_t len : {2u, 3u}) {
    const auto pk = canonical_key(path_graph(len));
    if ((k1 == p1 && k2 == pk) || (k1 == pk && k2 == p1)) {
      throw UnsupportedError("{P1, P" + std::to_string(len) +
                             "} has no uniquely decomposable gluing");
    }
  }

  // Normalise: B(G2) >= B(G1), then |V(G1)| <= |V(G2)|, then key order.
  const auto b_first = block_profile(first), b_second = block_profile(second);
  const bool swap =
      std::tuple(b_first.max_block_degree, first.order(), k1) >
      std::tuple(b_second.max_block_degree, second.order(), k2);
  const Graph& g1 = swap ? second : first;
  const Graph& g2 = swap ? first : second;
  const BlockProfile& bp1 = swap ? b_second : b_first;
  const BlockProfile& bp2 = swap ? b_first : b_second;
  const std::size_t B1 = bp1.max_block_degree, B2 = bp2.max_block_degree;

  PairComposer composer(g1, g2);
  std::optional<CompositionCertificate> cert;
  CompositionCase kind;

  if (is_k2(g1) && is_path(g2) && g2.size() > 3) {
    kind = CompositionCase::E;
    // Vertices two steps in from either end of the path.
    std::vector<Vertex> third;
    for (Vertex v = 0; v < g2.order(); ++v) {
      if (g2.degree(v) != 1) continue;
      const Vertex source[] = {v};
      const auto d = distances_from(g2, source);
      for (Vertex w = 0; w < g2.order(); ++w) {
        if (d[w] == 2) third.push_back(w);
      }
    }
    third = by_label(g2, third);
    third.erase(std::unique(third.begin(), third.end()), third.end());
    cert = composer.vertex_sites(by_label(g1, all_vertices(g1)), third, kind);
  } else if (B2 == 1 && g2.max_degree() > 2 && is_k2(g1)) {
    kind = CompositionCase::D;
    std::vector<Vertex> top, leaves;
    for (Vertex v = 0; v < g2.order(); ++v) {
      if (g2.degree(v) == g2.max_degree()) top.push_back(v);
      if (g2.degree(v) == 1) leaves.push_back(v);
    }
    std::vector<Vertex> sites;
    if (!leaves.empty()) {
      sites = maximisers(leaves, [&](Vertex v) { return distance_to_set(g2, v, top); });
    } else {
      sites = all_vertices(g2);
    }
    cert = composer.vertex_sites(by_label(g1, all_vertices(g1)), by_label(g2, sites),
                                 kind);
  } else if (B2 == 1 && B1 == 0 && !is_k2(g1)) {
    kind = CompositionCase::C;
    auto far = std::vector<Edge>();
    std::size_t best = 0;
    for (const Edge& e : g2.edges()) {
      const std::size_t d = edge_distance_to_set(g2, e, bp2.maximal);
      if (far.empty() || d > best) {
        far.assign(1, e);
        best = d;
      } else if (d == best) {
        far.push_back(e);
      }
    }
    cert = composer.edge_sites(edges_by_label(g1, g1.edges()), edges_by_label(g2, far),
                               kind);
  } else if (B1 == B2) {
    kind = CompositionCase::B;
    cert = composer.vertex_sites(by_label(g1, bp1.maximal), by_label(g2, bp2.block_leaves),
                                 kind);
  } else {
    kind = CompositionCase::A;
    const auto far = maximisers(bp2.block_leaves, [&](Vertex v) {
      return distance_to_set(g2, v, bp2.maximal);
    });
    cert = composer.vertex_sites(by_label(g1, bp1.block_leaves), by_label(g2, far), kind);
  }

  if (!cert) {
    const auto v1 = by_label(g1, all_vertices(g1)), v2 = by_label(g2, all_vertices(g2));
    cert = composer.vertex_sites(v1, v2, kind);
    if (!cert) {
      cert = composer.edge_sites(edges_by_label(g1, g1.edges()),
                                 edges_by_label(g2, g2.edges()), kind);
    }
    if (cert) cert->fallback = true;
  }
  if (!cert) {
    throw VerificationError("no case " + to_string(kind) +
                            " site or fallback gives a uniquely decomposable gluing of " +
                            g1.to_string() + " and " + g2.to_string());
  }
  return std::move(*cert);
}

CompositionCertificate compose_chain(std::span<const Graph> components) {
  const std::size_t k = components.size();
  if (k < 2) throw ArgumentError("a chain needs at least two components");
  for (const Graph& g : components) {
    if (!is_connected(g)) throw PreconditionError("components must be connected");
    if (g.order() < 2) {
      throw UnsupportedError("chain components need at least two vertices");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && is_subgraph_of(components[i], components[j])) {
        throw UnsupportedError("component " + std::to_string(i) +
                               " is a subgraph of component " + std::to_string(j));
      }
    }
  }

  // Ordered (u, v) choices per component, smallest canonical labels first.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> choices(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto order = by_label(components[i], all_vertices(components[i]));
    for (Vertex u : order) {
      for (Vertex v : order) {
        if (u != v) choices[i].emplace_back(u, v);
      }
    }
  }

  constexpr std::size_t kAttempts = 64;
  std::size_t rejected = 0;
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    // Mixed-radix digits of `attempt` select each component's choice.
    std::vector<std::pair<Vertex, Vertex>> pick(k);
    std::size_t rest = attempt;
    for (std::size_t i = 0; i < k; ++i) {
      pick[i] = choices[i][rest % choices[i].size()];
      rest /= choices[i].size();
    }
    if (rest != 0) break;

    CompositionCertificate cert;
    cert.case_used = CompositionCase::chain;
    cert.components.assign(components.begin(), components.end());
    Graph h = components[0];
    std::vector<Vertex> prev_image(components[0].order());
    for (Vertex v = 0; v < prev_image.size(); ++v) prev_image[v] = v;
    for (std::size_t i = 1; i < k; ++i) {
      const Vertex anchor = prev_image[pick[i - 1].second];
      const Vertex u = pick[i].first;
      const std::size_t base = h.order();
      h = glue_at_vertices(h, anchor, components[i], u);
      prev_image.assign(components[i].order(), 0);
      Vertex next = static_cast<Vertex>(base);
      for (Vertex w = 0; w < components[i].order(); ++w) {
        prev_image[w] = w == u ? anchor : next++;
      }
      cert.glue_sites.push_back(GlueSite{i - 1, i, {pick[i - 1].second}, {u}});
    }
    const Count s = count_decompositions(h, components);
    if (s == 1 && is_tree(structure_graph(h, components))) {
      cert.result = std::move(h);
      cert.uniqueness_verified = true;
      cert.s_value = 1;
      cert.rejected_candidates = rejected;
      return cert;
    }
    ++rejected;
  }
  throw VerificationError("no chain gluing verified as uniquely decomposable");
}

}  // namespace gluing
