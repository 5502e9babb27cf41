#include "gluing/counting.hpp"

#include <algorithm>
#include <bitset>
#include <limits>

#include "gluing/canonical.hpp"
#include "gluing/errors.hpp"
#include "gluing/structure.hpp"

namespace gluing {

namespace {

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw SizeError("copy count overflows 64 bits");
  }
  return out;
}

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw SizeError("copy count overflows 64 bits");
  }
  return out;
}

Count falling_factorial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Count out = 1;
  for (std::size_t i = 0; i < k; ++i) out = checked_mul(out, n - i);
  return out;
}

Count binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // exact at every step: out * (n-k+i) is divisible by i
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

// Backtracking matcher. Pattern vertices are placed component by component;
// within a component each next vertex is the one with the most already-placed
// neighbours (ties: higher degree, then lower index), so every vertex after
// the first in its component is constrained by an already-mapped neighbour.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host) {
    plan();
    image_.assign(pattern.order(), 0);
    used_.assign(host.order(), 0);
  }

  template <class Visit>
  bool run(Visit&& visit) {
    if (pattern_.order() > host_.order()) return true;
    if (pattern_.order() == 0) return visit(std::span<const Vertex>(image_));
    return extend(0, visit);
  }

  Count count() {
    if (pattern_.order() > host_.order()) return 0;
    if (pattern_.order() == 0) return 1;
    return count_from(0);
  }

 private:
  struct Step {
    Vertex vertex;
    std::size_t anchor;                // position of a placed neighbour or npos
    std::vector<std::size_t> checks;   // positions of other placed neighbours
  };

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void plan() {
    const std::size_t n = pattern_.order();
    std::vector<std::size_t> position(n, npos);
    std::vector<std::size_t> placed_neighbors(n, 0);
    for (const auto& component : component_vertex_sets(pattern_)) {
      for (std::size_t round = 0; round < component.size(); ++round) {
        Vertex pick = 0;
        bool found = false;
        for (Vertex v : component) {
          if (position[v] != npos) continue;
          if (!found ||
              placed_neighbors[v] > placed_neighbors[pick] ||
              (placed_neighbors[v] == placed_neighbors[pick] &&
               pattern_.degree(v) > pattern_.degree(pick))) {
            pick = v;
            found = true;
          }
        }
        Step step{pick, npos, {}};
        for (Vertex w : pattern_.neighbors(pick)) {
          if (position[w] == npos) continue;
          if (step.anchor == npos) {
            step.anchor = position[w];
          } else {
            step.checks.push_back(position[w]);
          }
        }
        position[pick] = steps_.size();
        steps_.push_back(std::move(step));
        for (Vertex w : pattern_.neighbors(pick)) ++placed_neighbors[w];
      }
    }
  }

  bool admissible(const Step& step, Vertex h) const {
    if (used_[h]) return false;
    if (host_.degree(h) < pattern_.degree(step.vertex)) return false;
    for (std::size_t p : step.checks) {
      if (!host_.has_edge(h, image_[steps_[p].vertex])) return false;
    }
    return true;
  }

  template <class Body>
  bool for_candidates(const Step& step, Body&& body) {
    if (step.anchor != npos) {
      for (Vertex h : host_.neighbors(image_[steps_[step.anchor].vertex])) {
        if (admissible(step, h) && !body(h)) return false;
      }
    } else {
      for (Vertex h = 0; h < host_.order(); ++h) {
        if (admissible(step, h) && !body(h)) return false;
      }
    }
    return true;
  }

  template <class Visit>
  bool extend(std::size_t depth, Visit& visit) {
    const Step& step = steps_[depth];
    const bool last = depth + 1 == steps_.size();
    return for_candidates(step, [&](Vertex h) {
      image_[step.vertex] = h;
      if (last) return static_cast<bool>(visit(std::span<const Vertex>(image_)));
      used_[h] = 1;
      const bool go_on = extend(depth + 1, visit);
      used_[h] = 0;
      return go_on;
    });
  }

  Count count_from(std::size_t depth) {
    const Step& step = steps_[depth];
    Count total = 0;
    if (depth + 1 == steps_.size()) {
      for_candidates(step, [&](Vertex) {
        ++total;
        return true;
      });
      return total;
    }
    for_candidates(step, [&](Vertex h) {
      image_[step.vertex] = h;
      used_[h] = 1;
      total = checked_add(total, count_from(depth + 1));
      used_[h] = 0;
      return true;
    });
    return total;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<Step> steps_;
  std::vector<Vertex> image_;
  std::vector<std::uint8_t> used_;
};

Graph without_isolated(const Graph& g, std::size_t& isolated) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  isolated = g.order() - keep.size();
  return g.induced(keep);
}

// Counts sets of pairwise vertex-disjoint copies, one per component slot.
// Slots of the same isomorphism class draw copies in increasing list order,
// so every unordered selection is counted once.
template <class Mask>
class DisjointCounter {
 public:
  DisjointCounter(std::vector<const std::vector<Mask>*> lists,
                  std::vector<bool> same_as_previous)
      : lists_(std::move(lists)), same_(std::move(same_as_previous)) {}

  Count run() { return descend(0, Mask{}, 0); }

 private:
  static bool disjoint(const Mask& a, const Mask& b) {
    if constexpr (std::is_integral_v<Mask>) {
      return (a & b) == 0;
    } else {
      return (a & b).none();
    }
  }

  Count descend(std::size_t slot, const Mask& used, std::size_t start) {
    const auto& list = *lists_[slot];
    const bool last = slot + 1 == lists_.size();
    Count total = 0;
    for (std::size_t i = start; i < list.size(); ++i) {
      if (!disjoint(list[i], used)) continue;
      if (last) {
        ++total;
      } else {
        const std::size_t next_start = same_[slot + 1] ? i + 1 : 0;
        total = checked_add(total, descend(slot + 1, used | list[i], next_start));
      }
    }
    return total;
  }

  std::vector<const std::vector<Mask>*> lists_;
  std::vector<bool> same_;
};

template <class Mask>
Mask bit(Vertex v) {
  if constexpr (std::is_integral_v<Mask>) {
    return Mask{1} << v;
  } else {
    Mask m;
    m.set(v);
    return m;
  }
}

template <class Mask>
Count count_disjoint_copies(std::span<const Graph> parts, const Graph& host) {
  std::vector<CanonicalKey> keys;
  for (const Graph& p : parts) keys.push_back(canonical_key(p));

  // parts arrive sorted by key, so equal classes are adjacent.
  std::vector<std::vector<Mask>> per_class;
  std::vector<const std::vector<Mask>*> lists;
  std::vector<bool> same;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool repeat = i > 0 && keys[i] == keys[i - 1];
    if (!repeat) {
      std::vector<Mask> masks;
      for_each_copy(parts[i], host, [&](std::span<const Vertex> image) {
        Mask m{};
        for (Vertex h : image) m |= bit<Mask>(h);
        masks.push_back(m);
        return true;
      });
      if (masks.empty()) return 0;
      per_class.push_back(std::move(masks));
    }
    same.push_back(repeat);
  }
  std::size_t cls = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && !same[i]) ++cls;
    lists.push_back(&per_class[cls]);
  }
  return DisjointCounter<Mask>(std::move(lists), std::move(same)).run();
}

constexpr std::size_t kWideMask = 1024;

}  // namespace

bool for_each_embedding(const Graph& pattern, const Graph& host,
                        const EmbeddingVisitor& visit) {
  EmbeddingSearch search(pattern, host);
  return search.run([&](std::span<const Vertex> image) { return visit(image); });
}

Count count_embeddings(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order()) return 0;
  if (pattern.size() == 0 || host.is_complete()) {
    return falling_factorial(host.order(), pattern.order());
  }
  return EmbeddingSearch(pattern, host).count();
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for_each_embedding(g, g, [&](std::span<const Vertex> image) {
    out.emplace_back(image.begin(), image.end());
    return true;
  });
  return out;
}

Count automorphism_count(const Graph& g) {
  if (g.order() == 0) return 1;
  if (is_connected(g)) return count_embeddings(g, g);
  const auto parts = connected_components(g);
  Count total = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool repeat = i > 0 && are_isomorphic(parts[i], parts[i - 1]);
    run = repeat ? run + 1 : 1;
    total = checked_mul(total, count_embeddings(parts[i], parts[i]));
    total = checked_mul(total, run);  // builds mult! across a run
  }
  return total;
}

bool for_each_copy(const Graph& pattern, const Graph& host,
                   const EmbeddingVisitor& visit) {
  const auto autos = automorphisms(pattern);
  const std::size_t n = pattern.order();
  EmbeddingSearch search(pattern, host);
  return search.run([&](std::span<const Vertex> image) {
    for (const auto& sigma : autos) {
      // compare image o sigma against image lexicographically
      for (std::size_t v = 0; v < n; ++v) {
        const Vertex other = image[sigma[v]];
        if (other < image[v]) return true;  // not minimal, skip
        if (other > image[v]) break;
      }
    }
    return static_cast<bool>(visit(image));
  });
}

Count count_copies(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order()) return 0;
  if (pattern.order() == 0) return 1;

  std::size_t isolated = 0;
  const Graph core = without_isolated(pattern, isolated);
  if (core.order() == 0) return binomial(host.order(), isolated);

  Count core_count = 0;
  if (is_connected(core)) {
    const Count embeddings = count_embeddings(core, host);
    const Count autos = automorphism_count(core);
    if (embeddings % autos != 0) {
      throw VerificationError("embedding count " + std::to_string(embeddings) +
                              " is not divisible by |Aut| = " +
                              std::to_string(autos));
    }
    core_count = embeddings / autos;
  } else {
    const auto parts = connected_components(core);
    if (host.order() <= 64) {
      core_count = count_disjoint_copies<std::uint64_t>(parts, host);
    } else if (host.order() <= kWideMask) {
      core_count = count_disjoint_copies<std::bitset<kWideMask>>(parts, host);
    } else {
      throw SizeError("disconnected patterns are counted on hosts of at most " +
                      std::to_string(kWideMask) + " vertices");
    }
  }
  if (isolated == 0) return core_count;
  return checked_mul(core_count, binomial(host.order() - core.order(), isolated));
}

bool is_subgraph_of(const Graph& small, const Graph& big) {
  if (small.order() > big.order() || small.size() > big.size()) return false;
  bool found = false;
  for_each_embedding(small, big, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace gluing
