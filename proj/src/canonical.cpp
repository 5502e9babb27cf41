#include "gluing/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "gluing/errors.hpp"
#include "gluing/graph_io.hpp"

namespace gluing {

namespace {

using Colors = std::vector<std::uint32_t>;
using Certificate = std::vector<std::uint64_t>;

// Colors are cell start indices: a vertex's color is the number of vertices
// in strictly earlier cells. Refinement splits cells by the multiset of
// neighbour colors until the partition is equitable.
void refine(const Graph& g, Colors& colors) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<Vertex> order(n);
  std::size_t cells = 0;
  {
    Colors sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    cells = static_cast<std::size_t>(
        std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }
  while (cells < n) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      for (Vertex w : g.neighbors(v)) s.push_back(colors[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    std::size_t next_cells = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) {
        ++next_cells;
        colors[order[i]] = static_cast<std::uint32_t>(i);
      } else {
        colors[order[i]] = colors[order[i - 1]];
      }
    }
    if (next_cells == cells) break;
    cells = next_cells;
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    Colors colors(n_, 0);
    std::vector<Vertex> prefix;
    search(colors, prefix);
    return best_label_;
  }

 private:
  Certificate certificate(const Colors& label) const {
    std::vector<Vertex> inverse(n_);
    for (Vertex v = 0; v < n_; ++v) inverse[label[v]] = v;
    const std::size_t bits = n_ * (n_ == 0 ? 0 : n_ - 1) / 2;
    Certificate cert((bits + 63) / 64, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if (g_.has_edge(inverse[i], inverse[j])) {
          cert[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
      }
    }
    return cert;
  }

  void record_automorphism(const Colors& label, const Colors& other) {
    // label and other produce the same relabeled graph, so
    // other^{-1} o label is an automorphism.
    std::vector<Vertex> inverse(n_);
    for (Vertex v = 0; v < n_; ++v) inverse[other[v]] = v;
    std::vector<Vertex> gamma(n_);
    for (Vertex v = 0; v < n_; ++v) gamma[v] = inverse[label[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  void leaf(const Colors& label) {
    Certificate cert = certificate(label);
    if (best_label_.empty() && n_ > 0) {
      first_label_ = label;
      first_cert_ = cert;
      best_label_.assign(label.begin(), label.end());
      best_cert_ = std::move(cert);
      return;
    }
    if (cert == first_cert_) {
      record_automorphism(label, first_label_);
    } else if (cert == best_cert_) {
      record_automorphism(label, Colors(best_label_.begin(), best_label_.end()));
    } else if (cert > best_cert_) {
      best_label_.assign(label.begin(), label.end());
      best_cert_ = std::move(cert);
    }
  }

  bool same_orbit_as_explored(const std::vector<Vertex>& prefix,
                              const std::vector<Vertex>& explored, Vertex w) {
    if (explored.empty() || automorphisms_.empty()) return false;
    UnionFind orbits(n_);
    for (const auto& gamma : automorphisms_) {
      const bool fixes_prefix = std::all_of(
          prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes_prefix) continue;
      for (Vertex v = 0; v < n_; ++v) orbits.unite(v, gamma[v]);
    }
    const auto root = orbits.find(w);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return orbits.find(e) == root; });
  }

  void search(Colors colors, std::vector<Vertex>& prefix) {
    refine(g_, colors);

    // First non-singleton cell by color.
    std::vector<std::size_t> cell_size(n_, 0);
    for (auto c : colors) ++cell_size[c];
    std::size_t target = n_;
    for (std::size_t c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == n_) {
      leaf(colors);
      return;
    }

    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] == target) members.push_back(v);
    }
    std::vector<Vertex> explored;
    for (Vertex w : members) {
      if (same_orbit_as_explored(prefix, explored, w)) continue;
      explored.push_back(w);
      Colors child = colors;
      for (Vertex v : members) child[v] = static_cast<std::uint32_t>(target + 1);
      child[w] = static_cast<std::uint32_t>(target);
      prefix.push_back(w);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  std::size_t n_;
  Colors first_label_;
  Certificate first_cert_;
  std::vector<Vertex> best_label_;
  Certificate best_cert_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalGuard) {
    throw SizeError("canonical labeling is limited to " +
                    std::to_string(kCanonicalGuard) + " vertices");
  }
  if (g.order() == 0) return {};
  return CanonicalSearch(g).run();
}

Graph canonical_form(const Graph& g) {
  const auto label = canonical_labeling(g);
  return g.relabeled(label);
}

CanonicalKey canonical_key(const Graph& g) {
  return {g.order(), g.size(), to_graph6(canonical_form(g))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gluing
