#include "gluing/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gluing/errors.hpp"

namespace gluing {

namespace {

using Bits = std::uint64_t;

Count choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Count out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Pattern with isolated vertices removed, as adjacency bitmasks.
struct Core {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t isolated = 0;
  std::size_t max_degree = 0;
  std::vector<Bits> adjacency;
  std::vector<std::size_t> degree;
  std::vector<std::size_t> degree_census;  // index: degree
};

Core make_core(const Graph& pattern) {
  Core core;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < pattern.order(); ++v) {
    if (pattern.degree(v) > 0) keep.push_back(v);
  }
  core.vertices = keep.size();
  core.isolated = pattern.order() - keep.size();
  core.edges = pattern.size();
  core.adjacency.assign(keep.size(), 0);
  core.degree.assign(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i != j && pattern.has_edge(keep[i], keep[j])) {
        core.adjacency[i] |= Bits{1} << j;
        ++core.degree[i];
      }
    }
    core.max_degree = std::max(core.max_degree, core.degree[i]);
  }
  core.degree_census.assign(core.max_degree + 1, 0);
  for (auto d : core.degree) ++core.degree_census[d];
  return core;
}

class PlacementSearch {
 public:
  PlacementSearch(const Core& core, const Graph& host)
      : core_(core), n_(host.order()), adjacency_(host.order(), 0) {
    for (auto [u, v] : host.edges()) {
      adjacency_[u] |= Bits{1} << v;
      adjacency_[v] |= Bits{1} << u;
    }
    degree_.assign(n_, 0);
    chosen_.assign(n_, 0);
    census_.assign(core.max_degree + 1, 0);
  }

  Count run() {
    visit_vertex(0, 0);
    return total_;
  }

 private:
  // Decide the forward edges {v, w > v} of vertex v. Once v is passed its
  // degree in the selection is final.
  void visit_vertex(Vertex v, std::size_t edges_used) {
    if (v == n_) {
      if (edges_used == core_.edges && census_ == core_.degree_census) {
        if (isomorphic_to_core()) {
          total_ += choose(n_ - core_.vertices, core_.isolated);
        }
      }
      return;
    }
    std::vector<Vertex> forward;
    for (Vertex w = v + 1; w < n_; ++w) {
      if ((adjacency_[v] >> w) & 1u) forward.push_back(w);
    }
    choose_forward(v, forward, 0, edges_used);
  }

  void choose_forward(Vertex v, const std::vector<Vertex>& forward,
                      std::size_t from, std::size_t edges_used) {
    // Option: stop adding edges at v and finalise it.
    const std::size_t final_degree = degree_[v];
    if (final_degree == 0 ||
        (final_degree <= core_.max_degree &&
         census_[final_degree] < core_.degree_census[final_degree])) {
      if (final_degree > 0) ++census_[final_degree];
      visit_vertex(v + 1, edges_used);
      if (final_degree > 0) --census_[final_degree];
    }
    if (degree_[v] >= core_.max_degree || edges_used >= core_.edges) return;
    for (std::size_t i = from; i < forward.size(); ++i) {
      const Vertex w = forward[i];
      if (degree_[w] >= core_.max_degree) continue;
      ++degree_[v];
      ++degree_[w];
      chosen_[v] |= Bits{1} << w;
      chosen_[w] |= Bits{1} << v;
      choose_forward(v, forward, i + 1, edges_used + 1);
      chosen_[v] &= ~(Bits{1} << w);
      chosen_[w] &= ~(Bits{1} << v);
      --degree_[v];
      --degree_[w];
    }
  }

  bool isomorphic_to_core() {
    support_.clear();
    for (Vertex v = 0; v < n_; ++v) {
      if (degree_[v] > 0) support_.push_back(v);
    }
    if (support_.size() != core_.vertices) return false;
    assignment_.assign(core_.vertices, 0);
    taken_.assign(support_.size(), 0);
    return assign(0);
  }

  bool assign(std::size_t p) {
    if (p == core_.vertices) return true;
    for (std::size_t s = 0; s < support_.size(); ++s) {
      if (taken_[s]) continue;
      const Vertex h = support_[s];
      if (degree_[h] != core_.degree[p]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        const bool in_pattern = (core_.adjacency[p] >> q) & 1u;
        const bool in_selection = (chosen_[h] >> assignment_[q]) & 1u;
        ok = in_pattern == in_selection;
      }
      if (!ok) continue;
      taken_[s] = 1;
      assignment_[p] = h;
      if (assign(p + 1)) return true;
      taken_[s] = 0;
    }
    return false;
  }

  const Core& core_;
  std::size_t n_;
  std::vector<Bits> adjacency_;
  std::vector<std::size_t> degree_;
  std::vector<Bits> chosen_;
  std::vector<std::size_t> census_;
  std::vector<Vertex> support_;
  std::vector<Vertex> assignment_;
  std::vector<std::uint8_t> taken_;
  Count total_ = 0;
};

}  // namespace

Count oracle_count(const Graph& pattern, const Graph& host,
                   std::size_t host_guard) {
  if (host.order() > host_guard || host.order() > 64) {
    throw SizeError("oracle_count host has " + std::to_string(host.order()) +
                    " vertices; guard is " +
                    std::to_string(std::min<std::size_t>(host_guard, 64)));
  }
  if (pattern.order() > host.order()) return 0;
  const Core core = make_core(pattern);
  if (core.edges == 0) return choose(host.order(), pattern.order());
  return PlacementSearch(core, host).run();
}

}  // namespace gluing
