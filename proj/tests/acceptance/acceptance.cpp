// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gluing/calculus.hpp"
#include "gluing/canonical.hpp"
#include "gluing/composer.hpp"
#include "gluing/counting.hpp"
#include "gluing/decomposition.hpp"
#include "gluing/enumerate.hpp"
#include "gluing/graph_io.hpp"
#include "gluing/lab.hpp"
#include "gluing/oracle.hpp"

namespace {

using namespace gluing;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

std::vector<Count> s_multiset(const std::vector<Graph>& comps) {
  std::vector<Count> s;
  for (const auto& r : enumerate_gluings(comps)) s.push_back(r.s);
  std::sort(s.begin(), s.end());
  return s;
}

std::string join(const std::vector<Count>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

std::vector<Graph> random_hosts(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<Graph> hosts;
  for (std::size_t i = 0; i < count; ++i) hosts.push_back(sample_gnp(n, 0.5, sample_seed(seed, i)));
  return hosts;
}

const std::vector<std::vector<Graph>>& fixtures() {
  static const std::vector<std::vector<Graph>> f = {
      {cycle_graph(3), cycle_graph(4)},
      {path_graph(1), path_graph(2)},
      {path_graph(1), path_graph(3)},
  };
  return f;
}

ExperimentConfig experiment(std::vector<Graph> comps, std::size_t n, std::uint64_t q,
                            std::uint64_t samples, std::uint64_t seed) {
  ExperimentConfig c;
  c.components = std::move(comps);
  c.n = n;
  c.p = 0.5;
  c.q = q;
  c.samples = samples;
  c.seed = seed;
  return c;
}

Outcome census_c3_c4() {
  const auto s = s_multiset({cycle_graph(3), cycle_graph(4)});
  return {s == std::vector<Count>{1, 1, 2, 3}, "[C3,C4] s=" + join(s)};
}

Outcome census_paths() {
  const auto a = s_multiset({path_graph(1), path_graph(2)});
  const auto b = s_multiset({path_graph(1), path_graph(3)});
  return {a == std::vector<Count>{2, 2, 3, 3} && b == std::vector<Count>{2, 2, 2, 3, 4},
          "[P1,P2] s=" + join(a) + " [P1,P3] s=" + join(b)};
}

Outcome formula_vs_oracle() {
  std::vector<Graph> hosts;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto& g : enumerate_graphs(n, false)) hosts.push_back(std::move(g));
  }
  const std::size_t small = hosts.size();
  for (auto& g : random_hosts(10, 100, 3)) hosts.push_back(std::move(g));
  std::size_t mismatches = 0, checks = 0;
  for (const auto& comps : fixtures()) {
    const auto table = coefficient_table(comps);
    const Graph pattern = disjoint_union(comps);
    for (const auto& host : hosts) {
      const Count expected = oracle_count(pattern, host);
      mismatches += two_component_count(comps[0], comps[1], host) != expected;
      mismatches += table.evaluate(host) != expected;
      checks += 2;
    }
  }
  return {mismatches == 0, std::to_string(small) + " hosts on 1-7 vertices + 100 on 10, " +
                               std::to_string(checks) + " comparisons, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome recursion_k3() {
  const std::vector<Graph> comps = {cycle_graph(3), cycle_graph(4), cycle_graph(5)};
  const Graph pattern = disjoint_union(comps);
  std::size_t mismatches = 0;
  Count largest = 0;
  for (const auto& host : random_hosts(12, 25, 4)) {
    const Count expected = oracle_count(pattern, host);
    largest = std::max(largest, expected);
    mismatches += multi_component_count(comps, host) != expected;
  }
  return {mismatches == 0, "25 hosts on 12 vertices, " + std::to_string(mismatches) +
                               " mismatches, largest count " + std::to_string(largest)};
}

Outcome tree_like() {
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t k : {2u, 3u}) {
    std::vector<Graph> comps;
    for (std::size_t i = 0; i < k; ++i) comps.push_back(cycle_graph(3 + i));
    const auto cert = compose_chain(comps);
    const Integer c = connected_coefficient(comps, cert.result);
    const bool tree = is_tree_like(cert.result, comps);
    ok = ok && tree && abs(c) == 1;
    detail << "k=" << k << " coefficient " << c << (tree ? " tree-like" : " not tree-like")
           << "; ";
  }
  const std::vector<Graph> three = {cycle_graph(3), cycle_graph(4), cycle_graph(5)};
  const auto chain = compose_chain(three).result;
  std::map<std::size_t, std::size_t> by_blocks;
  for (const auto& p : h_good_partitions(chain, three)) ++by_blocks[p.block_count()];
  const bool census = by_blocks == std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}, {3, 1}};
  ok = ok && census;
  detail << "good partitions by block count (" << by_blocks[1] << "," << by_blocks[2] << ","
         << by_blocks[3] << ")";
  return {ok, detail.str()};
}

Outcome composer_totality() {
  std::vector<Graph> graphs;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (auto& g : enumerate_graphs(n, true)) graphs.push_back(std::move(g));
  }
  const auto p1 = canonical_key(path_graph(1)), p2 = canonical_key(path_graph(2)),
             p3 = canonical_key(path_graph(3));
  std::size_t attempted = 0, failures = 0, fallback = 0, excluded = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      const auto a = canonical_key(graphs[i]), b = canonical_key(graphs[j]);
      if ((a == p1 && (b == p2 || b == p3)) || (b == p1 && (a == p2 || a == p3))) {
        ++excluded;
        continue;
      }
      ++attempted;
      try {
        const auto cert = compose_pair(graphs[i], graphs[j]);
        const Graph both[] = {graphs[i], graphs[j]};
        const bool ok = cert.uniqueness_verified && cert.s_value == 1 &&
                        count_decompositions(cert.result, both) == 1;
        failures += !ok;
        fallback += cert.fallback;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(attempted) + " pairs, " + std::to_string(failures) +
                             " failures (" + std::to_string(fallback) +
                             " via fallback search, " + std::to_string(excluded) +
                             " excluded pairs)"};
}

Outcome parity_skew() {
  const auto report = run_experiment(experiment({path_graph(1), path_graph(3)}, 20, 2, 10000, 7));
  const double even = report.histogram.frequency(0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "even fraction %.4f (target 0.75 +- 0.02)", even);
  return {std::abs(even - 0.75) <= 0.02, buf};
}

Outcome uniformity() {
  const auto report = run_experiment(experiment({cycle_graph(3), cycle_graph(4)}, 18, 3, 2000, 8));
  const auto joint =
      joint_mod_q_histogram({cycle_graph(3), path_graph(2)}, experiment({}, 18, 2, 10000, 9));
  const double tv_joint = total_variation_to_uniform(joint);
  char buf[128];
  std::snprintf(buf, sizeof buf, "[C3,C4] q=3 TV %.4f; joint (C3,P2) mod 2 TV %.4f",
                report.tv_distance, tv_joint);
  return {report.tv_distance < 0.05 && tv_joint < 0.05, buf};
}

Outcome isolated_vertex() {
  const std::vector<Graph> comps = {empty_graph(1), cycle_graph(3)};
  const auto exact = mod_q_histogram(experiment(comps, 23, 4, 5000, 10));
  const auto spread = run_experiment(experiment(comps, 22, 4, 5000, 11), Prediction::uniform());
  char buf[128];
  std::snprintf(buf, sizeof buf, "n=23: %llu/5000 at residue 0; n=22: TV to uniform %.4f",
                static_cast<unsigned long long>(exact.counts[0]), spread.tv_distance);
  return {exact.counts[0] == 5000 && spread.tv_distance < 0.05, buf};
}

Outcome expansion_uniqueness() {
  std::size_t equal = 0;
  for (const auto& comps : fixtures()) equal += fit_coefficient_table(comps) == coefficient_table(comps);
  return {equal == fixtures().size(),
          std::to_string(equal) + "/" + std::to_string(fixtures().size()) +
              " linear-solve tables equal the recursion tables"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, 1, census_c3_c4},          {2, 1, census_paths},       {3, 300, formula_vs_oracle},
      {4, 600, recursion_k3},        {5, 0, tree_like},          {6, 300, composer_totality},
      {7, 120, parity_skew},         {8, 300, uniformity},       {9, 0, isolated_vertex},
      {10, 0, expansion_uniqueness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = out.ok;
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      ok = false;
      out.detail += "; over the time limit";
    }
    failed += !ok;
    std::printf("%s %d: %s [%.2f s]\n", ok ? "PASS" : "FAIL", c.id, out.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
