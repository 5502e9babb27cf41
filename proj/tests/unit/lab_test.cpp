#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "gluing/counting.hpp"
#include "gluing/errors.hpp"
#include "gluing/graph_io.hpp"
#include "gluing/lab.hpp"
#include "gluing/structure.hpp"
#include "gtest/gtest.h"
#include "support/fixtures.hpp"

namespace gluing {
namespace {

ExperimentConfig config_for(std::vector<Graph> components, std::size_t n, std::uint64_t q,
                            std::uint64_t samples, std::uint64_t seed = 7) {
  ExperimentConfig c;
  c.components = std::move(components);
  c.n = n;
  c.p = 0.5;
  c.q = q;
  c.samples = samples;
  c.seed = seed;
  return c;
}

Histogram histogram_of(std::vector<std::uint64_t> counts) {
  Histogram h;
  h.q = counts.size();
  h.total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  h.counts = std::move(counts);
  return h;
}

DistributionSpec spec_of(std::vector<Probability> mass) {
  DistributionSpec s;
  s.q = mass.size();
  s.mass = std::move(mass);
  return s;
}

TEST(SampleGnp, Extremes) {
  EXPECT_EQ(sample_gnp(9, 0.0, 1), empty_graph(9));
  EXPECT_EQ(sample_gnp(9, 1.0, 1), complete_graph(9));
  EXPECT_EQ(sample_gnp(0, 0.5, 1).order(), 0u);
  EXPECT_THROW(sample_gnp(5, 1.5, 1), ArgumentError);
  EXPECT_THROW(sample_gnp(5, -0.1, 1), ArgumentError);
}

TEST(SampleGnp, Deterministic) {
  for (std::uint64_t seed : {0ULL, 1ULL, 0xdeadbeefULL}) {
    EXPECT_EQ(sample_gnp(30, 0.3, seed), sample_gnp(30, 0.3, seed));
  }
  EXPECT_FALSE(sample_gnp(30, 0.5, 1) == sample_gnp(30, 0.5, 2));
}

TEST(SampleGnp, EdgeDensityMatchesP) {
  for (double p : {0.1, 0.5, 0.8}) {
    std::size_t edges = 0, pairs = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      edges += sample_gnp(40, p, sample_seed(99, s)).size();
      pairs += 40 * 39 / 2;
    }
    // 15600 Bernoulli draws: standard error below 0.005.
    EXPECT_NEAR(static_cast<double>(edges) / static_cast<double>(pairs), p, 0.02) << p;
  }
}

TEST(SampleSeed, DistinctAcrossIndicesAndMasters) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 4; ++m) {
    for (std::uint64_t i = 0; i < 2000; ++i) seen.insert(sample_seed(m, i));
  }
  EXPECT_EQ(seen.size(), 8000u);
}

TEST(ModQHistogram, TotalsAndDeterminism) {
  auto c = config_for({cycle_graph(3), cycle_graph(4)}, 10, 5, 300);
  const Histogram h = mod_q_histogram(c);
  EXPECT_EQ(h.q, 5u);
  EXPECT_EQ(h.total, 300u);
  EXPECT_EQ(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}), 300u);
  EXPECT_EQ(mod_q_histogram(c), h);
  for (unsigned jobs : {2u, 3u, 7u}) {
    c.jobs = jobs;
    EXPECT_EQ(mod_q_histogram(c), h) << jobs;
  }
  c.seed = 8;
  EXPECT_NE(mod_q_histogram(c), h);
}

TEST(ModQHistogram, MatchesSequentialRecount) {
  auto c = config_for({path_graph(1), path_graph(2)}, 9, 4, 60, 3);
  c.jobs = 4;
  std::vector<std::uint64_t> expected(4, 0);
  const Graph pattern = disjoint_union(c.components);
  for (std::uint64_t i = 0; i < c.samples; ++i) {
    ++expected[count_copies(pattern, sample_gnp(c.n, c.p, sample_seed(c.seed, i))) % 4];
  }
  EXPECT_EQ(mod_q_histogram(c).counts, expected);
}

TEST(ModQHistogram, FormulaAndDirectAgree) {
  const std::vector<std::vector<Graph>> patterns = {
      {cycle_graph(3), cycle_graph(4)},
      {path_graph(1), path_graph(2)},
      {path_graph(1), path_graph(3)},
      {empty_graph(1), cycle_graph(3)},
      {path_graph(1), path_graph(2), path_graph(3)},
  };
  for (const auto& comps : patterns) {
    for (std::uint64_t q : {2ULL, 3ULL, 7ULL}) {
      auto c = config_for(comps, 11, q, 150, q);
      c.method = CountMethod::direct;
      const Histogram direct = mod_q_histogram(c);
      c.method = CountMethod::formula;
      c.jobs = 2;
      EXPECT_EQ(mod_q_histogram(c), direct) << to_graph6(disjoint_union(comps)) << " q=" << q;
    }
  }
}

TEST(ModQHistogram, IsolatedVertexResiduesAreMultiplesOfGcd) {
  std::mt19937_64 rng(5);
  std::vector<Graph> others = {cycle_graph(3), path_graph(2), complete_graph(4)};
  for (int i = 0; i < 3; ++i) {
    Graph g = testing::random_graph(5, 0.6, rng);
    if (is_connected(g)) others.push_back(g);
  }
  for (const auto& other : others) {
    for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 6ULL, 8ULL}) {
      for (std::size_t n = other.order() + 1; n <= other.order() + 9; n += 2) {
        const auto c = config_for({empty_graph(1), other}, n, q, 40, n * q);
        const Histogram h = mod_q_histogram(c);
        const std::uint64_t l = std::gcd(q, n - other.order());
        for (std::uint64_t r = 0; r < q; ++r) {
          if (r % l != 0) {
            EXPECT_EQ(h.counts[r], 0u) << "q=" << q << " n=" << n << " r=" << r;
          }
        }
      }
    }
  }
}

TEST(ModQHistogram, IsolatedVertexAndTriangleAtTwentyThree) {
  const auto h = mod_q_histogram(config_for({empty_graph(1), cycle_graph(3)}, 23, 4, 500));
  EXPECT_EQ(h.counts[0], 500u);
}

TEST(ModQHistogram, TriangleParityIsBalanced) {
  auto c = config_for({cycle_graph(3)}, 20, 2, 10000, 2024);
  c.jobs = 2;
  const auto h = mod_q_histogram(c);
  EXPECT_NEAR(h.frequency(0), 0.5, 0.02);
  EXPECT_NEAR(h.frequency(1), 0.5, 0.02);
}

TEST(ModQHistogram, ConfigErrors) {
  auto c = config_for({cycle_graph(3), cycle_graph(4)}, 6, 3, 10);
  EXPECT_THROW(mod_q_histogram(c), ConfigError);
  c.n = 10;
  c.p = 0.0;
  EXPECT_THROW(mod_q_histogram(c), ConfigError);
  c.p = 1.0;
  EXPECT_THROW(mod_q_histogram(c), ConfigError);
  c.p = 0.5;
  c.samples = 0;
  EXPECT_THROW(mod_q_histogram(c), ConfigError);
  c.samples = 1;
  c.q = 1;
  EXPECT_THROW(mod_q_histogram(c), ConfigError);
  c.q = 2;
  c.jobs = 0;
  EXPECT_THROW(mod_q_histogram(c), ConfigError);
  c.jobs = 1;
  c.components.clear();
  EXPECT_THROW(mod_q_histogram(c), ConfigError);
}

TEST(JointHistogram, CellsTotalsAndDeterminism) {
  auto c = config_for({}, 12, 2, 400, 11);
  const std::vector<Graph> patterns = {cycle_graph(3), path_graph(1)};
  const auto h = joint_mod_q_histogram(patterns, c);
  EXPECT_EQ(h.arity, 2u);
  EXPECT_EQ(h.counts.size(), 4u);
  EXPECT_EQ(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}), 400u);
  c.jobs = 3;
  EXPECT_EQ(joint_mod_q_histogram(patterns, c), h);
  // Marginal of the first coordinate equals the one-pattern histogram.
  c.components = {cycle_graph(3)};
  const auto single = mod_q_histogram(c);
  EXPECT_EQ(h.counts[0] + h.counts[2], single.counts[0]);
  EXPECT_EQ(h.counts[1] + h.counts[3], single.counts[1]);
  EXPECT_THROW(joint_mod_q_histogram({}, c), ConfigError);
}

TEST(TotalVariation, Examples) {
  const auto uniform2 = DistributionSpec::uniform(2);
  EXPECT_DOUBLE_EQ(total_variation(histogram_of({6, 4}), uniform2), 0.1);
  EXPECT_DOUBLE_EQ(total_variation(histogram_of({5, 5}), uniform2), 0.0);
  EXPECT_DOUBLE_EQ(total_variation(histogram_of({3, 0}), spec_of({0, 1})), 1.0);
  EXPECT_DOUBLE_EQ(
      total_variation(histogram_of({3, 1, 3, 1}),
                      spec_of({Probability(3, 8), Probability(1, 8), Probability(3, 8),
                               Probability(1, 8)})),
      0.0);
  EXPECT_THROW(total_variation(histogram_of({1, 1, 1}), uniform2), ArgumentError);
  EXPECT_THROW(total_variation(histogram_of({0, 0}), uniform2), ArgumentError);
}

TEST(TotalVariation, AlwaysInUnitInterval) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t q = 2 + rng() % 9;
    std::vector<std::uint64_t> counts(q);
    for (auto& c : counts) c = rng() % 5;
    counts[rng() % q] += 1;
    std::vector<std::int64_t> weights(q);
    for (auto& w : weights) w = static_cast<std::int64_t>(rng() % 4);
    weights[rng() % q] += 1;
    const auto sum = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    std::vector<Probability> mass;
    for (auto w : weights) mass.emplace_back(w, sum);
    const double tv = total_variation(histogram_of(counts), spec_of(mass));
    EXPECT_GE(tv, 0.0);
    EXPECT_LE(tv, 1.0);
    const auto chi = chi_square(histogram_of(counts), spec_of(mass));
    std::size_t support = 0;
    for (auto w : weights) support += w > 0;
    EXPECT_EQ(chi.degrees_of_freedom, support - 1);
  }
}

TEST(ChiSquare, StatisticAndTail) {
  const auto chi = chi_square(histogram_of({60, 40}), DistributionSpec::uniform(2));
  EXPECT_DOUBLE_EQ(chi.statistic, 4.0);
  EXPECT_EQ(chi.degrees_of_freedom, 1u);
  EXPECT_NEAR(chi.p_value, 0.0455, 1e-4);

  const auto point = spec_of({1, 0, 0, 0});
  const auto inside = chi_square(histogram_of({9, 0, 0, 0}), point);
  EXPECT_EQ(inside.degrees_of_freedom, 0u);
  EXPECT_EQ(inside.statistic, 0.0);
  EXPECT_EQ(inside.p_value, 1.0);
  const auto outside = chi_square(histogram_of({9, 1, 0, 0}), point);
  EXPECT_TRUE(std::isinf(outside.statistic));
  EXPECT_EQ(outside.p_value, 0.0);
  EXPECT_THROW(chi_square(histogram_of({1, 1}), point), ArgumentError);
}

TEST(RunExperiment, AutomaticPredictions) {
  const auto skew = run_experiment(config_for({path_graph(1), path_graph(3)}, 12, 2, 50));
  EXPECT_EQ(skew.predicted.mass, (std::vector<Probability>{Probability(3, 4), Probability(1, 4)}));
  const auto flat = run_experiment(config_for({cycle_graph(3), cycle_graph(4)}, 12, 3, 50));
  EXPECT_EQ(flat.predicted, DistributionSpec::uniform(3));
  EXPECT_EQ(flat.histogram.total, 50u);
  EXPECT_EQ(flat.pass, flat.tv_distance <= 0.05);
}

TEST(RunExperiment, ExplicitPredictions) {
  const auto three = config_for({cycle_graph(3), cycle_graph(4), cycle_graph(5)}, 13, 2, 20);
  EXPECT_THROW(run_experiment(three), ConfigError);
  EXPECT_EQ(run_experiment(three, Prediction::uniform()).predicted, DistributionSpec::uniform(2));
  EXPECT_THROW(run_experiment(three, Prediction::given(DistributionSpec::uniform(3))),
               ConfigError);
  const auto given = run_experiment(three, Prediction::given(spec_of({1, 0})));
  EXPECT_EQ(given.predicted.law, "custom");
  EXPECT_EQ(given.chi.degrees_of_freedom, 0u);
}

TEST(RunExperiment, IsolatedVertexPointMass) {
  const auto r = run_experiment(config_for({empty_graph(1), cycle_graph(3)}, 23, 4, 200));
  EXPECT_EQ(r.predicted.support_size(), 1u);
  EXPECT_EQ(r.tv_distance, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(ReportJson, SchemaAndDeterminism) {
  auto c = config_for({path_graph(1), path_graph(3)}, 12, 2, 80);
  const auto text = report_json(run_experiment(c));
  c.jobs = 3;
  const auto parallel = nlohmann::json::parse(report_json(run_experiment(c)));
  const auto doc = nlohmann::json::parse(text);
  for (const char* key : {"config", "counts", "total", "predicted", "tv", "chi_square", "pass",
                          "tool_version", "generator"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["counts"], parallel["counts"]);
  EXPECT_EQ(doc["tv"], parallel["tv"]);
  EXPECT_EQ(doc["predicted"]["mass"], (nlohmann::json{"3/4", "1/4"}));
  EXPECT_EQ(doc["config"]["components"], (nlohmann::json{"A_", "Ch"}));
  EXPECT_EQ(doc["generator"].get<std::string>(), std::string(kGeneratorId));
  EXPECT_EQ(doc["total"].get<std::uint64_t>(), 80u);
}

TEST(DistributionJson, Parses) {
  EXPECT_EQ(distribution_from_json(R"({"q": 2, "mass": ["3/4", 0.25]})").mass,
            (std::vector<Probability>{Probability(3, 4), Probability(1, 4)}));
  EXPECT_EQ(distribution_from_json("[1, 0, 0]").q, 3u);
  EXPECT_THROW(distribution_from_json("[0.5, 0.4]"), ParseError);
  EXPECT_THROW(distribution_from_json(R"({"q": 3, "mass": ["1/2", "1/2"]})"), ParseError);
  EXPECT_THROW(distribution_from_json(R"(["1/0", 1])"), ParseError);
  EXPECT_THROW(distribution_from_json(R"(["1e-1", 0.9])"), ParseError);
  EXPECT_THROW(distribution_from_json("{"), ParseError);
  EXPECT_THROW(distribution_from_json(R"({"probabilities": [1]})"), ParseError);
}

}  // namespace
}  // namespace gluing
