#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gluing/distribution.hpp"
#include "gluing/graph.hpp"

namespace gluing {

/// Library version, also written into experiment reports.
std::string_view library_version();

/// Identifies the sampler below; pinned in every report.
inline constexpr std::string_view kGeneratorId =
    "mt19937_64; per-sample seed splitmix64(seed + golden*i); edge iff (x>>11)*2^-53 < p, "
    "pairs in lexicographic order";

/// Seed of sample i: splitmix64 finaliser of seed + 0x9e3779b97f4a7c15 * (i + 1).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// G(n, p). Every pair (u < v) is visited in lexicographic order and draws one
/// 53-bit uniform from mt19937_64 seeded with `seed`. ArgumentError unless
/// 0 <= p <= 1.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

struct Histogram {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  double frequency(std::uint64_t residue) const;
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Counts over the q^l cells of l simultaneous residues. Cell index is
/// r_0 + q r_1 + q^2 r_2 + ...
struct JointHistogram {
  std::uint64_t q = 0;
  std::size_t arity = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  friend bool operator==(const JointHistogram&, const JointHistogram&) = default;
};

enum class CountMethod {
  /// count_copies on the disjoint union.
  direct,
  /// Evaluate the coefficient table of the components on each sample.
  formula,
};

std::string to_string(CountMethod m);

struct ExperimentConfig {
  std::vector<Graph> components;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t q = 2;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  /// Worker threads. Results do not depend on it.
  unsigned jobs = 1;
  CountMethod method = CountMethod::direct;
  double tv_threshold = 0.05;

  /// ConfigError unless there is at least one component, n covers the
  /// pattern, 0 < p < 1, q >= 2, samples >= 1 and jobs >= 1.
  void validate() const;
};

/// Residue of N(disjoint union of components) mod q in each of `samples`
/// independent draws of G(n, p), sample i seeded by sample_seed(seed, i).
Histogram mod_q_histogram(const ExperimentConfig& config);

/// Joint residues of N(patterns[0]), ..., N(patterns[l-1]) mod q in the same
/// samples. Uses config.n, p, q, samples, seed and jobs; components are
/// ignored. ConfigError if q^l exceeds 2^20.
JointHistogram joint_mod_q_histogram(const std::vector<Graph>& patterns,
                                     const ExperimentConfig& config);

/// 1/2 sum_r |counts[r]/total - mass[r]|. ArgumentError on modulus mismatch
/// or an empty histogram.
double total_variation(const Histogram& h, const DistributionSpec& spec);

/// Distance to the uniform law on all q^l cells.
double total_variation_to_uniform(const JointHistogram& h);

struct ChiSquare {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  /// Upper tail probability; 1 when there are no degrees of freedom.
  double p_value = 1.0;
};

/// Pearson statistic over residues with positive predicted mass,
/// df = support size - 1. An observation outside the support makes the
/// statistic infinite with p-value 0. ArgumentError on modulus mismatch.
ChiSquare chi_square(const Histogram& h, const DistributionSpec& spec);

/// Where the prediction comes from.
struct Prediction {
  enum class Kind { automatic, uniform, given };
  Kind kind = Kind::automatic;
  /// Used when kind == given.
  std::optional<DistributionSpec> spec;

  static Prediction automatic() { return {Kind::automatic, std::nullopt}; }
  static Prediction uniform() { return {Kind::uniform, std::nullopt}; }
  static Prediction given(DistributionSpec s) { return {Kind::given, std::move(s)}; }
};

struct ExperimentReport {
  ExperimentConfig config;
  Histogram histogram;
  DistributionSpec predicted;
  double tv_distance = 0.0;
  ChiSquare chi;
  bool pass = false;
};

/// Histogram plus prediction, distances and pass = (tv <= threshold).
/// Automatic prediction uses classify_pair_distribution and needs exactly two
/// components (ConfigError otherwise). A given spec must match q.
ExperimentReport run_experiment(const ExperimentConfig& config,
                                const Prediction& prediction = Prediction::automatic());

/// JSON document with keys config, counts, total, predicted, tv, chi_square,
/// pass, tool_version, generator.
std::string report_json(const ExperimentReport& report, int indent = 2);

/// Reads {"q": 4, "mass": ["1/4", 0.25, ...]} or a bare mass array. Masses
/// may be rationals "a/b", integers or decimals with at most 9 fractional
/// digits. ParseError on malformed input; the result is validated.
DistributionSpec distribution_from_json(std::string_view text);

}  // namespace gluing
