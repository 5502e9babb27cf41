#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gluing/graph.hpp"

namespace gluing {

using Probability = boost::multiprecision::cpp_rational;

/// Probability mass over residues 0..q-1.
struct DistributionSpec {
  std::uint64_t q = 0;
  std::vector<Probability> mass;
  /// Which law produced it: "uniform", "parity-skew", "isolated-vertex",
  /// or "custom".
  std::string law = "custom";

  static DistributionSpec uniform(std::uint64_t q);
  /// Throws ArgumentError unless q >= 2, mass has q non-negative entries and
  /// they sum to exactly one.
  void validate() const;
  double probability(std::uint64_t residue) const;
  std::size_t support_size() const;

  friend bool operator==(const DistributionSpec& a, const DistributionSpec& b) {
    return a.q == b.q && a.mass == b.mass;
  }
};

/// Limiting law of N(G1 ⊔ G2) mod q in G(n, p):
///   one component a single vertex: mass l/q on multiples of
///     l = gcd(q, n - |V(other)|);
///   {P1, P3} with q even: 3/(2q) on even residues, 1/(2q) on odd ones;
///   otherwise uniform.
/// UnsupportedError for isomorphic components, PreconditionError unless both
/// are connected, ArgumentError if q < 2 or n < |V1| + |V2|.
DistributionSpec classify_pair_distribution(const Graph& g1, const Graph& g2,
                                            std::uint64_t q, std::uint64_t n);

}  // namespace gluing
