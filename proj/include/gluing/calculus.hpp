#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gluing/canonical.hpp"
#include "gluing/counting.hpp"
#include "gluing/decomposition.hpp"
#include "gluing/graph.hpp"

namespace gluing {

using Integer = boost::multiprecision::cpp_int;

/// Sorted multiset of connected graphs, as canonical keys.
using KeyMultiset = std::vector<CanonicalKey>;

/// N(G1 ⊔ G2) = N(G1) N(G2) - sum over gluings H of s(H) N(H), on `host`.
/// UnsupportedError if G1 and G2 are isomorphic; PreconditionError unless
/// both are connected.
Count two_component_count(const Graph& g1, const Graph& g2, const Graph& host,
                          std::size_t vertex_budget = kGluingVertexBudget);

/// Sub-patterns met during multi_component_count that repeat a component and
/// were therefore counted directly instead of through the recursion.
struct CountDiagnostics {
  std::vector<KeyMultiset> direct_subpatterns;
  std::size_t recursive_calls = 0;
};

/// N(⊔ components) on `host` by the inclusion-exclusion recursion over
/// partitions of the component indices. Top-level components must be
/// connected and pairwise non-isomorphic (UnsupportedError).
Count multi_component_count(std::span<const Graph> components, const Graph& host,
                            CountDiagnostics* diagnostics = nullptr,
                            std::size_t vertex_budget = kGluingVertexBudget);

/// N(A) = sum over M of c_M * prod_{J in M} N(J), every J connected.
struct CoefficientTable {
  KeyMultiset pattern;
  std::map<KeyMultiset, Integer> terms;

  /// c_M, zero when absent.
  Integer coefficient(const KeyMultiset& monomial) const;
  /// Coefficient of the single connected graph `key`.
  Integer coefficient(const CanonicalKey& key) const;
  /// The polynomial evaluated on `host` by direct copy counts.
  Integer evaluate(const Graph& host) const;

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// Symbolic expansion of the recursion, memoised on component multisets.
/// Components must be connected and pairwise non-isomorphic.
CoefficientTable coefficient_table(std::span<const Graph> components,
                                   std::size_t vertex_budget = kGluingVertexBudget);

/// Coefficient of {H} in coefficient_table(components). PreconditionError
/// unless H is connected.
Integer connected_coefficient(std::span<const Graph> components, const Graph& h,
                              std::size_t vertex_budget = kGluingVertexBudget);

/// A connected H whose table coefficient is coprime to q and which is not a
/// gluing of any proper subfamily of the components (nor one of them).
/// Smallest such key, or nothing.
std::optional<CanonicalKey> uniformity_witness(
    std::span<const Graph> components, std::uint64_t q,
    std::size_t vertex_budget = kGluingVertexBudget);

/// Independent route to the table for two components: evaluates the pattern
/// and every candidate monomial on all graphs with at most |V1|+|V2|
/// vertices, solves the linear system exactly and checks every row.
/// UnsupportedError for other component counts; VerificationError when the
/// system is singular, inconsistent or yields non-integers.
CoefficientTable fit_coefficient_table(std::span<const Graph> components);

/// Graph represented by a canonical key (its canonical form).
Graph graph_of(const CanonicalKey& key);

}  // namespace gluing
