#include "gluing/distribution.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gluing/canonical.hpp"
#include "gluing/errors.hpp"
#include "gluing/structure.hpp"

namespace gluing {

DistributionSpec DistributionSpec::uniform(std::uint64_t q) {
  if (q < 2) throw ArgumentError("modulus must be at least 2");
  DistributionSpec spec;
  spec.q = q;
  spec.mass.assign(q, Probability(1, static_cast<std::int64_t>(q)));
  spec.law = "uniform";
  return spec;
}

void DistributionSpec::validate() const {
  if (q < 2) throw ArgumentError("modulus must be at least 2");
  if (mass.size() != q) throw ArgumentError("mass must have one entry per residue");
  Probability total = 0;
  for (const auto& m : mass) {
    if (m < 0) throw ArgumentError("negative probability mass");
    total += m;
  }
  if (total != 1) throw ArgumentError("probability masses do not sum to one");
}

double DistributionSpec::probability(std::uint64_t residue) const {
  const auto& m = mass.at(residue);
  return m.convert_to<double>();
}

std::size_t DistributionSpec::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(mass.begin(), mass.end(), [](const Probability& m) { return m > 0; }));
}

DistributionSpec classify_pair_distribution(const Graph& g1, const Graph& g2,
                                            std::uint64_t q, std::uint64_t n) {
  if (q < 2) throw ArgumentError("modulus must be at least 2");
  if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
    throw ArgumentError("modulus too large");
  }
  if (!is_connected(g1) || !is_connected(g2)) {
    throw PreconditionError("components must be connected");
  }
  if (are_isomorphic(g1, g2)) throw UnsupportedError("components are isomorphic");
  if (n < g1.order() + g2.order()) {
    throw ArgumentError("host order is smaller than the pattern");
  }
  const auto qi = static_cast<std::int64_t>(q);

  if (g1.order() == 1 || g2.order() == 1) {
    // N(K1 ⊔ G) = (n - |V(G)|) N(G), so only multiples of l are reachable.
    const Graph& other = g1.order() == 1 ? g2 : g1;
    const std::uint64_t l = std::gcd(q, n - other.order());
    DistributionSpec spec;
    spec.q = q;
    spec.law = "isolated-vertex";
    spec.mass.assign(q, Probability(0));
    for (std::uint64_t r = 0; r < q; r += l) {
      spec.mass[r] = Probability(static_cast<std::int64_t>(l), qi);
    }
    return spec;
  }

  const auto p1 = canonical_key(path_graph(1)), p3 = canonical_key(path_graph(3));
  const auto k1 = canonical_key(g1), k2 = canonical_key(g2);
  const bool edge_and_three_path = (k1 == p1 && k2 == p3) || (k1 == p3 && k2 == p1);
  if (edge_and_three_path && q % 2 == 0) {
    DistributionSpec spec;
    spec.q = q;
    spec.law = "parity-skew";
    spec.mass.resize(q);
    for (std::uint64_t r = 0; r < q; ++r) {
      spec.mass[r] = r % 2 == 0 ? Probability(3, 2 * qi) : Probability(1, 2 * qi);
    }
    return spec;
  }
  return DistributionSpec::uniform(q);
}

}  // namespace gluing
