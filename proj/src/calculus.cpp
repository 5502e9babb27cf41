#include "gluing/calculus.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "gluing/enumerate.hpp"
#include "gluing/errors.hpp"
#include "gluing/graph_io.hpp"
#include "gluing/partition.hpp"
#include "gluing/structure.hpp"

namespace gluing {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Polynomial = std::map<KeyMultiset, Rational>;

struct BlockGluing {
  CanonicalKey key;
  Count s;
};
using GluingList = std::vector<BlockGluing>;

template <class Value>
class Memo {
 public:
  std::shared_ptr<const Value> find(const KeyMultiset& key) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : it->second;
  }
  std::shared_ptr<const Value> insert(const KeyMultiset& key, Value value) {
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::make_shared<const Value>(std::move(value)))
        .first->second;
  }

 private:
  std::mutex mutex_;
  std::map<KeyMultiset, std::shared_ptr<const Value>> table_;
};

Memo<GluingList>& gluing_memo() {
  static Memo<GluingList> memo;
  return memo;
}

Memo<Polynomial>& expansion_memo() {
  static Memo<Polynomial> memo;
  return memo;
}

std::size_t total_order(const KeyMultiset& keys) {
  std::size_t n = 0;
  for (const auto& k : keys) n += k.order;
  return n;
}

std::vector<Graph> graphs_of(const KeyMultiset& keys) {
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(graph_of(k));
  return out;
}

bool has_repeats(const KeyMultiset& sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// prod over distinct keys of (multiplicity)!
Integer multiplicity_factor(const KeyMultiset& sorted) {
  Integer f = 1;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    f *= factorial(j - i);
    i = j;
  }
  return f;
}

// Connected gluings of a sorted component multiset with their s values.
std::shared_ptr<const GluingList> gluings_of(const KeyMultiset& comps,
                                             std::size_t budget) {
  if (comps.size() == 1) {
    return std::make_shared<const GluingList>(GluingList{{comps[0], 1}});
  }
  if (total_order(comps) > budget) {
    throw SizeError("component multiset exceeds the gluing vertex budget of " +
                    std::to_string(budget));
  }
  if (auto hit = gluing_memo().find(comps)) return hit;
  GluingList list;
  for (const auto& r : enumerate_gluings_with_repeats(graphs_of(comps), budget)) {
    list.push_back({r.key, r.s});
  }
  return gluing_memo().insert(comps, std::move(list));
}

// Every ordered tuple of component copies falls into exactly one partition
// of the indices (its overlap pattern). For each non-discrete partition and
// each choice of connected gluing type per block, visit(types, weight) gets
// the sorted block types and the number of ordered tuples realising one copy
// of their disjoint union: prod s_S * prod (type multiplicity)!.
template <class Visit>
void for_each_overlap_term(const KeyMultiset& comps, std::size_t budget,
                           Visit&& visit) {
  const std::size_t k = comps.size();
  for (const auto& partition : enumerate_set_partitions(k)) {
    if (partition.is_discrete()) continue;
    std::vector<std::shared_ptr<const GluingList>> lists;
    for (const auto& block : partition.blocks()) {
      KeyMultiset sub;
      for (std::size_t i : block) sub.push_back(comps[i]);
      std::sort(sub.begin(), sub.end());
      lists.push_back(gluings_of(sub, budget));
    }
    if (std::any_of(lists.begin(), lists.end(),
                    [](const auto& l) { return l->empty(); })) {
      continue;
    }
    const std::size_t r = lists.size();
    std::vector<std::size_t> pick(r, 0);
    while (true) {
      KeyMultiset types(r);
      Integer weight = 1;
      for (std::size_t b = 0; b < r; ++b) {
        const auto& g = (*lists[b])[pick[b]];
        types[b] = g.key;
        weight *= g.s;
      }
      std::sort(types.begin(), types.end());
      weight *= multiplicity_factor(types);
      visit(types, weight);
      std::size_t b = 0;
      while (b < r && ++pick[b] == lists[b]->size()) pick[b++] = 0;
      if (b == r) break;
    }
  }
}

KeyMultiset validated_keys(std::span<const Graph> components, bool allow_repeats) {
  if (components.empty()) throw ArgumentError("pattern has no components");
  KeyMultiset keys;
  for (const Graph& g : components) {
    if (!is_connected(g)) throw PreconditionError("components must be connected");
    keys.push_back(canonical_key(g));
  }
  std::sort(keys.begin(), keys.end());
  if (!allow_repeats && has_repeats(keys)) {
    throw UnsupportedError("components must be pairwise non-isomorphic");
  }
  return keys;
}

class HostCounts {
 public:
  explicit HostCounts(const Graph& host) : host_(host) {}

  Integer copies(const CanonicalKey& key) {
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, count_copies(graph_of(key), host_)).first;
    }
    return it->second;
  }

  const Graph& host() const { return host_; }

 private:
  const Graph& host_;
  std::unordered_map<CanonicalKey, Count> cache_;
};

struct NumericContext {
  HostCounts counts;
  std::size_t budget;
  CountDiagnostics* diagnostics;
  std::map<KeyMultiset, Integer> results;
};

Integer numeric_count(const KeyMultiset& comps, NumericContext& ctx) {
  if (comps.size() == 1) return ctx.counts.copies(comps[0]);
  if (auto it = ctx.results.find(comps); it != ctx.results.end()) return it->second;
  Integer value;
  if (has_repeats(comps)) {
    if (ctx.diagnostics) ctx.diagnostics->direct_subpatterns.push_back(comps);
    value = count_copies(disjoint_union(graphs_of(comps)), ctx.counts.host());
  } else {
    if (ctx.diagnostics) ++ctx.diagnostics->recursive_calls;
    value = 1;
    for (const auto& c : comps) value *= ctx.counts.copies(c);
    for_each_overlap_term(comps, ctx.budget, [&](const KeyMultiset& types,
                                                  const Integer& weight) {
      value -= weight * numeric_count(types, ctx);
    });
    if (value < 0) {
      throw VerificationError("recursion produced a negative copy count");
    }
  }
  ctx.results.emplace(comps, value);
  return value;
}

Count to_count(const Integer& v) {
  if (v < 0 || v > std::numeric_limits<Count>::max()) {
    throw SizeError("copy count out of range");
  }
  return v.convert_to<Count>();
}

std::shared_ptr<const Polynomial> expand(const KeyMultiset& comps,
                                         std::size_t budget) {
  if (auto hit = expansion_memo().find(comps)) return hit;
  Polynomial poly{{comps, Rational(1)}};
  if (comps.size() > 1) {
    for_each_overlap_term(comps, budget, [&](const KeyMultiset& types,
                                             const Integer& weight) {
      for (const auto& [monomial, c] : *expand(types, budget)) {
        poly[monomial] -= Rational(weight) * c;
      }
    });
    // The discrete partition contributes N(A) times the number of ways to
    // assign isomorphic components to each other's slots.
    const Rational divisor(multiplicity_factor(comps));
    for (auto it = poly.begin(); it != poly.end();) {
      it->second /= divisor;
      it = it->second == 0 ? poly.erase(it) : std::next(it);
    }
  }
  return expansion_memo().insert(comps, std::move(poly));
}

CoefficientTable to_table(const KeyMultiset& pattern, const Polynomial& poly) {
  CoefficientTable table;
  table.pattern = pattern;
  for (const auto& [monomial, c] : poly) {
    if (denominator(c) != 1) {
      throw VerificationError("expansion has a non-integral coefficient");
    }
    table.terms.emplace(monomial, numerator(c));
  }
  return table;
}

}  // namespace

Graph graph_of(const CanonicalKey& key) { return from_graph6(key.code); }

Count two_component_count(const Graph& g1, const Graph& g2, const Graph& host,
                          std::size_t vertex_budget) {
  const std::vector<Graph> pair{g1, g2};
  const auto records = enumerate_gluings(pair, vertex_budget);
  Integer value = Integer(count_copies(g1, host)) * count_copies(g2, host);
  for (const auto& r : records) value -= Integer(r.s) * count_copies(r.host, host);
  return to_count(value);
}

Count multi_component_count(std::span<const Graph> components, const Graph& host,
                            CountDiagnostics* diagnostics,
                            std::size_t vertex_budget) {
  const auto keys = validated_keys(components, false);
  NumericContext ctx{HostCounts(host), vertex_budget, diagnostics, {}};
  return to_count(numeric_count(keys, ctx));
}

Integer CoefficientTable::coefficient(const KeyMultiset& monomial) const {
  auto sorted = monomial;
  std::sort(sorted.begin(), sorted.end());
  auto it = terms.find(sorted);
  return it == terms.end() ? Integer(0) : it->second;
}

Integer CoefficientTable::coefficient(const CanonicalKey& key) const {
  return coefficient(KeyMultiset{key});
}

Integer CoefficientTable::evaluate(const Graph& host) const {
  HostCounts counts(host);
  Integer total = 0;
  for (const auto& [monomial, c] : terms) {
    Integer product = c;
    for (const auto& key : monomial) {
      product *= counts.copies(key);
      if (product == 0) break;
    }
    total += product;
  }
  return total;
}

CoefficientTable coefficient_table(std::span<const Graph> components,
                                   std::size_t vertex_budget) {
  const auto keys = validated_keys(components, false);
  if (total_order(keys) > vertex_budget) {
    throw SizeError("pattern exceeds the gluing vertex budget of " +
                    std::to_string(vertex_budget));
  }
  auto table = to_table(keys, *expand(keys, vertex_budget));

  // Spot-check the identity on the pattern itself and a few overlapping hosts.
  const Graph pattern = disjoint_union(components);
  std::vector<Graph> hosts{pattern};
  if (keys.size() > 1) {
    std::vector<Graph> sorted_parts = graphs_of(keys);
    const auto overlaps = enumerate_gluings_with_repeats(sorted_parts, vertex_budget);
    for (std::size_t i = 0; i < overlaps.size() && i < 4; ++i) {
      hosts.push_back(overlaps[i].host);
    }
  }
  for (const Graph& h : hosts) {
    if (table.evaluate(h) != count_copies(pattern, h)) {
      throw VerificationError("coefficient table disagrees with direct count on " +
                              h.to_string());
    }
  }
  return table;
}

Integer connected_coefficient(std::span<const Graph> components, const Graph& h,
                              std::size_t vertex_budget) {
  if (!is_connected(h)) throw PreconditionError("H must be connected");
  return coefficient_table(components, vertex_budget).coefficient(canonical_key(h));
}

std::optional<CanonicalKey> uniformity_witness(std::span<const Graph> components,
                                               std::uint64_t q,
                                               std::size_t vertex_budget) {
  if (q < 2) throw ArgumentError("modulus must be at least 2");
  const auto table = coefficient_table(components, vertex_budget);
  const auto& keys = table.pattern;
  const std::size_t k = keys.size();

  std::set<CanonicalKey> excluded(keys.begin(), keys.end());
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    KeyMultiset sub;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1u) sub.push_back(keys[i]);
    }
    for (const auto& g : *gluings_of(sub, vertex_budget)) excluded.insert(g.key);
  }

  for (const auto& [monomial, c] : table.terms) {
    if (monomial.size() != 1 || excluded.contains(monomial[0])) continue;
    Integer residue = abs(c) % q;
    if (boost::multiprecision::gcd(residue, Integer(q)) == 1) return monomial[0];
  }
  return std::nullopt;
}

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1, used only to pick a set of
// linearly independent rows before solving exactly.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mod_mul(a, a)) {
    if (e & 1) r = mod_mul(r, a);
  }
  return r;
}

std::uint64_t mod_of(const Integer& v) {
  Integer r = v % kPrime;
  if (r < 0) r += kPrime;
  return r.convert_to<std::uint64_t>();
}

// Indices of rows forming a basis of the row space mod p (greedy).
std::vector<std::size_t> independent_rows(const std::vector<std::vector<Integer>>& rows,
                                          std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivots, chosen;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < cols; ++r) {
    std::vector<std::uint64_t> v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = mod_of(rows[r][c]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t f = v[pivots[b]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        v[c] = (v[c] + kPrime - mod_mul(f, basis[b][c])) % kPrime;
      }
    }
    auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (lead == v.end()) continue;
    const std::uint64_t inv = mod_pow(*lead, kPrime - 2);
    for (auto& x : v) x = mod_mul(x, inv);
    pivots.push_back(static_cast<std::size_t>(lead - v.begin()));
    basis.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw VerificationError("candidate system is singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

CoefficientTable fit_coefficient_table(std::span<const Graph> components) {
  if (components.size() != 2) {
    throw UnsupportedError("the linear-solve route handles exactly two components");
  }
  const auto keys = validated_keys(components, false);
  const Graph& g1 = components[0];
  const Graph& g2 = components[1];
  const std::size_t total = g1.order() + g2.order();
  if (total > kEnumerateGuard) {
    throw SizeError("linear-solve route needs hosts on up to " +
                    std::to_string(total) + " vertices");
  }
  const std::size_t min_order = std::max(g1.order(), g2.order());
  const std::size_t min_size = std::max(g1.size(), g2.size());
  const std::size_t max_size = g1.size() + g2.size();

  std::vector<KeyMultiset> monomials{keys};
  std::vector<Graph> candidates;
  for (std::size_t n = min_order; n + 1 <= total; ++n) {
    for (Graph& x : enumerate_graphs(n, true)) {
      if (x.size() < min_size || x.size() > max_size) continue;
      monomials.push_back({canonical_key(x)});
      candidates.push_back(std::move(x));
    }
  }
  const std::size_t cols = monomials.size();

  const Graph pattern = disjoint_union(components);
  std::vector<std::vector<Integer>> rows;
  std::vector<Integer> rhs;
  for (std::size_t n = 1; n <= total; ++n) {
    for (const Graph& host : enumerate_graphs(n, false)) {
      std::vector<Integer> row;
      row.reserve(cols);
      row.push_back(Integer(count_copies(g1, host)) * count_copies(g2, host));
      for (const Graph& x : candidates) row.push_back(count_copies(x, host));
      rows.push_back(std::move(row));
      rhs.push_back(count_copies(pattern, host));
    }
  }

  const auto chosen = independent_rows(rows, cols);
  if (chosen.size() != cols) {
    throw VerificationError("host evaluations do not determine the coefficients");
  }
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t r : chosen) {
    a.emplace_back(rows[r].begin(), rows[r].end());
    b.emplace_back(rhs[r]);
  }
  const auto x = solve_square(std::move(a), std::move(b));

  CoefficientTable table;
  table.pattern = keys;
  std::vector<Integer> coeffs(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (denominator(x[c]) != 1) {
      throw VerificationError("fitted coefficient is not an integer");
    }
    coeffs[c] = numerator(x[c]);
    if (coeffs[c] != 0) table.terms.emplace(monomials[c], coeffs[c]);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Integer lhs = 0;
    for (std::size_t c = 0; c < cols; ++c) lhs += coeffs[c] * rows[r][c];
    if (lhs != rhs[r]) {
      throw VerificationError("fitted coefficients fail on a host evaluation");
    }
  }
  return table;
}

}  // namespace gluing
