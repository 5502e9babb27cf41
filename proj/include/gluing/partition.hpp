#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

namespace gluing {

inline constexpr std::size_t kPartitionGuard = 8;

using Block = std::vector<std::size_t>;

/// Partition of {0, ..., k-1}. Stored normalised: each block sorted and
/// blocks ordered by their smallest element.
class SetPartition {
 public:
  SetPartition() = default;

  /// Throws ArgumentError unless the blocks are non-empty, disjoint and cover
  /// {0, ..., k-1} for k = total element count.
  explicit SetPartition(std::vector<Block> blocks);

  /// {{0}, {1}, ..., {k-1}}
  static SetPartition discrete(std::size_t k);
  /// {{0, ..., k-1}}
  static SetPartition single_block(std::size_t k);

  std::size_t ground_size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t element) const { return block_of_.at(element); }

  bool is_discrete() const noexcept { return blocks_.size() == ground_size(); }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
};

/// All Bell(k) partitions, in restricted-growth-string order (the single
/// block first, the discrete partition last). Throws SizeError for
/// k > kPartitionGuard.
std::vector<SetPartition> enumerate_set_partitions(std::size_t k);

/// True iff every block of `fine` lies inside a block of `coarse`
/// (reflexive). Ground sets must match.
bool is_refinement(const SetPartition& fine, const SetPartition& coarse);

/// The blocks of `p` whose union is `subset`. Throws ArgumentError when
/// `subset` is not a union of blocks.
std::vector<Block> blocks_over(const SetPartition& p,
                               const std::set<std::size_t>& subset);

}  // namespace gluing
