#include "gluing/partition.hpp"

#include <algorithm>
#include <limits>

#include "gluing/errors.hpp"

namespace gluing {

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw ArgumentError("partition has an empty block");
    std::sort(b.begin(), b.end());
    total += b.size();
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  block_of_.assign(total, unset);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t e : blocks_[i]) {
      if (e >= total || block_of_[e] != unset) {
        throw ArgumentError("blocks must be disjoint and cover 0..k-1");
      }
      block_of_[e] = i;
    }
  }
}

SetPartition SetPartition::discrete(std::size_t k) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < k; ++i) blocks.push_back({i});
  return SetPartition(std::move(blocks));
}

SetPartition SetPartition::single_block(std::size_t k) {
  if (k == 0) return SetPartition();
  Block all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  return SetPartition({all});
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t k) {
  if (k > kPartitionGuard) {
    throw SizeError("set partitions are enumerated for k <= " +
                    std::to_string(kPartitionGuard));
  }
  std::vector<SetPartition> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i)).
  std::vector<std::size_t> a(k, 0);
  auto emit = [&] {
    std::size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<Block> parts(blocks);
    for (std::size_t i = 0; i < k; ++i) parts[a[i]].push_back(i);
    out.emplace_back(std::move(parts));
  };
  auto recurse = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
    if (i == k) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= max_used + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(max_used, v));
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

bool is_refinement(const SetPartition& fine, const SetPartition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) {
    throw ArgumentError("partitions are over different ground sets");
  }
  for (const auto& block : fine.blocks()) {
    const std::size_t target = coarse.block_of(block.front());
    for (std::size_t e : block) {
      if (coarse.block_of(e) != target) return false;
    }
  }
  return true;
}

std::vector<Block> blocks_over(const SetPartition& p,
                               const std::set<std::size_t>& subset) {
  std::vector<Block> out;
  std::size_t covered = 0;
  for (const auto& block : p.blocks()) {
    const auto inside = std::count_if(block.begin(), block.end(), [&](std::size_t e) {
      return subset.contains(e);
    });
    if (inside == 0) continue;
    if (static_cast<std::size_t>(inside) != block.size()) {
      throw ArgumentError("subset cuts through a block of the partition");
    }
    covered += block.size();
    out.push_back(block);
  }
  if (covered != subset.size()) {
    throw ArgumentError("subset contains elements outside the ground set");
  }
  return out;
}

}  // namespace gluing
