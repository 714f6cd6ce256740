#include "cmfam/euler/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cmfam::euler {

FamilyPartition::FamilyPartition(std::vector<std::vector<std::size_t>> blocks, std::size_t n)
    : n_(n) {
  std::vector<bool> seen(n, false);
  for (auto &b : blocks) {
    if (b.empty())
      throw std::invalid_argument("partition has an empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t x : b) {
      if (x >= n)
        throw std::invalid_argument("partition element " + std::to_string(x) +
                                    " outside the universe of size " + std::to_string(n));
      if (seen[x])
        throw std::invalid_argument("element " + std::to_string(x) + " occurs in two blocks");
      seen[x] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("blocks do not cover the universe");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
}

FamilyPartition FamilyPartition::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> b;
  for (std::size_t i = 0; i < n; ++i)
    b.push_back({i});
  return FamilyPartition(std::move(b), n);
}

FamilyPartition FamilyPartition::from_block_ids(const std::vector<std::size_t> &ids) {
  std::map<std::size_t, std::vector<std::size_t>> by_id;
  for (std::size_t i = 0; i < ids.size(); ++i)
    by_id[ids[i]].push_back(i);
  std::vector<std::vector<std::size_t>> b;
  for (auto &[id, members] : by_id)
    b.push_back(std::move(members));
  return FamilyPartition(std::move(b), ids.size());
}

std::size_t FamilyPartition::nonsingleton_count() const {
  return static_cast<std::size_t>(
      std::count_if(blocks_.begin(), blocks_.end(), [](const auto &b) { return b.size() > 1; }));
}

std::vector<std::size_t> FamilyPartition::block_of() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t x : blocks_[i])
      out[x] = i;
  return out;
}

bool refines(const FamilyPartition &fine, const FamilyPartition &coarse) {
  if (fine.universe() != coarse.universe())
    throw std::invalid_argument("partitions are over different label sets");
  // fine refines coarse iff each fine block sits inside one coarse block.
  const auto owner = coarse.block_of();
  for (const auto &b : fine.blocks())
    for (std::size_t x : b)
      if (owner[x] != owner[b.front()])
        return false;
  return true;
}

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a != b)
    parent_[std::max(a, b)] = std::min(a, b);
}

FamilyPartition UnionFind::partition() {
  std::vector<std::size_t> ids(parent_.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    ids[i] = find(i);
  return FamilyPartition::from_block_ids(ids);
}

} // namespace cmfam::euler
