#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cmfam::euler {

/// Partition of {0, ..., n-1} into blocks. Blocks are sorted internally and
/// ordered by their least member.
class FamilyPartition {
public:
  FamilyPartition() = default;
  /// Throws std::invalid_argument unless `blocks` partition 0..n-1.
  FamilyPartition(std::vector<std::vector<std::size_t>> blocks, std::size_t n);

  static FamilyPartition singletons(std::size_t n);
  /// Blocks of an equivalence given by a class id per element.
  static FamilyPartition from_block_ids(const std::vector<std::size_t> &ids);

  std::size_t universe() const { return n_; }
  const std::vector<std::vector<std::size_t>> &blocks() const { return blocks_; }
  std::size_t nonsingleton_count() const;
  /// Block index per element.
  std::vector<std::size_t> block_of() const;

  friend bool operator==(const FamilyPartition &, const FamilyPartition &) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// True iff every block of `coarse` is a union of blocks of `fine`.
/// Throws std::invalid_argument if the universes differ.
bool refines(const FamilyPartition &fine, const FamilyPartition &coarse);

/// Union-find over a fixed element count.
class UnionFind {
public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  void unite(std::size_t a, std::size_t b);
  FamilyPartition partition();

private:
  std::vector<std::size_t> parent_;
};

} // namespace cmfam::euler
