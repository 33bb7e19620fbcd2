#ifndef ISW_PARTITION_HPP
#define ISW_PARTITION_HPP

#include <vector>

#include "isw/union_find.hpp"

namespace isw {

// Partition of {0, ..., n-1}, always stored normalized: block ids are assigned
// in order of each block's minimum representative, so equal partitions compare
// equal componentwise. Used for equivalence relations, congruences and traces.
class Partition {
public:
  Partition() = default;

  // Identity partition (all singletons).
  explicit Partition(int n);

  static Partition universal(int n);
  static Partition from_assignment(std::vector<int> ids);
  static Partition from_union_find(UnionFind& uf);

  int size() const { return static_cast<int>(block_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int x) const { return block_[x]; }
  bool together(int x, int y) const { return block_[x] == block_[y]; }

  bool is_identity() const { return blocks_ == size(); }
  bool is_universal() const { return blocks_ <= 1; }

  bool operator==(const Partition& o) const { return block_ == o.block_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  // this refines coarser: every block of this lies inside one block of coarser.
  bool refines(const Partition& coarser) const;

  Partition meet(const Partition& o) const;
  Partition join(const Partition& o) const;

  // Blocks in canonical order (by minimum representative, members ascending).
  std::vector<std::vector<int>> blocks() const;

  // Partition induced on a list of points (indexed by position in `points`).
  Partition restrict_to(const std::vector<int>& points) const;

  // All ordered related pairs (x, y), x != y, lexicographic.
  std::vector<std::pair<int, int>> related_pairs() const;

  // Canonical enumeration order: finer first (more blocks), then block-id
  // vector lexicographic.
  static bool canonical_less(const Partition& a, const Partition& b);

  const std::vector<int>& assignment() const { return block_; }

private:
  std::vector<int> block_;
  int blocks_ = 0;

  void normalize();
};

} // namespace isw

#endif
