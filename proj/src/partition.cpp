#include "isw/partition.hpp"

#include <algorithm>
#include <numeric>

namespace isw {

Partition::Partition(int n) : block_(n), blocks_(n) {
  std::iota(block_.begin(), block_.end(), 0);
}

Partition Partition::universal(int n) {
  Partition p;
  p.block_.assign(n, 0);
  p.blocks_ = n > 0 ? 1 : 0;
  return p;
}

Partition Partition::from_assignment(std::vector<int> ids) {
  Partition p;
  p.block_ = std::move(ids);
  p.normalize();
  return p;
}

Partition Partition::from_union_find(UnionFind& uf) {
  std::vector<int> ids(uf.size());
  for (int i = 0; i < uf.size(); ++i) ids[i] = uf.find(i);
  return from_assignment(std::move(ids));
}

void Partition::normalize() {
  int max_id = -1;
  for (int b : block_) max_id = std::max(max_id, b);
  std::vector<int> relabel(max_id + 1, -1);
  int next = 0;
  for (int& b : block_) {
    if (relabel[b] < 0) relabel[b] = next++;
    b = relabel[b];
  }
  blocks_ = next;
}

bool Partition::refines(const Partition& coarser) const {
  // representative of each block of *this must determine the coarser block
  std::vector<int> image(blocks_, -1);
  for (std::size_t x = 0; x < block_.size(); ++x) {
    int b = block_[x];
    if (image[b] < 0)
      image[b] = coarser.block_[x];
    else if (image[b] != coarser.block_[x])
      return false;
  }
  return true;
}

Partition Partition::meet(const Partition& o) const {
  std::vector<int> ids(block_.size());
  for (std::size_t x = 0; x < block_.size(); ++x)
    ids[x] = block_[x] * o.blocks_ + o.block_[x];
  return from_assignment(std::move(ids));
}

Partition Partition::join(const Partition& o) const {
  UnionFind uf(static_cast<int>(block_.size()));
  std::vector<int> first_of_block(blocks_, -1), first_of_other(o.blocks_, -1);
  for (std::size_t x = 0; x < block_.size(); ++x) {
    int i = static_cast<int>(x);
    int& fa = first_of_block[block_[x]];
    if (fa < 0) fa = i; else uf.merge(fa, i);
    int& fb = first_of_other[o.block_[x]];
    if (fb < 0) fb = i; else uf.merge(fb, i);
  }
  return from_union_find(uf);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (std::size_t x = 0; x < block_.size(); ++x) out[block_[x]].push_back(static_cast<int>(x));
  return out;
}

Partition Partition::restrict_to(const std::vector<int>& points) const {
  std::vector<int> ids(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) ids[i] = block_[points[i]];
  return from_assignment(std::move(ids));
}

std::vector<std::pair<int, int>> Partition::related_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < block_.size(); ++x)
    for (std::size_t y = 0; y < block_.size(); ++y)
      if (x != y && block_[x] == block_[y])
        out.emplace_back(static_cast<int>(x), static_cast<int>(y));
  return out;
}

bool Partition::canonical_less(const Partition& a, const Partition& b) {
  if (a.blocks_ != b.blocks_) return a.blocks_ > b.blocks_;
  return a.block_ < b.block_;
}

} // namespace isw
