#ifndef ISW_UNION_FIND_HPP
#define ISW_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace isw {

// Disjoint sets over 0..n-1, path compression + union by size.
class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns true when x and y were in different sets.
  bool merge(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    --count_;
    return true;
  }

  bool connected(int x, int y) { return find(x) == find(y); }
  int count() const { return count_; }
  int size() const { return static_cast<int>(parent_.size()); }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int count_;
};

} // namespace isw

#endif
