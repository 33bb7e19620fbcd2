#ifndef ISW_TOLERANCE_HPP
#define ISW_TOLERANCE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "isw/partition.hpp"

namespace isw {

// Reflexive symmetric binary relation on {0,...,n-1}; not necessarily
// transitive. Compatibility with the algebra is checked separately
// (is_tolerance in series.hpp).
class Tolerance {
public:
  Tolerance() = default;
  explicit Tolerance(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    for (int i = 0; i < n; ++i) adj_[static_cast<std::size_t>(i) * n + i] = 1;
  }

  static Tolerance universal(int n) {
    Tolerance t(n);
    std::fill(t.adj_.begin(), t.adj_.end(), std::uint8_t(1));
    return t;
  }

  static Tolerance from_partition(const Partition& p) {
    Tolerance t(p.size());
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (p.together(i, j)) t.adj_[static_cast<std::size_t>(i) * p.size() + j] = 1;
    return t;
  }

  int size() const { return n_; }
  bool related(int a, int b) const { return adj_[static_cast<std::size_t>(a) * n_ + b]; }

  void add(int a, int b) {
    adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
    adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
  }

  // For parallel fills: set a single directed entry (callers must keep the
  // relation symmetric themselves).
  void set_raw(int a, int b, bool v) { adj_[static_cast<std::size_t>(a) * n_ + b] = v ? 1 : 0; }

  Tolerance operator&(const Tolerance& o) const {
    Tolerance r(n_);
    for (std::size_t i = 0; i < adj_.size(); ++i) r.adj_[i] = adj_[i] & o.adj_[i];
    return r;
  }

  bool operator==(const Tolerance& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Tolerance& o) const { return !(*this == o); }

  bool is_transitive() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (related(a, b))
          for (int c = 0; c < n_; ++c)
            if (related(b, c) && !related(a, c)) return false;
    return true;
  }

  // Requires transitivity.
  Partition to_partition() const {
    std::vector<int> ids(n_, -1);
    int next = 0;
    for (int a = 0; a < n_; ++a) {
      if (ids[a] >= 0) continue;
      ids[a] = next;
      for (int b = a + 1; b < n_; ++b)
        if (related(a, b)) ids[b] = next;
      ++next;
    }
    return Partition::from_assignment(std::move(ids));
  }

  // Sorted pair list with i <= j (the serialized form).
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        if (related(i, j)) out.emplace_back(i, j);
    return out;
  }

  // Ordered related pairs including the diagonal.
  std::vector<std::pair<int, int>> ordered_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (related(i, j)) out.emplace_back(i, j);
    return out;
  }

private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

} // namespace isw

#endif
