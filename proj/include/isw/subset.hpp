#ifndef ISW_SUBSET_HPP
#define ISW_SUBSET_HPP

#include <cstdint>
#include <vector>

namespace isw {

// Subset of {0, ..., universe-1} with bitset semantics. Canonical order for
// enumerations is (count, member list lex).
class Subset {
public:
  Subset() = default;
  explicit Subset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(int universe) {
    Subset s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  static Subset of(int universe, const std::vector<int>& members) {
    Subset s(universe);
    for (int m : members) s.set(m);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  bool subset_of(const Subset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  Subset operator&(const Subset& o) const {
    Subset r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
  }

  Subset operator|(const Subset& o) const {
    Subset r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] | o.words_[w];
    return r;
  }

  bool operator==(const Subset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  static bool canonical_less(const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.members() < b.members();
  }

  const std::vector<std::uint64_t>& raw_words() const { return words_; }

private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace isw

#endif
