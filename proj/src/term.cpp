#include "isw/term.hpp"

#include "isw/errors.hpp"

namespace isw {

Term Term::make(int arity, std::vector<std::pair<int, int>> word) {
  if (word.empty()) throw invalid_table("term word must be nonempty");
  for (auto [v, e] : word) {
    if (v < 0 || v >= arity) throw invalid_table("term variable out of range");
    if (e != 1 && e != -1) throw invalid_table("term exponent must be +-1");
  }
  return Term{arity, std::move(word)};
}

int eval_term(const InverseSemigroup& s, const Term& t, std::span<const int> assignment) {
  if (static_cast<int>(assignment.size()) != t.arity)
    throw arity_mismatch(t.arity, static_cast<int>(assignment.size()));
  int acc = -1;
  for (auto [v, e] : t.word) {
    int x = assignment[v];
    if (e < 0) x = s.inverse(x);
    acc = acc < 0 ? x : s.product(acc, x);
  }
  return acc;
}

Term term_l() { return Term::make(2, {{0, 1}, {1, 1}}); }
Term term_m() { return Term::make(3, {{1, 1}, {0, 1}, {2, 1}}); }
Term term_r() { return Term::make(2, {{1, 1}, {0, 1}}); }

} // namespace isw
