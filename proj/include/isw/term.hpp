#ifndef ISW_TERM_HPP
#define ISW_TERM_HPP

#include <span>
#include <utility>
#include <vector>

#include "isw/inverse_semigroup.hpp"

namespace isw {

// Inverse-semigroup term in normal form: a nonempty word of signed variables
// x_i^e with e in {+1, -1}. Variable 0 is the distinguished one in term
// conditions.
struct Term {
  int arity = 0;
  std::vector<std::pair<int, int>> word; // (variable, exponent)

  static Term make(int arity, std::vector<std::pair<int, int>> word);

  int length() const { return static_cast<int>(word.size()); }
  bool uses(int var) const {
    for (auto [v, e] : word)
      if (v == var) return true;
    return false;
  }
};

// Left-to-right fold of the word over the assignment.
int eval_term(const InverseSemigroup& s, const Term& t, std::span<const int> assignment);

// l(x,y) = xy, m(x,y,z) = yxz, r(x,y) = yx.
Term term_l();
Term term_m();
Term term_r();

} // namespace isw

#endif
