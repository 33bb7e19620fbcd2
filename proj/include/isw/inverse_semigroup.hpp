#ifndef ISW_INVERSE_SEMIGROUP_HPP
#define ISW_INVERSE_SEMIGROUP_HPP

#include <string>
#include <vector>

#include "isw/partition.hpp"
#include "isw/subset.hpp"

namespace isw {

// Finite binary operation table, row-major: product[a * order + b] = a*b.
struct CayleyTable {
  int order = 0;
  std::vector<int> product;

  int at(int a, int b) const { return product[static_cast<std::size_t>(a) * order + b]; }
};

inline constexpr int kDefaultMaxOrder = 512;

// A finite inverse semigroup: validated Cayley table plus the induced
// inversion map and idempotent set. Elements are dense indices 0..order-1.
// Immutable after construction; all operations on it are pure.
class InverseSemigroup {
public:
  // Validates in the order: entries in range, associativity, regularity,
  // commuting idempotents. Uniqueness of inverses is then scanned directly;
  // a violation after the earlier checks pass would falsify the classical
  // equivalence (regular + commuting idempotents <=> inverse) and throws
  // theorem_mismatch.
  static InverseSemigroup from_cayley_table(CayleyTable table, std::string name = "",
                                            int max_order = kDefaultMaxOrder);

  int order() const { return order_; }
  int product(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inv_[a]; }

  bool is_idempotent(int e) const { return idem_pos_[e] >= 0; }
  const std::vector<int>& idempotents() const { return idempotents_; }
  // Position of e in idempotents(), -1 for non-idempotents.
  int idempotent_position(int e) const { return idem_pos_[e]; }

  Subset idempotent_set() const { return Subset::of(order_, idempotents_); }
  Subset universe() const { return Subset::full(order_); }

  const std::string& name() const { return name_; }
  InverseSemigroup with_name(std::string name) const {
    InverseSemigroup s(*this);
    s.name_ = std::move(name);
    return s;
  }

  const std::vector<int>& raw_table() const { return table_; }

private:
  InverseSemigroup() = default;

  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> idempotents_;
  std::vector<int> idem_pos_;
  std::string name_;
};

struct GreenRelations {
  Partition l;
  Partition r;
  Partition h;
};

// L, R by the equational criteria (a L b iff a^-1 a = b^-1 b, dually R);
// H = L meet R.
GreenRelations green_relations(const InverseSemigroup& s);

// C(S) = {a : ax = xa for all x}.
Subset classical_center(const InverseSemigroup& s);

// Idempotents commute with everything.
bool is_clifford(const InverseSemigroup& s);

// Exactly one idempotent.
bool is_group(const InverseSemigroup& s);

bool is_commutative(const InverseSemigroup& s);

// Product/inversion closure of a subset (not necessarily full).
bool is_inverse_subsemigroup(const InverseSemigroup& s, const Subset& x);

} // namespace isw

#endif
