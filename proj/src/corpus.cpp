#include "isw/corpus.hpp"

#include "isw/constructions.hpp"
#include "isw/partial_bijection.hpp"

namespace isw {

std::vector<InverseSemigroup> standard_corpus() {
  std::vector<InverseSemigroup> corpus;
  corpus.push_back(trivial_semigroup());
  corpus.push_back(chain_semilattice(2));
  corpus.push_back(chain_semilattice(3));
  corpus.push_back(chain_semilattice(4));
  corpus.push_back(cyclic_group(2));
  corpus.push_back(cyclic_group(4));
  corpus.push_back(symmetric_group(3));
  corpus.push_back(dihedral_group(4));
  corpus.push_back(quaternion_group());

  InverseSemigroup b2 = brandt(trivial_semigroup(), 2).with_name("brandt_t2");
  corpus.push_back(b2);
  corpus.push_back(brandt(cyclic_group(2), 2).with_name("brandt_z2_2"));

  corpus.push_back(symmetric_inverse_monoid(1).algebra.with_name("is1"));
  corpus.push_back(symmetric_inverse_monoid(2).algebra.with_name("is2"));
  corpus.push_back(symmetric_inverse_monoid(3).algebra.with_name("is3"));

  // commutative Clifford: 2-chain of (Z2, Z2) with the identity link
  corpus.push_back(strong_semilattice_of_groups(chain_semilattice(2),
                                                {cyclic_group(2), cyclic_group(2)},
                                                {{{0, 1}, {0, 1}}}, "clifford_comm"));
  // mixed nilpotency classes: Q8 on top of Z2, linked by Q8 -> Q8/<i> = Z2
  corpus.push_back(strong_semilattice_of_groups(
      chain_semilattice(2), {quaternion_group(), cyclic_group(2)},
      {{{0, 1}, {0, 0, 0, 0, 1, 1, 1, 1}}}, "clifford_mixed"));

  corpus.push_back(direct_product(b2, cyclic_group(2)).with_name("b2_x_z2"));
  corpus.push_back(
      direct_product(chain_semilattice(2), chain_semilattice(2)).with_name("chain2_x_chain2"));
  return corpus;
}

} // namespace isw
