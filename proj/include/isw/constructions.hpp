#ifndef ISW_CONSTRUCTIONS_HPP
#define ISW_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isw/inverse_semigroup.hpp"

namespace isw {

InverseSemigroup trivial_semigroup();

// Chain semilattice on k elements, 0 on top: product = max (meet in the
// order 0 > 1 > ... > k-1).
InverseSemigroup chain_semilattice(int k);

InverseSemigroup cyclic_group(int n);

// Symmetric group on m points (permutations in lex order of one-line form).
InverseSemigroup symmetric_group(int m);

// Dihedral group of order 2m (symmetries of the m-gon).
InverseSemigroup dihedral_group(int m);

InverseSemigroup quaternion_group();

// Brandt semigroup B(G, n): elements (i, g, j) in [n] x G x [n], ordered
// lexicographically, plus a zero as the last element.
// (i,g,j)(k,h,l) = (i, gh, l) when j = k, else 0; (i,g,j)^-1 = (j, g^-1, i).
InverseSemigroup brandt(const InverseSemigroup& g, int n);

// Strong semilattice of groups. `lattice` must be a semilattice, `groups`
// gives one group per lattice element, and `links[{e,f}]` is the linking
// homomorphism G_e -> G_f for every comparable pair e > f (ef = f, e != f).
// Links must commute with composition along chains (checked). The element
// (e, g) has index offset(e) + g, components in lattice-element order.
InverseSemigroup strong_semilattice_of_groups(
    const InverseSemigroup& lattice, const std::vector<InverseSemigroup>& groups,
    const std::map<std::pair<int, int>, std::vector<int>>& links, std::string name = "");

// Componentwise product; (s, t) has index s * |T| + t.
InverseSemigroup direct_product(const InverseSemigroup& s, const InverseSemigroup& t);

} // namespace isw

#endif
