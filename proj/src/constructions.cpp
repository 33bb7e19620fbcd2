#include "isw/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "isw/errors.hpp"

namespace isw {

namespace {

InverseSemigroup table_from(int n, const std::vector<int>& prod, std::string name) {
  return InverseSemigroup::from_cayley_table(CayleyTable{n, prod}, std::move(name));
}

} // namespace

InverseSemigroup trivial_semigroup() { return table_from(1, {0}, "trivial"); }

InverseSemigroup chain_semilattice(int k) {
  std::vector<int> prod(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) prod[static_cast<std::size_t>(a) * k + b] = std::max(a, b);
  return table_from(k, prod, "chain" + std::to_string(k));
}

InverseSemigroup cyclic_group(int n) {
  std::vector<int> prod(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) prod[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return table_from(n, prod, "z" + std::to_string(n));
}

InverseSemigroup symmetric_group(int m) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> prod(static_cast<std::size_t>(n) * n);
  std::vector<int> q(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < m; ++x) q[x] = perms[b][perms[a][x]];
      prod[static_cast<std::size_t>(a) * n + b] = index_of(q);
    }
  return table_from(n, prod, "s" + std::to_string(m));
}

InverseSemigroup dihedral_group(int m) {
  // elements r^i s^j with 0 <= i < m, j in {0,1}, index 2*i + j; s r = r^-1 s
  const int n = 2 * m;
  auto idx = [&](int i, int j) { return 2 * i + j; };
  std::vector<int> prod(static_cast<std::size_t>(n) * n);
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 ? (i1 - i2 + m) % m : (i1 + i2) % m;
          int j = (j1 + j2) % 2;
          prod[static_cast<std::size_t>(idx(i1, j1)) * n + idx(i2, j2)] = idx(i, j);
        }
  return table_from(n, prod, "d" + std::to_string(m));
}

InverseSemigroup quaternion_group() {
  // index = 2*axis + sign with axes 0:1, 1:i, 2:j, 3:k; sign 0:+, 1:-
  // axis product table and its sign, from ij=k, jk=i, ki=j
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const int n = 8;
  std::vector<int> prod(64);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ax = a / 2, sa = a % 2, bx = b / 2, sb = b % 2;
      int cx = axis[ax][bx];
      int sc = (sa + sb + neg[ax][bx]) % 2;
      prod[static_cast<std::size_t>(a) * n + b] = 2 * cx + sc;
    }
  return table_from(n, prod, "q8");
}

InverseSemigroup brandt(const InverseSemigroup& g, int n) {
  if (!is_group(g)) throw not_a_group();
  const int m = g.order();
  const int order = n * m * n + 1;
  const int zero = order - 1;
  auto idx = [&](int i, int x, int j) { return (i * m + x) * n + j; };
  std::vector<int> prod(static_cast<std::size_t>(order) * order, zero);
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < m; ++x)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int y = 0; y < m; ++y)
            for (int l = 0; l < n; ++l)
              if (j == k)
                prod[static_cast<std::size_t>(idx(i, x, j)) * order + idx(k, y, l)] =
                    idx(i, g.product(x, y), l);
  return table_from(order, prod,
                    "brandt(" + (g.name().empty() ? "?" : g.name()) + "," + std::to_string(n) + ")");
}

InverseSemigroup strong_semilattice_of_groups(
    const InverseSemigroup& lattice, const std::vector<InverseSemigroup>& groups,
    const std::map<std::pair<int, int>, std::vector<int>>& links, std::string name) {
  const int m = lattice.order();
  if (static_cast<int>(lattice.idempotents().size()) != m)
    throw invalid_table("lattice argument is not a semilattice");
  if (static_cast<int>(groups.size()) != m)
    throw invalid_table("need one group per lattice element");
  for (const auto& g : groups)
    if (!is_group(g)) throw not_a_group();

  // link(e,e) is the identity; below e > f means ef = f with e != f
  auto link_at = [&](int e, int f, int x) -> int {
    if (e == f) return x;
    auto it = links.find({e, f});
    if (it == links.end()) throw invalid_table("missing link for comparable pair");
    return it->second[x];
  };

  // each provided link must be a homomorphism with the right shape
  for (const auto& [edge, map] : links) {
    auto [e, f] = edge;
    if (e < 0 || e >= m || f < 0 || f >= m || e == f || lattice.product(e, f) != f)
      throw invalid_table("link given for a non-comparable pair");
    if (static_cast<int>(map.size()) != groups[e].order())
      throw invalid_table("link map has wrong domain size");
    for (int v : map)
      if (v < 0 || v >= groups[f].order()) throw invalid_table("link map value out of range");
    for (int x = 0; x < groups[e].order(); ++x)
      for (int y = 0; y < groups[e].order(); ++y)
        if (map[groups[e].product(x, y)] != groups[f].product(map[x], map[y]))
          throw links_not_functorial(e, f, -1);
  }

  // transitivity: e > f > g implies link(f,g) o link(e,f) == link(e,g)
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      for (int g = 0; g < m; ++g) {
        if (e == f || f == g || e == g) continue;
        if (lattice.product(e, f) != f || lattice.product(f, g) != g) continue;
        for (int x = 0; x < groups[e].order(); ++x)
          if (link_at(f, g, link_at(e, f, x)) != link_at(e, g, x))
            throw links_not_functorial(e, f, g);
      }

  std::vector<int> offset(m + 1, 0);
  for (int e = 0; e < m; ++e) offset[e + 1] = offset[e] + groups[e].order();
  const int n = offset[m];

  std::vector<int> prod(static_cast<std::size_t>(n) * n);
  for (int e = 0; e < m; ++e)
    for (int x = 0; x < groups[e].order(); ++x)
      for (int f = 0; f < m; ++f)
        for (int y = 0; y < groups[f].order(); ++y) {
          int meet = lattice.product(e, f);
          int z = groups[meet].product(link_at(e, meet, x), link_at(f, meet, y));
          prod[static_cast<std::size_t>(offset[e] + x) * n + (offset[f] + y)] = offset[meet] + z;
        }
  return table_from(n, prod, std::move(name));
}

InverseSemigroup direct_product(const InverseSemigroup& s, const InverseSemigroup& t) {
  const int ns = s.order(), nt = t.order(), n = ns * nt;
  std::vector<int> prod(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b)
      for (int c = 0; c < ns; ++c)
        for (int d = 0; d < nt; ++d)
          prod[static_cast<std::size_t>(a * nt + b) * n + (c * nt + d)] =
              s.product(a, c) * nt + t.product(b, d);
  std::string name;
  if (!s.name().empty() && !t.name().empty()) name = s.name() + "_x_" + t.name();
  return table_from(n, prod, std::move(name));
}

} // namespace isw
