#include "isw/partial_bijection.hpp"

#include <algorithm>
#include <map>

#include "isw/errors.hpp"

namespace isw {

PartialBijection PartialBijection::from_image(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> seen(n, false);
  for (int v : image) {
    if (v == kUndefined) continue;
    if (v < 0 || v >= n) throw invalid_table("partial bijection image point out of range");
    if (seen[v]) throw invalid_table("partial bijection image not injective");
    seen[v] = true;
  }
  PartialBijection f(n);
  f.image_ = std::move(image);
  return f;
}

PartialBijection PartialBijection::identity(int degree) {
  PartialBijection f(degree);
  for (int p = 0; p < degree; ++p) f.image_[p] = p;
  return f;
}

int PartialBijection::rank() const {
  int r = 0;
  for (int v : image_)
    if (v != kUndefined) ++r;
  return r;
}

PartialBijection PartialBijection::compose(const PartialBijection& then) const {
  PartialBijection f(degree());
  for (int p = 0; p < degree(); ++p) {
    int q = image_[p];
    f.image_[p] = (q == kUndefined) ? kUndefined : then.image_[q];
  }
  return f;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection f(degree());
  for (int p = 0; p < degree(); ++p)
    if (image_[p] != kUndefined) f.image_[image_[p]] = p;
  return f;
}

std::vector<PartialBijection> all_partial_bijections(int n) {
  // odometer over image arrays: each point maps to undefined or a point not
  // already used
  std::vector<PartialBijection> out;
  std::vector<int> img(n, PartialBijection::kUndefined);
  auto rec = [&](auto&& self, int p) -> void {
    if (p == n) {
      out.push_back(PartialBijection::from_image(img));
      return;
    }
    img[p] = PartialBijection::kUndefined;
    self(self, p + 1);
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int q = 0; q < p && !used; ++q) used = img[q] == v;
      if (used) continue;
      img[p] = v;
      self(self, p + 1);
      img[p] = PartialBijection::kUndefined;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

GeneratedSemigroup close_partial_bijections(const std::vector<PartialBijection>& gens) {
  if (gens.empty()) throw empty_generator_set();
  const int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw invalid_table("generators have mixed degrees");

  std::vector<PartialBijection> elems;
  std::map<std::vector<int>, int> index;
  for (const auto& g : gens)
    if (index.emplace(g.image(), static_cast<int>(elems.size())).second) elems.push_back(g);

  // breadth-first rounds; each round closes the current set under inversion
  // and pairwise products, new elements sorted lexicographically
  std::size_t known = 0;
  while (known < elems.size()) {
    known = elems.size();
    std::vector<PartialBijection> fresh;
    auto consider = [&](const PartialBijection& f) {
      if (!index.count(f.image())) {
        index.emplace(f.image(), -1);
        fresh.push_back(f);
      }
    };
    for (std::size_t i = 0; i < known; ++i) consider(elems[i].inverse());
    for (std::size_t i = 0; i < known; ++i)
      for (std::size_t j = 0; j < known; ++j) consider(elems[i].compose(elems[j]));
    std::sort(fresh.begin(), fresh.end());
    for (const auto& f : fresh) {
      index[f.image()] = static_cast<int>(elems.size());
      elems.push_back(f);
    }
  }

  const int n = static_cast<int>(elems.size());
  CayleyTable table;
  table.order = n;
  table.product.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table.product[static_cast<std::size_t>(i) * n + j] =
          index.at(elems[i].compose(elems[j]).image());

  GeneratedSemigroup out{InverseSemigroup::from_cayley_table(std::move(table)),
                         std::move(elems)};
  return out;
}

GeneratedSemigroup symmetric_inverse_monoid(int n) {
  if (n < 1 || n > 4) throw degree_too_large(n);
  auto g = close_partial_bijections(all_partial_bijections(n));
  return g;
}

} // namespace isw
