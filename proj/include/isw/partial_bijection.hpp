#ifndef ISW_PARTIAL_BIJECTION_HPP
#define ISW_PARTIAL_BIJECTION_HPP

#include <vector>

#include "isw/inverse_semigroup.hpp"

namespace isw {

// Injective partial map on {0,...,degree-1}; image[p] is the image of p, or
// kUndefined when p is outside the domain. Products compose left to right:
// (f*g)(p) = g(f(p)).
class PartialBijection {
public:
  static constexpr int kUndefined = -1;

  explicit PartialBijection(int degree) : image_(degree, kUndefined) {}

  // Validates injectivity of the defined entries.
  static PartialBijection from_image(std::vector<int> image);
  static PartialBijection identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int apply(int p) const { return image_[p]; }
  bool defined_at(int p) const { return image_[p] != kUndefined; }
  int rank() const;

  PartialBijection compose(const PartialBijection& then) const;
  PartialBijection inverse() const;

  bool operator==(const PartialBijection& o) const { return image_ == o.image_; }
  bool operator<(const PartialBijection& o) const { return image_ < o.image_; }

  const std::vector<int>& image() const { return image_; }

private:
  std::vector<int> image_;
};

// All partial bijections on n points, image arrays in lexicographic order
// (undefined sorts first).
std::vector<PartialBijection> all_partial_bijections(int n);

struct GeneratedSemigroup {
  InverseSemigroup algebra;
  // element index -> the partial bijection it stands for; a faithful
  // embedding into IS(degree)
  std::vector<PartialBijection> embedding;
};

// Closure of the generators under composition and inversion, as an abstract
// Cayley table plus the embedding. Element order is canonical: breadth-first
// rounds from the generators, new discoveries of each round sorted
// lexicographically by image array.
GeneratedSemigroup close_partial_bijections(const std::vector<PartialBijection>& gens);

// IS(n) via closure of all partial bijections; order is sum_k C(n,k)^2 k!.
// Guarded: 1 <= n <= 4.
GeneratedSemigroup symmetric_inverse_monoid(int n);

} // namespace isw

#endif
