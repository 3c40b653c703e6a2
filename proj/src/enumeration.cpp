#include "pbij/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbij {

std::vector<PartialBijection> enumerate_all(unsigned n, unsigned bound) {
  if (bound > kHardEnumerationBound) bound = kHardEnumerationBound;
  if (n > bound)
    throw std::out_of_range("enumerate_all: n exceeds the configured bound");
  GroundSet ground = GroundSet::finite(n);
  std::vector<PartialBijection> out;

  // Colex order on subsets of {0..n-1} is numeric order on bitmasks.
  for (unsigned dom_mask = 0; dom_mask < (1u << n); ++dom_mask) {
    std::vector<unsigned> dom;
    for (unsigned x = 0; x < n; ++x)
      if (dom_mask & (1u << x)) dom.push_back(x);
    for (unsigned im_mask = 0; im_mask < (1u << n); ++im_mask) {
      if (__builtin_popcount(im_mask) != static_cast<int>(dom.size())) continue;
      std::vector<unsigned> im;
      for (unsigned y = 0; y < n; ++y)
        if (im_mask & (1u << y)) im.push_back(y);
      // im starts sorted, so next_permutation walks all bijections in
      // lexicographic order of the image tuple.
      do {
        std::vector<PartialBijection::Pair> pairs;
        for (std::size_t i = 0; i < dom.size(); ++i)
          pairs.emplace_back(dom[i], im[i]);
        out.emplace_back(ground, std::move(pairs));
      } while (std::next_permutation(im.begin(), im.end()));
    }
  }
  return out;
}

std::uint64_t enumeration_count(unsigned n, unsigned bound) {
  return enumerate_all(n, bound).size();
}

}  // namespace pbij
