#ifndef PBIJ_PARSE_HPP
#define PBIJ_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pbij/partial_bijection.hpp"

namespace pbij {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
  std::size_t position;
};

/// Partial-bijection literal: `{x1->y1, x2->y2}` optionally followed by
/// `; id from N` or `; id from N except {p1,p2}`. Whitespace-insensitive.
PartialBijection parse_pbij(std::string_view text, GroundSet ground);

/// Set literal: `{0,1,2}` or the cofinite form `~{5}`.
NatSet parse_nat_set(std::string_view text);

/// Permutation literal: one-line image list `[p0, p1, ..., pm-1]`.
std::vector<unsigned> parse_permutation_images(std::string_view text);

}  // namespace pbij

#endif
