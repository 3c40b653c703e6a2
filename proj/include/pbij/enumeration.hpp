#ifndef PBIJ_ENUMERATION_HPP
#define PBIJ_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "pbij/partial_bijection.hpp"

namespace pbij {

inline constexpr unsigned kDefaultEnumerationBound = 5;
inline constexpr unsigned kHardEnumerationBound = 7;

/// Every element of I({0,...,n-1}) exactly once, in a fixed order:
/// domain subsets in colex order, then image subsets in colex order,
/// then the bijections between them lexicographically on the image
/// tuple. Deterministic, so listings are reproducible byte for byte.
///
/// Throws when n exceeds `bound`.
std::vector<PartialBijection> enumerate_all(
    unsigned n, unsigned bound = kDefaultEnumerationBound);

/// |I(Finite(n))| by enumeration (same bound checks as enumerate_all).
std::uint64_t enumeration_count(unsigned n,
                                unsigned bound = kDefaultEnumerationBound);

}  // namespace pbij

#endif
