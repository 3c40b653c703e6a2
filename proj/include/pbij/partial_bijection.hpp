#ifndef PBIJ_PARTIAL_BIJECTION_HPP
#define PBIJ_PARTIAL_BIJECTION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbij/ground_set.hpp"
#include "pbij/nat_set.hpp"

namespace pbij {

/// An injective partial map on the ground set, i.e. an element of the
/// symmetric inverse semigroup I(X).
///
/// Over a finite carrier the map is the finite list of pairs. Over the
/// naturals it may additionally carry an identity tail: the map acts as
/// the identity on [start, oo) minus a finite set of punctures, and the
/// explicit pairs live strictly below `start`. This eventually-identity
/// class is closed under composition and inversion and contains the
/// partial identity of every finite and cofinite set, which is all the
/// infinite behaviour the verification suites need.
///
/// Values are immutable and canonical after construction: pairs sorted
/// by first coordinate, tail start minimal (identity pairs adjacent to
/// the start are absorbed into it, undefined points become punctures).
/// Structural equality therefore coincides with extensional equality.
class PartialBijection {
 public:
  struct Tail {
    unsigned start = 0;
    std::vector<unsigned> punctures;  // sorted, all >= start
    friend auto operator<=>(const Tail&, const Tail&) = default;
  };
  using Pair = std::pair<unsigned, unsigned>;

  /// Finite map from explicit pairs (no tail).
  PartialBijection(GroundSet ground, std::vector<Pair> pairs);
  /// Eventually-identity map; ground must be the naturals.
  PartialBijection(GroundSet ground, std::vector<Pair> pairs, Tail tail);

  static PartialBijection empty_map(GroundSet ground);
  /// The partial identity 1_A. A must be finite, or cofinite over the
  /// naturals carrier.
  static PartialBijection identity_on(GroundSet ground, const NatSet& a);
  /// The one-point map {x -> y}.
  static PartialBijection singleton(GroundSet ground, unsigned x, unsigned y);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const std::optional<Tail>& tail() const { return tail_; }

  bool eventually_identity() const { return tail_.has_value(); }

  /// f(x), or nullopt when x is outside the domain. Partiality is the
  /// normal case, not an error.
  std::optional<unsigned> eval(unsigned x) const;

  NatSet dom() const;
  NatSet im() const;

  /// Least B such that above B the map is either the pure identity
  /// (tail present) or undefined (no tail).
  unsigned reach() const;

  PartialBijection inverse() const;

  /// True iff this map is g restricted to a smaller domain (f <= g in
  /// the natural order of I(X)).
  bool restricts_to(const PartialBijection& g) const;

  bool is_idempotent() const;

  std::string str() const;

  friend bool operator==(const PartialBijection&,
                         const PartialBijection&) = default;
  friend auto operator<=>(const PartialBijection&,
                          const PartialBijection&) = default;

 private:
  void validate_and_canonicalize();

  GroundSet ground_ = GroundSet::naturals();
  std::vector<Pair> pairs_;
  std::optional<Tail> tail_;
};

/// f o g, defined by dom(f o g) = g^{-1}(dom(f) n im(g)) and
/// (f o g)(x) = f(g(x)). Throws on carrier mismatch.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);

}  // namespace pbij

#endif
