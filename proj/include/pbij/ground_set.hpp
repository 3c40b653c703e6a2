#ifndef PBIJ_GROUND_SET_HPP
#define PBIJ_GROUND_SET_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace pbij {

/// The carrier set X: either {0,...,n-1} or all of the naturals.
/// Elements over the naturals carrier are restricted to the
/// eventually-identity class, see PartialBijection.
class GroundSet {
 public:
  static GroundSet naturals() { return GroundSet(std::nullopt); }
  static GroundSet finite(unsigned n) { return GroundSet(n); }

  bool is_finite() const { return n_.has_value(); }

  unsigned size() const {
    if (!n_) throw std::logic_error("GroundSet: naturals carrier has no size");
    return *n_;
  }

  bool contains(unsigned x) const { return !n_ || x < *n_; }

  std::string str() const {
    return n_ ? "finite(" + std::to_string(*n_) + ")" : "naturals";
  }

  friend auto operator<=>(const GroundSet&, const GroundSet&) = default;

 private:
  explicit GroundSet(std::optional<unsigned> n) : n_(n) {}
  std::optional<unsigned> n_;
};

}  // namespace pbij

#endif
