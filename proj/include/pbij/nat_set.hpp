#ifndef PBIJ_NAT_SET_HPP
#define PBIJ_NAT_SET_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace pbij {

/// A finite or cofinite set of naturals. The cofinite case stores the
/// excluded points. Domains and images of representable partial
/// bijections are always of this shape.
class NatSet {
 public:
  NatSet() = default;  // empty

  static NatSet finite(std::vector<unsigned> members) {
    return NatSet(false, std::move(members));
  }
  static NatSet cofinite(std::vector<unsigned> excluded) {
    return NatSet(true, std::move(excluded));
  }
  static NatSet empty() { return finite({}); }
  static NatSet all() { return cofinite({}); }

  bool is_cofinite() const { return cofinite_; }

  /// Members (finite case) or excluded points (cofinite case), sorted.
  const std::vector<unsigned>& points() const { return pts_; }

  bool contains(unsigned x) const {
    bool listed = std::binary_search(pts_.begin(), pts_.end(), x);
    return cofinite_ ? !listed : listed;
  }

  NatSet complement() const { return NatSet(!cofinite_, pts_); }

  bool subset_of(const NatSet& other) const {
    if (!cofinite_ && !other.cofinite_)
      return std::includes(other.pts_.begin(), other.pts_.end(), pts_.begin(),
                           pts_.end());
    if (cofinite_ && !other.cofinite_) return false;  // infinite vs finite
    if (cofinite_ && other.cofinite_)
      return std::includes(pts_.begin(), pts_.end(), other.pts_.begin(),
                           other.pts_.end());
    // finite subset of cofinite: no member may be excluded
    return std::none_of(pts_.begin(), pts_.end(), [&](unsigned x) {
      return std::binary_search(other.pts_.begin(), other.pts_.end(), x);
    });
  }

  std::string str() const {
    std::string s = cofinite_ ? "~{" : "{";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(pts_[i]);
    }
    return s + "}";
  }

  friend auto operator<=>(const NatSet&, const NatSet&) = default;

 private:
  NatSet(bool cofinite, std::vector<unsigned> pts)
      : cofinite_(cofinite), pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  bool cofinite_ = false;
  std::vector<unsigned> pts_;
};

}  // namespace pbij

#endif
