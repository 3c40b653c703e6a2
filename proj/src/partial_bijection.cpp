#include "pbij/partial_bijection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pbij {

PartialBijection::PartialBijection(GroundSet ground, std::vector<Pair> pairs)
    : ground_(ground), pairs_(std::move(pairs)) {
  validate_and_canonicalize();
}

PartialBijection::PartialBijection(GroundSet ground, std::vector<Pair> pairs,
                                   Tail tail)
    : ground_(ground), pairs_(std::move(pairs)), tail_(std::move(tail)) {
  validate_and_canonicalize();
}

void PartialBijection::validate_and_canonicalize() {
  std::sort(pairs_.begin(), pairs_.end());
  std::set<unsigned> seconds;
  for (const auto& [x, y] : pairs_) {
    if (!ground_.contains(x) || !ground_.contains(y))
      throw std::invalid_argument("PartialBijection: point outside carrier");
    if (!seconds.insert(y).second)
      throw std::invalid_argument("PartialBijection: image point repeated");
  }
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i - 1].first == pairs_[i].first)
      throw std::invalid_argument("PartialBijection: domain point repeated");

  if (!tail_) return;
  if (ground_.is_finite())
    throw std::invalid_argument(
        "PartialBijection: identity tail requires the naturals carrier");
  auto& t = *tail_;
  std::sort(t.punctures.begin(), t.punctures.end());
  t.punctures.erase(std::unique(t.punctures.begin(), t.punctures.end()),
                    t.punctures.end());
  if (!t.punctures.empty() && t.punctures.front() < t.start)
    throw std::invalid_argument("PartialBijection: puncture below tail start");
  for (const auto& [x, y] : pairs_)
    if (x >= t.start || y >= t.start)
      throw std::invalid_argument(
          "PartialBijection: pair coordinate not below tail start");

  // Minimize the tail start. The point just below the start either is an
  // identity pair (absorb it), or is untouched by any pair (puncture it),
  // or blocks the descent.
  while (t.start > 0) {
    unsigned p = t.start - 1;
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{p, 0});
    if (it != pairs_.end() && it->first == p && it->second == p) {
      pairs_.erase(it);
      t.start = p;
      continue;
    }
    bool mentioned = (it != pairs_.end() && it->first == p) || seconds.count(p);
    if (!mentioned) {
      t.punctures.insert(t.punctures.begin(), p);
      t.start = p;
      continue;
    }
    break;
  }
}

PartialBijection PartialBijection::empty_map(GroundSet ground) {
  return PartialBijection(ground, {});
}

PartialBijection PartialBijection::identity_on(GroundSet ground,
                                               const NatSet& a) {
  if (!a.is_cofinite()) {
    std::vector<Pair> pairs;
    for (unsigned x : a.points()) pairs.emplace_back(x, x);
    return PartialBijection(ground, std::move(pairs));
  }
  if (ground.is_finite())
    throw std::invalid_argument(
        "identity_on: cofinite set over a finite carrier");
  return PartialBijection(ground, {}, Tail{0, a.points()});
}

PartialBijection PartialBijection::singleton(GroundSet ground, unsigned x,
                                             unsigned y) {
  return PartialBijection(ground, {{x, y}});
}

std::optional<unsigned> PartialBijection::eval(unsigned x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0});
  if (it != pairs_.end() && it->first == x) return it->second;
  if (tail_ && x >= tail_->start &&
      !std::binary_search(tail_->punctures.begin(), tail_->punctures.end(), x))
    return x;
  return std::nullopt;
}

NatSet PartialBijection::dom() const {
  std::vector<unsigned> pts;
  if (!tail_) {
    for (const auto& [x, y] : pairs_) pts.push_back(x);
    return NatSet::finite(std::move(pts));
  }
  for (unsigned x = 0; x < tail_->start; ++x)
    if (!eval(x)) pts.push_back(x);
  pts.insert(pts.end(), tail_->punctures.begin(), tail_->punctures.end());
  return NatSet::cofinite(std::move(pts));
}

NatSet PartialBijection::im() const { return inverse().dom(); }

unsigned PartialBijection::reach() const {
  unsigned b = 0;
  for (const auto& [x, y] : pairs_) b = std::max({b, x + 1, y + 1});
  if (tail_) {
    b = std::max(b, tail_->start);
    if (!tail_->punctures.empty()) b = std::max(b, tail_->punctures.back() + 1);
  }
  return b;
}

PartialBijection PartialBijection::inverse() const {
  std::vector<Pair> rev;
  rev.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) rev.emplace_back(y, x);
  if (tail_) return PartialBijection(ground_, std::move(rev), *tail_);
  return PartialBijection(ground_, std::move(rev));
}

bool PartialBijection::restricts_to(const PartialBijection& g) const {
  if (ground_ != g.ground_)
    throw std::invalid_argument("restricts_to: carrier mismatch");
  if (tail_ && !g.tail_) return false;
  unsigned b = std::max(reach(), g.reach());
  for (unsigned x = 0; x < b; ++x) {
    auto v = eval(x);
    if (v && g.eval(x) != v) return false;
  }
  return true;
}

bool PartialBijection::is_idempotent() const {
  for (const auto& [x, y] : pairs_)
    if (x != y) return false;
  return true;
}

std::string PartialBijection::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(pairs_[i].first) + "->" +
         std::to_string(pairs_[i].second);
  }
  s += "}";
  if (tail_) {
    s += "; id from " + std::to_string(tail_->start);
    if (!tail_->punctures.empty()) {
      s += " except {";
      for (std::size_t i = 0; i < tail_->punctures.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(tail_->punctures[i]);
      }
      s += "}";
    }
  }
  return s;
}

PartialBijection compose(const PartialBijection& f,
                         const PartialBijection& g) {
  if (f.ground() != g.ground())
    throw std::invalid_argument("compose: carrier mismatch");
  unsigned b = std::max(f.reach(), g.reach());
  std::vector<PartialBijection::Pair> pairs;
  for (unsigned x = 0; x < b; ++x) {
    auto y = g.eval(x);
    if (!y) continue;
    auto z = f.eval(*y);
    if (z) pairs.emplace_back(x, *z);
  }
  if (f.eventually_identity() && g.eventually_identity())
    return PartialBijection(f.ground(), std::move(pairs),
                            PartialBijection::Tail{b, {}});
  return PartialBijection(f.ground(), std::move(pairs));
}

}  // namespace pbij
