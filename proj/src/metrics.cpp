#include "pbij/metrics.hpp"

#include <stdexcept>

namespace pbij {

std::pair<int, int> disagreement(const PartialBijection& f,
                                 const PartialBijection& g, unsigned n) {
  if (f.ground() != g.ground())
    throw std::invalid_argument("disagreement: carrier mismatch");
  if (!f.ground().contains(n))
    throw std::invalid_argument("disagreement: point outside carrier");
  auto fv = f.eval(n);
  auto gv = g.eval(n);
  if (fv.has_value() != gv.has_value()) return {1, 0};
  if (fv && gv && *fv != *gv) return {0, 1};
  return {0, 0};
}

Dyadic rho(const PartialBijection& f, const PartialBijection& g) {
  if (f.ground() != g.ground())
    throw std::invalid_argument("rho: carrier mismatch");
  unsigned b = std::max(f.reach(), g.reach());
  if (f.ground().is_finite()) b = f.ground().size();
  Dyadic sum;
  for (unsigned n = 0; n < b; ++n) {
    auto [an, bn] = disagreement(f, g, n);
    if (an + bn) sum += Dyadic::weight(n);
  }
  // Above b both maps are either the identity or undefined, so the
  // indicator is constant there: 1 exactly when one map has a tail and
  // the other does not, contributing the full geometric tail 2^{-b}.
  if (!f.ground().is_finite() &&
      f.eventually_identity() != g.eventually_identity())
    sum += Dyadic::pow2_neg(b);
  return sum;
}

Dyadic rho_star(const PartialBijection& f, const PartialBijection& g) {
  return rho(f.inverse(), g.inverse());
}

Dyadic d_metric(const PartialBijection& f, const PartialBijection& g) {
  return rho(f, g) + rho_star(f, g);
}

Dyadic eta(const NatSet& a, const NatSet& b) {
  if (a.is_cofinite() == b.is_cofinite()) {
    // The symmetric difference is finite: it is contained in the union
    // of the two point lists.
    Dyadic sum;
    for (unsigned x : a.points())
      if (a.contains(x) != b.contains(x)) sum += Dyadic::weight(x);
    for (unsigned x : b.points())
      if (!std::binary_search(a.points().begin(), a.points().end(), x) &&
          a.contains(x) != b.contains(x))
        sum += Dyadic::weight(x);
    return sum;
  }
  // One finite, one cofinite: the symmetric difference is cofinite.
  // Above the listed points exactly one of the two contains everything,
  // so the tail contributes the full geometric remainder 2^{-bound}.
  unsigned bound = 0;
  for (unsigned x : a.points()) bound = std::max(bound, x + 1);
  for (unsigned x : b.points()) bound = std::max(bound, x + 1);
  Dyadic out;
  for (unsigned x = 0; x < bound; ++x)
    if (a.contains(x) != b.contains(x)) out += Dyadic::weight(x);
  out += Dyadic::pow2_neg(bound);
  return out;
}

Dyadic metric_value(MetricKind kind, const PartialBijection& f,
                    const PartialBijection& g) {
  switch (kind) {
    case MetricKind::Rho:
      return rho(f, g);
    case MetricKind::RhoStar:
      return rho_star(f, g);
    case MetricKind::DMetric:
      return d_metric(f, g);
    case MetricKind::Eta:
      throw std::invalid_argument("metric_value: eta applies to sets");
  }
  throw std::logic_error("metric_value: bad kind");
}

}  // namespace pbij
