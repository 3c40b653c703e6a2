#ifndef PBIJ_METRICS_HPP
#define PBIJ_METRICS_HPP

#include <utility>

#include "pbij/dyadic.hpp"
#include "pbij/partial_bijection.hpp"

namespace pbij {

enum class MetricKind { Rho, RhoStar, DMetric, Eta };

/// The coordinate-n disagreement pair (a_n, b_n): a_n = 1 iff n lies in
/// exactly one of the two domains; b_n = 1 iff both maps are defined at
/// n with different values. a_n + b_n <= 1 always.
std::pair<int, int> disagreement(const PartialBijection& f,
                                 const PartialBijection& g, unsigned n);

/// rho(f,g) = sum_n (a_n + b_n) * 2^{-(n+1)}, summed exactly. The
/// disagreement indicator of two representable maps is eventually
/// constant, so the geometric tail closes the sum in finitely many
/// terms. 0 <= rho <= 1 and rho(f,g) = 0 iff f = g.
Dyadic rho(const PartialBijection& f, const PartialBijection& g);

/// rho*(f,g) = rho(f^{-1}, g^{-1}).
Dyadic rho_star(const PartialBijection& f, const PartialBijection& g);

/// d = rho + rho*, exactly; 0 <= d <= 2.
Dyadic d_metric(const PartialBijection& f, const PartialBijection& g);

/// The induced metric on sets: eta(A,B) = sum over the symmetric
/// difference of the weights, which equals rho(1_A, 1_B).
Dyadic eta(const NatSet& a, const NatSet& b);

Dyadic metric_value(MetricKind kind, const PartialBijection& f,
                    const PartialBijection& g);

}  // namespace pbij

#endif
