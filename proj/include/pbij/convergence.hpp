#ifndef PBIJ_CONVERGENCE_HPP
#define PBIJ_CONVERGENCE_HPP

#include <optional>
#include <string>
#include <variant>

#include "pbij/atoms.hpp"
#include "pbij/metrics.hpp"
#include "pbij/sequences.hpp"

namespace pbij {

/// Convergence verdict. Certified tails (constant or schedule) produce
/// exact Converges/Diverges answers; generator tails only ever produce
/// Undetermined at their horizon.
struct Verdict {
  enum class Kind { Converges, Diverges, Undetermined };
  Kind kind = Kind::Undetermined;
  std::optional<unsigned> witness_point;
  std::string reason;
  std::optional<unsigned> horizon;

  bool converges() const { return kind == Kind::Converges; }
  bool diverges() const { return kind == Kind::Diverges; }
  std::string str() const;

  static Verdict yes() { return {Kind::Converges, {}, "", {}}; }
  static Verdict no(unsigned point, std::string why) {
    return {Kind::Diverges, point, std::move(why), {}};
  }
  static Verdict open(unsigned horizon) {
    return {Kind::Undetermined, {}, "horizon-bounded rule", horizon};
  }
};

/// Sequential convergence in tau1: every point of dom(f) eventually
/// maps to its f-value, every other point eventually leaves the
/// domains.
Verdict converges_tau1(const SequenceSpec& seq, const PartialBijection& f);

/// tau2 convergence = tau1 convergence of the inverted sequence to
/// f^{-1}; taupp = both at once.
Verdict converges_tau2(const SequenceSpec& seq, const PartialBijection& f);
Verdict converges_taupp(const SequenceSpec& seq, const PartialBijection& f);

/// Convergence under rho / rho* / d, decided from the certified
/// stabilization structure and corroborated with exact sampled
/// distances on materialized elements.
Verdict metric_converges(const SequenceSpec& seq, const PartialBijection& f,
                         MetricKind metric);

/// Runs the matching topological and metric verdicts (tau1~rho,
/// tau2~rho*, taupp~d) and reports whether they agree.
struct AgreementReport {
  Verdict topological;
  Verdict metric;
  bool agree = false;
};
AgreementReport metric_convergence_agrees(const SequenceSpec& seq,
                                          const PartialBijection& f,
                                          MetricKind metric);

struct NotCauchy {
  unsigned index_i = 0;
  unsigned index_j = 0;
  unsigned point = 0;
  std::string reason;
};
using CauchyResult = std::variant<PartialBijection, NotCauchy>;

/// The completion construction: when the sequence is Cauchy under the
/// metric, build the limit pointwise (domain = limit of the domains,
/// values = eventual values) and verify the sequence converges to it;
/// otherwise return a concrete witness pair of indices and a point
/// whose disagreement never vanishes.
CauchyResult cauchy_limit(const SequenceSpec& seq, MetricKind metric);

/// For a sequence with s_n -> s and s_n^{-1} -> t under d, checks
/// t = s^{-1}. Returns nothing when the hypotheses fail.
struct InverseLimitReport {
  bool applicable = false;
  bool holds = false;
  std::optional<PartialBijection> limit;
  std::optional<PartialBijection> inverse_limit;
};
InverseLimitReport inverse_pair_limit_check(const SequenceSpec& seq);

/// The almost-convergence implication at the d-metric: if the sequence
/// taupp-converges to f and the right-restriction to a cofinite A
/// d-converges to f o 1_A, then the sequence d-converges to f.
struct AlmostConvergenceReport {
  bool hypothesis_taupp = false;
  bool hypothesis_restricted = false;
  bool conclusion_d = false;
  bool holds = false;  // hypotheses certified implies conclusion observed
};
AlmostConvergenceReport almost_convergence_check(const SequenceSpec& seq,
                                                 const PartialBijection& f,
                                                 const NatSet& a);

}  // namespace pbij

#endif
