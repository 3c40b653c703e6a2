#ifndef PBIJ_SEQUENCES_HPP
#define PBIJ_SEQUENCES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pbij/partial_bijection.hpp"

namespace pbij {

/// One moving part of a schedule tail. Fixed-point items own their
/// point at every index; the escape items describe a pair with one
/// moving coordinate equal to index + offset.
struct ScheduleItem {
  enum class Kind : unsigned char {
    Appears,       // pair (x -> y) present from index `from` on, x absent before
    Vanishes,      // pair (x -> y) present before `from`, x absent after
    EscapeImage,   // pair (x -> i + offset) from index `from` on (value escapes)
    EscapeDomain,  // pair (i + offset -> y) from index `from` on (source escapes)
  };
  Kind kind = Kind::Appears;
  unsigned x = 0;       // fixed domain point (Appears/Vanishes/EscapeImage)
  unsigned y = 0;       // fixed value (Appears/Vanishes/EscapeDomain)
  unsigned from = 0;
  unsigned offset = 0;  // escape kinds only

  static ScheduleItem appears(unsigned x, unsigned y, unsigned from) {
    return {Kind::Appears, x, y, from, 0};
  }
  static ScheduleItem vanishes(unsigned x, unsigned y, unsigned from) {
    return {Kind::Vanishes, x, y, from, 0};
  }
  static ScheduleItem escape_image(unsigned x, unsigned from, unsigned offset) {
    return {Kind::EscapeImage, x, 0, from, offset};
  }
  static ScheduleItem escape_domain(unsigned y, unsigned from, unsigned offset) {
    return {Kind::EscapeDomain, 0, y, from, offset};
  }
};

/// Tail rule with certified per-point stabilization: a base map,
/// finitely many overriding items, and optionally a growing identity
/// block covering [0, index). Fixed items take precedence over the
/// base and the growth; the moving pair of an escape item yields to
/// fixed items at the (finitely many) indices where they clash.
/// Escape items require a base without an identity tail.
struct ScheduleTail {
  PartialBijection base;
  std::vector<ScheduleItem> items;
  bool grow_identity = false;

  explicit ScheduleTail(PartialBijection b) : base(std::move(b)) {}
};

/// Opaque tail rule; every verdict over it is horizon-qualified.
struct GeneratorTail {
  std::string rule;
  unsigned horizon = 32;
};

/// A finitely described sequence in I(X): explicit prefix plus a tail
/// rule. The `inverted` flag presents the pointwise-inverted sequence
/// without rewriting the rule.
struct SequenceSpec {
  std::string name;
  GroundSet ground = GroundSet::naturals();
  std::vector<PartialBijection> prefix;
  std::variant<PartialBijection, ScheduleTail, GeneratorTail> tail;
  bool inverted = false;
  /// Declared limits per metric ("rho", "rho_star", "d"), when the
  /// author of the spec asserts convergence; verified by the tools.
  std::vector<std::pair<std::string, PartialBijection>> declared_limits;

  bool is_constant() const {
    return std::holds_alternative<PartialBijection>(tail);
  }
  bool is_schedule() const { return std::holds_alternative<ScheduleTail>(tail); }
  bool is_generator() const {
    return std::holds_alternative<GeneratorTail>(tail);
  }
  const ScheduleTail& schedule() const { return std::get<ScheduleTail>(tail); }
  const GeneratorTail& generator() const {
    return std::get<GeneratorTail>(tail);
  }

  std::optional<PartialBijection> declared_limit(const std::string& metric) const {
    for (const auto& [k, v] : declared_limits)
      if (k == metric) return v;
    return std::nullopt;
  }
};

/// The element s_i, materialized and validated. Total for every index.
PartialBijection element_at(const SequenceSpec& spec, unsigned i);

/// The pointwise-inverted sequence (s_i^{-1})_i.
SequenceSpec invert_spec(const SequenceSpec& spec);

/// The right-restricted sequence (s_i o 1_A)_i for a finite or cofinite
/// A. Only defined for non-inverted Constant and Schedule tails.
SequenceSpec restrict_spec(const SequenceSpec& spec, const NatSet& a);

/// Structural checks: item points consistent, escapes not mixed with an
/// identity-tail base, and materializations near every stabilization
/// index are valid elements. Throws std::invalid_argument on failure.
void validate_spec(const SequenceSpec& spec);

/// Index from which all fixed items have switched and the prefix is
/// over; analyses quantify from here.
unsigned stabilization_index(const SequenceSpec& spec);

SequenceSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const SequenceSpec& spec);
SequenceSpec parse_spec(std::string_view json_text);

const std::vector<std::string>& generator_rule_names();

}  // namespace pbij

#endif
