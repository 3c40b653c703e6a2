#include "pbij/sequences.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pbij/parse.hpp"

namespace pbij {

namespace {

bool is_fixed(const ScheduleItem& it) {
  return it.kind != ScheduleItem::Kind::EscapeDomain;
}

// Domain points owned by fixed items (present or absent, the item decides).
std::set<unsigned> fixed_owned_points(const ScheduleTail& t) {
  std::set<unsigned> owned;
  for (const auto& it : t.items)
    if (is_fixed(it)) {
      if (!owned.insert(it.x).second)
        throw std::invalid_argument("schedule: two items own point " +
                                    std::to_string(it.x));
    }
  return owned;
}

PartialBijection materialize_schedule(const ScheduleTail& t,
                                      const GroundSet& ground, unsigned i) {
  std::set<unsigned> owned = fixed_owned_points(t);
  std::map<unsigned, unsigned> m;
  for (const auto& it : t.items) {
    switch (it.kind) {
      case ScheduleItem::Kind::Appears:
        if (i >= it.from) m[it.x] = it.y;
        break;
      case ScheduleItem::Kind::Vanishes:
        if (i < it.from) m[it.x] = it.y;
        break;
      case ScheduleItem::Kind::EscapeImage:
        if (i >= it.from) m[it.x] = i + it.offset;
        break;
      case ScheduleItem::Kind::EscapeDomain:
        // The moving pair yields to fixed items.
        if (i >= it.from && !owned.count(i + it.offset))
          m[i + it.offset] = it.y;
        break;
    }
  }
  unsigned bound = t.base.reach();
  for (const auto& it : t.items) {
    bound = std::max({bound, it.x + 1, it.y + 1});
    if (it.kind == ScheduleItem::Kind::EscapeImage ||
        it.kind == ScheduleItem::Kind::EscapeDomain)
      bound = std::max(bound, i + it.offset + 1);
  }
  if (t.grow_identity) bound = std::max(bound, i);

  std::set<unsigned> moving;
  for (const auto& it : t.items)
    if (it.kind == ScheduleItem::Kind::EscapeDomain && i >= it.from)
      moving.insert(i + it.offset);

  for (unsigned x = 0; x < bound; ++x) {
    if (owned.count(x) || moving.count(x) || m.count(x)) continue;
    auto bv = t.base.eval(x);
    if (bv)
      m[x] = *bv;
    else if (t.grow_identity && x < i)
      m[x] = x;
  }

  std::vector<PartialBijection::Pair> pairs(m.begin(), m.end());
  if (t.base.eventually_identity())
    return PartialBijection(ground, std::move(pairs),
                            PartialBijection::Tail{bound, {}});
  return PartialBijection(ground, std::move(pairs));
}

PartialBijection generator_element(const GeneratorTail& g,
                                   const GroundSet& ground, unsigned i) {
  if (g.rule == "alternating_idempotents")
    return i % 2 == 0 ? PartialBijection::empty_map(ground)
                      : PartialBijection::identity_on(ground,
                                                      NatSet::finite({0}));
  if (g.rule == "identity_block") {
    std::vector<unsigned> pts;
    for (unsigned x = i; x < 2 * i; ++x) pts.push_back(x);
    return PartialBijection::identity_on(ground, NatSet::finite(pts));
  }
  if (g.rule == "swap_walk") {
    // the transposition (i, i+1) as a partial map
    return PartialBijection(ground, {{i, i + 1}, {i + 1, i}});
  }
  throw std::invalid_argument("unknown generator rule: " + g.rule);
}

}  // namespace

const std::vector<std::string>& generator_rule_names() {
  static const std::vector<std::string> names = {
      "alternating_idempotents", "identity_block", "swap_walk"};
  return names;
}

PartialBijection element_at(const SequenceSpec& spec, unsigned i) {
  PartialBijection e = [&] {
    if (i < spec.prefix.size()) return spec.prefix[i];
    if (spec.is_constant()) return std::get<PartialBijection>(spec.tail);
    if (spec.is_schedule())
      return materialize_schedule(spec.schedule(), spec.ground, i);
    return generator_element(spec.generator(), spec.ground, i);
  }();
  return spec.inverted ? e.inverse() : e;
}

SequenceSpec invert_spec(const SequenceSpec& spec) {
  SequenceSpec out = spec;
  out.inverted = !spec.inverted;
  out.declared_limits.clear();
  return out;
}

unsigned stabilization_index(const SequenceSpec& spec) {
  unsigned k = static_cast<unsigned>(spec.prefix.size());
  if (spec.is_schedule()) {
    const auto& t = spec.schedule();
    for (const auto& it : t.items) {
      k = std::max(k, it.from);
      if (is_fixed(it)) k = std::max(k, it.x + 1);
      k = std::max(k, it.y + 1);
    }
    k = std::max(k, t.base.reach());
  }
  return k;
}

void validate_spec(const SequenceSpec& spec) {
  for (const auto& p : spec.prefix)
    if (p.ground() != spec.ground)
      throw std::invalid_argument("spec: prefix element over a different carrier");
  if (spec.is_constant()) {
    if (std::get<PartialBijection>(spec.tail).ground() != spec.ground)
      throw std::invalid_argument("spec: constant over a different carrier");
    return;
  }
  if (spec.is_generator()) {
    element_at(spec, spec.prefix.size());  // rule known and materializable
    return;
  }
  const auto& t = spec.schedule();
  if (t.base.ground() != spec.ground)
    throw std::invalid_argument("spec: base over a different carrier");
  fixed_owned_points(t);  // ownership collisions
  bool has_escape = false;
  for (const auto& it : t.items)
    if (it.kind == ScheduleItem::Kind::EscapeImage ||
        it.kind == ScheduleItem::Kind::EscapeDomain)
      has_escape = true;
  if (has_escape && t.base.eventually_identity())
    throw std::invalid_argument(
        "spec: escape items clash with an identity-tail base");
  if (t.grow_identity && spec.ground.is_finite())
    throw std::invalid_argument("spec: growing identity needs the naturals");
  // Probe every index where distinct rules could first interact; any
  // injectivity clash surfaces as a constructor error here.
  unsigned hi = stabilization_index(spec) + 4;
  try {
    for (unsigned i = 0; i <= hi; ++i) (void)element_at(spec, i);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("spec: inconsistent elements: ") +
                                e.what());
  }
}

SequenceSpec restrict_spec(const SequenceSpec& spec, const NatSet& a) {
  if (spec.inverted)
    throw std::invalid_argument("restrict_spec: inverted specs unsupported");
  PartialBijection ia = PartialBijection::identity_on(spec.ground, a);
  SequenceSpec out;
  out.name = spec.name + "|restricted";
  out.ground = spec.ground;
  for (const auto& p : spec.prefix) out.prefix.push_back(compose(p, ia));

  if (spec.is_constant()) {
    out.tail = compose(std::get<PartialBijection>(spec.tail), ia);
    return out;
  }
  if (spec.is_generator())
    throw std::invalid_argument("restrict_spec: generator tails unsupported");

  const auto& t = spec.schedule();
  ScheduleTail rt(compose(t.base, ia));
  rt.grow_identity = t.grow_identity;

  std::set<unsigned> fixed = fixed_owned_points(t);
  unsigned extended_prefix_to = static_cast<unsigned>(out.prefix.size());
  for (const auto& it : t.items) {
    switch (it.kind) {
      case ScheduleItem::Kind::Appears:
      case ScheduleItem::Kind::Vanishes:
      case ScheduleItem::Kind::EscapeImage:
        if (a.contains(it.x)) rt.items.push_back(it);
        break;
      case ScheduleItem::Kind::EscapeDomain: {
        // The moving point i+offset either leaves the excluded points
        // behind for good (cofinite A, keep the item) or leaves A for
        // good (finite A, drop it). Earlier indices where the two rules
        // differ become explicit prefix entries.
        unsigned first_clean = it.from;
        for (unsigned p : a.points())
          if (p >= it.offset)
            first_clean = std::max(first_clean, p - it.offset + 1);
        extended_prefix_to = std::max(extended_prefix_to, first_clean);
        if (a.is_cofinite()) rt.items.push_back(it);
        break;
      }
    }
  }

  if (a.is_cofinite()) {
    // Points outside A never belong to a restricted domain.
    for (unsigned x : a.points())
      rt.items.push_back(ScheduleItem::vanishes(x, x, 0));
  } else {
    // A finite: growth beyond A is cut off entirely; identity on A
    // still appears pointwise.
    rt.grow_identity = false;
    if (t.grow_identity)
      for (unsigned x : a.points())
        if (!fixed.count(x) && !t.base.eval(x))
          rt.items.push_back(ScheduleItem::appears(x, x, x + 1));
  }
  out.tail = std::move(rt);

  // Materialize the indices where the restricted tail rule would
  // disagree with the true restriction, as explicit prefix entries.
  for (unsigned i = static_cast<unsigned>(out.prefix.size());
       i < extended_prefix_to; ++i)
    out.prefix.push_back(compose(element_at(spec, i), ia));
  validate_spec(out);
  // The transformed rule must reproduce s_i o 1_A exactly; probe it.
  unsigned hi = std::max(stabilization_index(spec), stabilization_index(out)) + 4;
  for (unsigned i = 0; i <= hi; ++i)
    if (element_at(out, i) != compose(element_at(spec, i), ia))
      throw std::logic_error("restrict_spec: transformed rule mismatch");
  return out;
}

namespace {

ScheduleItem item_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "appears")
    return ScheduleItem::appears(j.at("x").get<unsigned>(),
                                 j.at("y").get<unsigned>(),
                                 j.value("from", 0u));
  if (kind == "vanishes")
    return ScheduleItem::vanishes(j.at("x").get<unsigned>(),
                                  j.at("y").get<unsigned>(),
                                  j.value("from", 0u));
  if (kind == "escape_image")
    return ScheduleItem::escape_image(j.at("x").get<unsigned>(),
                                      j.value("from", 0u),
                                      j.value("offset", 0u));
  if (kind == "escape_domain")
    return ScheduleItem::escape_domain(j.at("y").get<unsigned>(),
                                       j.value("from", 0u),
                                       j.value("offset", 0u));
  throw std::invalid_argument("spec: unknown item kind " + kind);
}

nlohmann::json item_to_json(const ScheduleItem& it) {
  nlohmann::json j;
  switch (it.kind) {
    case ScheduleItem::Kind::Appears:
      j = {{"kind", "appears"}, {"x", it.x}, {"y", it.y}, {"from", it.from}};
      break;
    case ScheduleItem::Kind::Vanishes:
      j = {{"kind", "vanishes"}, {"x", it.x}, {"y", it.y}, {"from", it.from}};
      break;
    case ScheduleItem::Kind::EscapeImage:
      j = {{"kind", "escape_image"},
           {"x", it.x},
           {"from", it.from},
           {"offset", it.offset}};
      break;
    case ScheduleItem::Kind::EscapeDomain:
      j = {{"kind", "escape_domain"},
           {"y", it.y},
           {"from", it.from},
           {"offset", it.offset}};
      break;
  }
  return j;
}

}  // namespace

SequenceSpec spec_from_json(const nlohmann::json& j) {
  SequenceSpec spec;
  spec.name = j.value("name", std::string());
  if (j.contains("ground") && j.at("ground").is_object())
    spec.ground = GroundSet::finite(j.at("ground").at("finite").get<unsigned>());
  for (const auto& p : j.value("prefix", nlohmann::json::array()))
    spec.prefix.push_back(parse_pbij(p.get<std::string>(), spec.ground));
  const auto& t = j.at("tail");
  std::string kind = t.at("kind").get<std::string>();
  if (kind == "constant") {
    spec.tail = parse_pbij(t.at("value").get<std::string>(), spec.ground);
  } else if (kind == "schedule") {
    ScheduleTail st(
        parse_pbij(t.value("base", std::string("{}")), spec.ground));
    st.grow_identity = t.value("grow_identity", false);
    for (const auto& it : t.value("items", nlohmann::json::array()))
      st.items.push_back(item_from_json(it));
    spec.tail = std::move(st);
  } else if (kind == "generator") {
    GeneratorTail g;
    g.rule = t.at("rule").get<std::string>();
    g.horizon = t.value("horizon", 32u);
    spec.tail = std::move(g);
  } else {
    throw std::invalid_argument("spec: unknown tail kind " + kind);
  }
  if (j.contains("limits"))
    for (const auto& [metric, lit] : j.at("limits").items())
      spec.declared_limits.emplace_back(
          metric, parse_pbij(lit.get<std::string>(), spec.ground));
  validate_spec(spec);
  return spec;
}

nlohmann::json spec_to_json(const SequenceSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  if (spec.ground.is_finite())
    j["ground"] = {{"finite", spec.ground.size()}};
  else
    j["ground"] = "naturals";
  auto prefix = nlohmann::json::array();
  for (const auto& p : spec.prefix) prefix.push_back(p.str());
  j["prefix"] = prefix;
  if (spec.is_constant()) {
    j["tail"] = {{"kind", "constant"},
                 {"value", std::get<PartialBijection>(spec.tail).str()}};
  } else if (spec.is_schedule()) {
    const auto& t = spec.schedule();
    auto items = nlohmann::json::array();
    for (const auto& it : t.items) items.push_back(item_to_json(it));
    j["tail"] = {{"kind", "schedule"},
                 {"base", t.base.str()},
                 {"grow_identity", t.grow_identity},
                 {"items", items}};
  } else {
    const auto& g = spec.generator();
    j["tail"] = {{"kind", "generator"}, {"rule", g.rule}, {"horizon", g.horizon}};
  }
  if (!spec.declared_limits.empty()) {
    nlohmann::json limits;
    for (const auto& [metric, lim] : spec.declared_limits)
      limits[metric] = lim.str();
    j["limits"] = limits;
  }
  return j;
}

SequenceSpec parse_spec(std::string_view json_text) {
  return spec_from_json(nlohmann::json::parse(json_text));
}

}  // namespace pbij
