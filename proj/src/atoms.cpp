#include "pbij/atoms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "pbij/enumeration.hpp"
#include "pbij/parse.hpp"

namespace pbij {

std::string Atom::str() const {
  switch (kind) {
    case Kind::V:
      return "v(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Kind::W1:
      return "w1(" + std::to_string(x) + ")";
    case Kind::W2:
      return "w2(" + std::to_string(y) + ")";
    case Kind::U:
      return "u(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return "?";
}

std::string Basic::str() const {
  if (lits.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) s += " & ";
    if (!lits[i].positive) s += "!";
    s += lits[i].atom.str();
  }
  return s;
}

std::string OpenExpr::str() const {
  if (kind == Kind::Whole) return "I";
  if (kind == Kind::Empty) return "0";
  std::string s;
  for (std::size_t i = 0; i < basics.size(); ++i) {
    if (i) s += " | ";
    s += basics[i].str();
  }
  return s;
}

bool atom_admissible(const Atom& a, Topology t) {
  switch (a.kind) {
    case Atom::Kind::V:
      return true;
    case Atom::Kind::W1:
      return t == Topology::Tau1 || t == Topology::TauPP;
    case Atom::Kind::W2:
      return t == Topology::Tau2 || t == Topology::TauPP;
    case Atom::Kind::U:
      return false;  // permutation carrier only
  }
  return false;
}

bool member(const PartialBijection& f, const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::V:
      return f.eval(a.x) == a.y;
    case Atom::Kind::W1:
      return !f.eval(a.x).has_value();
    case Atom::Kind::W2:
      return !f.inverse().eval(a.y).has_value();
    case Atom::Kind::U:
      throw std::invalid_argument("member: u-atom over an I(X) carrier");
  }
  return false;
}

bool member(const PartialBijection& f, const Basic& b) {
  for (const auto& l : b.lits)
    if (member(f, l.atom) != l.positive) return false;
  return true;
}

bool member(const PartialBijection& f, const OpenExpr& e) {
  if (e.kind == OpenExpr::Kind::Whole) return true;
  if (e.kind == OpenExpr::Kind::Empty) return false;
  for (const Basic& b : e.basics)
    if (member(f, b)) return true;
  return false;
}

std::optional<PartialBijection> basic_witness(const Basic& b,
                                              const GroundSet& ground) {
  if (!b.all_positive())
    throw std::invalid_argument("basic_witness: basic must be all-positive");
  std::map<unsigned, unsigned> forward;
  std::map<unsigned, unsigned> backward;
  std::set<unsigned> dom_gaps, im_gaps;
  for (const auto& l : b.lits) {
    const Atom& a = l.atom;
    switch (a.kind) {
      case Atom::Kind::V: {
        if (!ground.contains(a.x) || !ground.contains(a.y)) return std::nullopt;
        auto [it, fresh] = forward.emplace(a.x, a.y);
        if (!fresh && it->second != a.y) return std::nullopt;  // functionality
        auto [jt, fresh2] = backward.emplace(a.y, a.x);
        if (!fresh2 && jt->second != a.x) return std::nullopt;  // injectivity
        break;
      }
      case Atom::Kind::W1:
        dom_gaps.insert(a.x);
        break;
      case Atom::Kind::W2:
        im_gaps.insert(a.y);
        break;
      case Atom::Kind::U:
        throw std::invalid_argument("basic_witness: u-atom over I(X)");
    }
  }
  for (const auto& [x, y] : forward) {
    if (dom_gaps.count(x)) return std::nullopt;
    if (im_gaps.count(y)) return std::nullopt;
  }
  std::vector<PartialBijection::Pair> pairs(forward.begin(), forward.end());
  return PartialBijection(ground, std::move(pairs));
}

bool is_empty(const Basic& b, const GroundSet& ground) {
  return !basic_witness(b, ground).has_value();
}

Atom preimage_inverse(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::V:
      return Atom::v(a.y, a.x);
    case Atom::Kind::W1:
      return Atom::w2(a.x);
    case Atom::Kind::W2:
      return Atom::w1(a.y);
    case Atom::Kind::U:
      throw std::invalid_argument("preimage_inverse: u-atom");
  }
  return a;
}

Basic invert_basic(const Basic& b) {
  Basic out;
  for (const auto& l : b.lits) out.add(preimage_inverse(l.atom), l.positive);
  return out;
}

std::string PairUnion::str() const {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " | ";
    s += terms[i].left.str() + " x " + terms[i].right.str();
  }
  return s.empty() ? "0" : s;
}

PairUnion preimage_compose(const Atom& a, const GroundSet& ground) {
  if (!ground.is_finite())
    throw std::domain_error(
        "preimage_compose: union over the middle point is infinite; "
        "symbolic form: " +
        preimage_compose_symbolic(a));
  unsigned n = ground.size();
  PairUnion u;
  switch (a.kind) {
    case Atom::Kind::V:
      for (unsigned z = 0; z < n; ++z)
        u.terms.push_back({{Atom::v(z, a.y)}, {Atom::v(a.x, z)}});
      break;
    case Atom::Kind::W1:
      u.terms.push_back({{std::nullopt}, {Atom::w1(a.x)}});
      for (unsigned z = 0; z < n; ++z)
        u.terms.push_back({{Atom::w1(z)}, {Atom::v(a.x, z)}});
      break;
    case Atom::Kind::W2:
      u.terms.push_back({{Atom::w2(a.y)}, {std::nullopt}});
      for (unsigned z = 0; z < n; ++z)
        u.terms.push_back({{Atom::v(z, a.y)}, {Atom::w2(z)}});
      break;
    case Atom::Kind::U:
      throw std::invalid_argument("preimage_compose: u-atom");
  }
  return u;
}

std::string preimage_compose_symbolic(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::V:
      return "U_z v(z," + std::to_string(a.y) + ") x v(" + std::to_string(a.x) +
             ",z)";
    case Atom::Kind::W1:
      return "(I x w1(" + std::to_string(a.x) + ")) | U_z w1(z) x v(" +
             std::to_string(a.x) + ",z)";
    case Atom::Kind::W2:
      return "(w2(" + std::to_string(a.y) + ") x I) | U_z v(z," +
             std::to_string(a.y) + ") x w2(z)";
    case Atom::Kind::U:
      throw std::invalid_argument("preimage_compose_symbolic: u-atom");
  }
  return "";
}

bool pair_member(const PartialBijection& f, const PartialBijection& g,
                 const PairUnion& u) {
  for (const auto& t : u.terms) {
    bool l = !t.left.atom || member(f, *t.left.atom);
    bool r = !t.right.atom || member(g, *t.right.atom);
    if (l && r) return true;
  }
  return false;
}

namespace {

// First point where the two maps disagree (domain status or value).
// Exists whenever f != g.
std::optional<unsigned> first_difference(const PartialBijection& f,
                                         const PartialBijection& g) {
  unsigned b = std::max(f.reach(), g.reach());
  if (f.ground().is_finite()) b = f.ground().size();
  for (unsigned x = 0; x < b; ++x)
    if (f.eval(x) != g.eval(x)) return x;
  if (f.eventually_identity() != g.eventually_identity()) return b;
  return std::nullopt;
}

}  // namespace

Separation separate(const PartialBijection& f, const PartialBijection& g,
                    Topology t) {
  if (f == g) throw std::invalid_argument("separate: the maps are equal");

  if (t == Topology::Tau2) {
    // Mirror of the Tau1 case applied to the inverses.
    Separation inv = separate(f.inverse(), g.inverse(), Topology::Tau1);
    Separation out;
    out.topology = Topology::Tau2;
    out.around_f = invert_basic(inv.around_f);
    if (inv.around_g) out.around_g = invert_basic(*inv.around_g);
    out.contains_f = inv.contains_f;
    return out;
  }

  unsigned x = *first_difference(f, g);
  auto fv = f.eval(x);
  auto gv = g.eval(x);
  Separation out;
  out.topology = t;

  if (t == Topology::Tau0) {
    // One-sided: a single v-atom holding exactly one of the two.
    if (fv) {
      out.around_f = Basic({Atom::v(x, *fv)});
      out.contains_f = true;
    } else {
      out.around_f = Basic({Atom::v(x, *gv)});
      out.contains_f = false;
    }
    return out;
  }

  // Tau1 / TauPP, following the two-case split: (a) the domains differ
  // at x, (b) both defined at x with different values.
  if (fv && gv) {
    out.around_f = Basic({Atom::v(x, *fv)});
    out.around_g = Basic({Atom::v(x, *gv)});
  } else if (fv) {
    out.around_f = Basic({Atom::v(x, *fv)});
    out.around_g = Basic({Atom::w1(x)});
  } else {
    out.around_f = Basic({Atom::w1(x)});
    out.around_g = Basic({Atom::v(x, *gv)});
  }
  return out;
}

bool check_separation(const PartialBijection& f, const PartialBijection& g,
                      const Separation& s) {
  for (const auto& l : s.around_f.lits)
    if (!atom_admissible(l.atom, s.topology)) return false;
  if (s.around_g)
    for (const auto& l : s.around_g->lits)
      if (!atom_admissible(l.atom, s.topology)) return false;

  if (s.topology == Topology::Tau0) {
    const PartialBijection& in = s.contains_f ? f : g;
    const PartialBijection& out = s.contains_f ? g : f;
    return member(in, s.around_f) && !member(out, s.around_f);
  }
  if (!s.around_g) return false;
  if (!member(f, s.around_f) || !member(g, *s.around_g)) return false;
  // Disjointness certificate: the conjunction has no witness.
  Basic conj = s.around_f;
  for (const auto& l : s.around_g->lits) conj.add(l.atom, l.positive);
  return is_empty(conj, f.ground());
}

InteriorGapWitness nowhere_dense_witness(const Basic& b, unsigned y,
                                         const GroundSet& ground) {
  if (!b.all_positive())
    throw std::invalid_argument("nowhere_dense_witness: all-positive only");
  std::set<unsigned> mentioned;
  for (const auto& l : b.lits) {
    const Atom& a = l.atom;
    if (!atom_admissible(a, Topology::Tau1))
      throw std::invalid_argument("nowhere_dense_witness: tau1 atoms only");
    if (a.kind == Atom::Kind::V) {
      mentioned.insert(a.x);
      if (a.y == y) {
        // y already a v-target: b itself avoids w2(y).
        InteriorGapWitness w;
        w.direct = true;
        w.refined = b;
        w.refined_member = basic_witness(b, ground);
        Basic conj = b;
        conj.add(Atom::w2(y));
        w.disjoint_from_w2 = is_empty(conj, ground);
        return w;
      }
    } else {
      mentioned.insert(a.x);
    }
  }
  if (is_empty(b, ground))
    throw std::invalid_argument("nowhere_dense_witness: basic is empty");

  unsigned x = 0;
  while (mentioned.count(x)) ++x;
  if (!ground.contains(x))
    throw std::out_of_range(
        "nowhere_dense_witness: no fresh point available on this carrier");
  InteriorGapWitness w;
  w.fresh_x = x;
  w.refined = b;
  w.refined.add(Atom::v(x, y));
  w.refined_member = basic_witness(w.refined, ground);
  Basic conj = w.refined;
  conj.add(Atom::w2(y));
  w.disjoint_from_w2 = w.refined_member.has_value() && is_empty(conj, ground);
  return w;
}

TranslateReport translate_w1(unsigned x, const PartialBijection& g) {
  const GroundSet& ground = g.ground();
  NatSet whole = NatSet::all();
  if (ground.is_finite()) {
    std::vector<unsigned> all(ground.size());
    for (unsigned i = 0; i < ground.size(); ++i) all[i] = i;
    whole = NatSet::finite(std::move(all));
  }
  if (g.dom() != whole || g.im() != whole)
    throw std::invalid_argument("translate_w1: g must be a total bijection");

  TranslateReport r;
  r.source = Atom::w1(x);
  r.translated = Atom::w1(*g.eval(x));
  r.verified = true;

  if (ground.is_finite() && ground.size() <= 4) {
    // Exhaustive: f o g lies in w1(x) exactly when f lies in w1(g(x)).
    for (const auto& f : enumerate_all(ground.size())) {
      bool lhs = member(compose(f, g), r.source);
      bool rhs = member(f, r.translated);
      ++r.checked;
      if (lhs != rhs) {
        r.verified = false;
        break;
      }
    }
    r.mode = "exhaustive";
  } else {
    // Sampled: structured probes around the two relevant points.
    unsigned gx = *g.eval(x);
    std::vector<PartialBijection> probes = {
        PartialBijection::empty_map(ground),
        PartialBijection::identity_on(ground, NatSet::finite({x})),
        PartialBijection::identity_on(ground, NatSet::finite({gx})),
        PartialBijection::singleton(ground, gx, x),
        PartialBijection::singleton(ground, x, gx)};
    if (!ground.is_finite()) {
      probes.push_back(PartialBijection::identity_on(ground, NatSet::all()));
      probes.push_back(
          PartialBijection::identity_on(ground, NatSet::cofinite({gx})));
    }
    for (const auto& f : probes) {
      bool lhs = member(compose(f, g), r.source);
      bool rhs = member(f, r.translated);
      ++r.checked;
      if (lhs != rhs) {
        r.verified = false;
        break;
      }
    }
    r.mode = "sampled";
  }
  return r;
}

bool Cylinder::matches(const NatSet& a) const {
  for (unsigned x : must_contain)
    if (!a.contains(x)) return false;
  for (unsigned x : must_avoid)
    if (a.contains(x)) return false;
  return true;
}

std::string Cylinder::str() const {
  std::string s = "{A: ";
  bool first = true;
  for (unsigned x : must_contain) {
    if (!first) s += ", ";
    s += std::to_string(x) + " in A";
    first = false;
  }
  for (unsigned x : must_avoid) {
    if (!first) s += ", ";
    s += std::to_string(x) + " notin A";
    first = false;
  }
  if (first) s += "all A";
  return s + "}";
}

std::pair<Cylinder, Cylinder> dom_im_image_of_basic(const Basic& b,
                                                    const GroundSet& ground) {
  if (!b.all_positive())
    throw std::invalid_argument("dom_im_image_of_basic: all-positive only");
  if (is_empty(b, ground))
    throw std::invalid_argument("dom_im_image_of_basic: basic is empty");
  Cylinder dom_cyl, im_cyl;
  for (const auto& l : b.lits) {
    const Atom& a = l.atom;
    switch (a.kind) {
      case Atom::Kind::V:
        dom_cyl.must_contain.push_back(a.x);
        im_cyl.must_contain.push_back(a.y);
        break;
      case Atom::Kind::W1:
        dom_cyl.must_avoid.push_back(a.x);
        break;
      case Atom::Kind::W2:
        im_cyl.must_avoid.push_back(a.y);
        break;
      case Atom::Kind::U:
        throw std::invalid_argument("dom_im_image_of_basic: u-atom");
    }
  }
  auto dedupe = [](std::vector<unsigned>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(dom_cyl.must_contain);
  dedupe(dom_cyl.must_avoid);
  dedupe(im_cyl.must_contain);
  dedupe(im_cyl.must_avoid);
  return {dom_cyl, im_cyl};
}

namespace {

struct AtomCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }
  unsigned number() {
    skip_ws();
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a number", pos);
    unsigned v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + static_cast<unsigned>(text[pos++] - '0');
    return v;
  }

  Atom atom() {
    skip_ws();
    if (try_consume('v')) {
      expect('(');
      unsigned x = number();
      expect(',');
      unsigned y = number();
      expect(')');
      return Atom::v(x, y);
    }
    if (try_consume('w')) {
      if (try_consume('1')) {
        expect('(');
        unsigned x = number();
        expect(')');
        return Atom::w1(x);
      }
      if (try_consume('2')) {
        expect('(');
        unsigned y = number();
        expect(')');
        return Atom::w2(y);
      }
      throw ParseError("expected w1 or w2", pos);
    }
    if (try_consume('u')) {
      expect('(');
      unsigned x = number();
      expect(',');
      unsigned y = number();
      expect(')');
      return Atom::u(x, y);
    }
    throw ParseError("expected an atom (v, w1, w2 or u)", pos);
  }
};

}  // namespace

Atom parse_atom(std::string_view text) {
  AtomCursor c{text};
  Atom a = c.atom();
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("trailing input", c.pos);
  return a;
}

OpenExpr parse_atom_expr(std::string_view text) {
  AtomCursor c{text};
  std::vector<Basic> basics;
  do {
    Basic b;
    do {
      b.add(c.atom());
    } while (c.try_consume('&'));
    basics.push_back(std::move(b));
  } while (c.try_consume('|'));
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("trailing input", c.pos);
  return OpenExpr::of(std::move(basics));
}

}  // namespace pbij
