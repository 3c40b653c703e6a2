#ifndef PBIJ_ATOMS_HPP
#define PBIJ_ATOMS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pbij/partial_bijection.hpp"

namespace pbij {

/// Subbasic open sets. Over I(X): v(x,y) = maps sending x to y,
/// w1(x) = maps with x outside the domain, w2(y) = maps with y outside
/// the image. Over the symmetric group S(Y): u(x,y) = permutations
/// sending x to y.
struct Atom {
  enum class Kind : unsigned char { V, W1, W2, U };
  Kind kind = Kind::V;
  unsigned x = 0;  // unused for W2
  unsigned y = 0;  // unused for W1

  static Atom v(unsigned x, unsigned y) { return {Kind::V, x, y}; }
  static Atom w1(unsigned x) { return {Kind::W1, x, 0}; }
  static Atom w2(unsigned y) { return {Kind::W2, 0, y}; }
  static Atom u(unsigned x, unsigned y) { return {Kind::U, x, y}; }

  std::string str() const;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A finite intersection of subbasic atoms, each taken either directly
/// or complemented. Complements only arise from the symbolic
/// composition table; everything user-facing is all-positive.
struct Basic {
  struct Lit {
    Atom atom;
    bool positive = true;
    friend auto operator<=>(const Lit&, const Lit&) = default;
  };
  std::vector<Lit> lits;

  Basic() = default;
  explicit Basic(std::vector<Atom> atoms) {
    for (const Atom& a : atoms) lits.push_back({a, true});
  }
  bool all_positive() const {
    for (const auto& l : lits)
      if (!l.positive) return false;
    return true;
  }
  Basic& add(const Atom& a, bool positive = true) {
    lits.push_back({a, positive});
    return *this;
  }
  std::string str() const;
  friend auto operator<=>(const Basic&, const Basic&) = default;
};

/// A finite union of basics, or one of the two trivial sets.
struct OpenExpr {
  enum class Kind : unsigned char { Whole, Empty, Union };
  Kind kind = Kind::Empty;
  std::vector<Basic> basics;

  static OpenExpr whole() { return {Kind::Whole, {}}; }
  static OpenExpr empty() { return {Kind::Empty, {}}; }
  static OpenExpr of(std::vector<Basic> bs) {
    return {Kind::Union, std::move(bs)};
  }
  std::string str() const;
};

/// The four generated topologies, by admissible atom kinds:
/// Tau0: v only; Tau1: v, w1; Tau2: v, w2; TauPP: all three.
enum class Topology { Tau0, Tau1, Tau2, TauPP };

bool atom_admissible(const Atom& a, Topology t);

bool member(const PartialBijection& f, const Atom& a);
bool member(const PartialBijection& f, const Basic& b);
bool member(const PartialBijection& f, const OpenExpr& e);

/// Whether an all-positive basic over I(X) has no members: true exactly
/// when the v-constraints are inconsistent (as a partial injection) or
/// collide with a w1/w2 constraint. Otherwise the v-pairs themselves
/// assemble into a witness member, returned by basic_witness.
bool is_empty(const Basic& b, const GroundSet& ground);
std::optional<PartialBijection> basic_witness(const Basic& b,
                                              const GroundSet& ground);

/// Preimage of an atom under inversion: v(x,y) -> v(y,x),
/// w1(x) -> w2(x), w2(y) -> w1(y).
Atom preimage_inverse(const Atom& a);

/// Atom-wise inversion of a basic (all-positive); the member set of the
/// result is the set of inverses of members of the input.
Basic invert_basic(const Basic& b);

/// One side of a product of open sets: an atom or the whole space.
struct AtomOrWhole {
  std::optional<Atom> atom;  // nullopt = I(X)
  std::string str() const { return atom ? atom->str() : "I"; }
};

/// Union of products describing the preimage of an atom under
/// composition, e.g. the preimage of v(x,y) is the union over z of
/// v(z,y) x v(x,z).
struct PairUnion {
  struct Product {
    AtomOrWhole left, right;
  };
  std::vector<Product> terms;
  std::string str() const;
};

/// The composition preimage over a finite carrier (the union over the
/// middle point is finite there). Throws std::domain_error for the
/// naturals carrier; use preimage_compose_symbolic for a description.
PairUnion preimage_compose(const Atom& a, const GroundSet& ground);
std::string preimage_compose_symbolic(const Atom& a);

/// (f,g) lies in the union of products.
bool pair_member(const PartialBijection& f, const PartialBijection& g,
                 const PairUnion& u);

/// A separating certificate for two distinct maps. Under Tau0 a single
/// basic containing exactly one of the two; under the Hausdorff
/// topologies two disjoint basics, first around f, second around g.
struct Separation {
  Topology topology = Topology::Tau0;
  Basic around_f;
  std::optional<Basic> around_g;
  bool contains_f = true;  // Tau0 only: which map the single basic holds
};

Separation separate(const PartialBijection& f, const PartialBijection& g,
                    Topology t);

/// Re-verifies a Separation against its two maps: membership on the
/// right sides, non-membership/disjointness certificates on the others.
bool check_separation(const PartialBijection& f, const PartialBijection& g,
                      const Separation& s);

/// Witness data showing a Tau1 basic can be refined away from w2(y)
/// (the image-gap sets have empty interior there). Either the basic is
/// already disjoint from w2(y) because y is a v-target, or a fresh
/// point x makes b n v(x,y) a nonempty refinement disjoint from w2(y).
struct InteriorGapWitness {
  bool direct = false;             // y was a v-target of b
  std::optional<unsigned> fresh_x; // chosen least unmentioned point
  Basic refined;                   // b, or b n v(fresh_x, y)
  std::optional<PartialBijection> refined_member;
  bool disjoint_from_w2 = false;   // certified via is_empty
};

InteriorGapWitness nowhere_dense_witness(const Basic& b, unsigned y,
                                         const GroundSet& ground);

/// Report for the right-translation identity on domain-gap sets: when
/// g is a total bijection with g(x) = y, composing with g on the right
/// carries w1(y) onto w1(x) membership-wise, i.e. f o g in w1(x) iff
/// f in w1(y).
struct TranslateReport {
  Atom source;       // w1(x)
  Atom translated;   // w1(g(x))
  bool verified = false;
  std::uint64_t checked = 0;
  std::string mode;  // "exhaustive" or "sampled"
};

TranslateReport translate_w1(unsigned x, const PartialBijection& g);

/// Cylinder subset of the power set: all A with must_contain inside A
/// and must_avoid disjoint from A.
struct Cylinder {
  std::vector<unsigned> must_contain;
  std::vector<unsigned> must_avoid;
  bool matches(const NatSet& a) const;
  std::string str() const;
};

/// The images of a nonempty all-positive basic under dom and im, as
/// cylinders: dom-side from the v-sources and w1-points, im-side from
/// the v-targets and w2-points.
std::pair<Cylinder, Cylinder> dom_im_image_of_basic(const Basic& b,
                                                    const GroundSet& ground);

/// Atom expression grammar: atoms `v(x,y)`, `w1(x)`, `w2(y)`, `u(x,y)`;
/// basics joined with `&`; unions joined with `|`.
OpenExpr parse_atom_expr(std::string_view text);
Atom parse_atom(std::string_view text);

}  // namespace pbij

#endif
