#ifndef LATTICEKIT_STRUCTURE_HPP
#define LATTICEKIT_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "lattice.hpp"

namespace latticekit {

struct PairWitness {
  Element x;
  Element y;
  friend bool operator==(PairWitness const&, PairWitness const&) = default;
};

struct TripleWitness {
  Element x;
  Element y;
  Element z;
  friend bool operator==(TripleWitness const&, TripleWitness const&) = default;
};

// Irreducibles and atoms.
//
// In a finite lattice join-irreducible and completely join-irreducible
// coincide; both are "nonzero with exactly one lower cover".

inline ElementSet join_irreducibles(FiniteLattice const& L) {
  ElementSet s(L.size());
  for (Element x = 0; x < L.size(); ++x)
    if (L.lower_covers(x).size() == 1) s.insert(x);
  return s;
}

inline ElementSet meet_irreducibles(FiniteLattice const& L) {
  ElementSet s(L.size());
  for (Element x = 0; x < L.size(); ++x)
    if (L.upper_covers(x).size() == 1) s.insert(x);
  return s;
}

inline ElementSet atoms(FiniteLattice const& L) {
  ElementSet s(L.size());
  for (Element a : L.upper_covers(L.bottom())) s.insert(a);
  return s;
}

inline ElementSet coatoms(FiniteLattice const& L) {
  ElementSet s(L.size());
  for (Element a : L.lower_covers(L.top())) s.insert(a);
  return s;
}

/// First x (index order) that is not the join of the atoms below it.
inline std::optional<Element> atomistic_counterexample(FiniteLattice const& L) {
  ElementSet const at = atoms(L);
  for (Element x = 0; x < L.size(); ++x)
    if (L.join_all(L.down_set(x) & at) != x) return x;
  return std::nullopt;
}

inline bool is_atomistic(FiniteLattice const& L) { return !atomistic_counterexample(L); }

/// First pair x ≰ y with no z such that 0 < z ≤ x and z ∧ y = 0. It is enough
/// to try atoms z: any working z has a working atom below it.
inline std::optional<PairWitness> separativity_counterexample(FiniteLattice const& L) {
  ElementSet const at = atoms(L);
  for (Element x = 0; x < L.size(); ++x)
    for (Element y = 0; y < L.size(); ++y) {
      if (L.leq(x, y)) continue;
      bool found = false;
      (L.down_set(x) & at).for_each([&](Element z) { found = found || L.meet(z, y) == L.bottom(); });
      if (!found) return PairWitness{x, y};
    }
  return std::nullopt;
}

inline bool is_separative(FiniteLattice const& L) { return !separativity_counterexample(L); }

/// Every element is the join of the join-irreducibles below it. The check is
/// literal; on a finite lattice it never fails.
inline bool is_finitely_spatial(FiniteLattice const& L) {
  ElementSet const j = join_irreducibles(L);
  for (Element x = 0; x < L.size(); ++x)
    if (L.join_all(L.down_set(x) & j) != x) return false;
  return true;
}

inline bool is_dually_finitely_spatial(FiniteLattice const& L) {
  ElementSet const m = meet_irreducibles(L);
  for (Element x = 0; x < L.size(); ++x)
    if (L.meet_all(L.up_set(x) & m) != x) return false;
  return true;
}

inline bool is_finitely_bispatial(FiniteLattice const& L) {
  return is_finitely_spatial(L) && is_dually_finitely_spatial(L);
}

// Distributivity and modularity.

/// First triple in `universe` breaking x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z). The
/// dual law is equivalent for whole lattices and for sublattices alike.
inline std::optional<TripleWitness> distributivity_counterexample(FiniteLattice const& L, ElementSet const& universe) {
  std::vector<Element> const u = universe.members();
  for (Element x : u)
    for (Element y : u)
      for (Element z : u)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return TripleWitness{x, y, z};
  return std::nullopt;
}

inline std::optional<TripleWitness> distributivity_counterexample(FiniteLattice const& L) {
  return distributivity_counterexample(L, L.all());
}

inline bool is_distributive(FiniteLattice const& L) { return !distributivity_counterexample(L); }

/// First triple with x ≤ z and x ∨ (y ∧ z) ≠ (x ∨ y) ∧ z.
inline std::optional<TripleWitness> modularity_counterexample(FiniteLattice const& L) {
  for (Element x = 0; x < L.size(); ++x)
    for (Element z = 0; z < L.size(); ++z) {
      if (!L.leq(x, z)) continue;
      for (Element y = 0; y < L.size(); ++y)
        if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) return TripleWitness{x, y, z};
    }
  return std::nullopt;
}

inline bool is_modular(FiniteLattice const& L) { return !modularity_counterexample(L); }

/// x ∨ y = x ∨ z implies x ∨ y = x ∨ (y ∧ z); first failing triple.
inline std::optional<TripleWitness> join_semidistributivity_counterexample(FiniteLattice const& L) {
  for (Element x = 0; x < L.size(); ++x)
    for (Element y = 0; y < L.size(); ++y)
      for (Element z = 0; z < L.size(); ++z)
        if (L.join(x, y) == L.join(x, z) && L.join(x, y) != L.join(x, L.meet(y, z))) return TripleWitness{x, y, z};
  return std::nullopt;
}

inline bool is_join_semidistributive(FiniteLattice const& L) { return !join_semidistributivity_counterexample(L); }

/// Least subset containing `seed` and closed under meet and join.
inline ElementSet sublattice_generated(FiniteLattice const& L, ElementSet const& seed) {
  if (seed.empty()) throw InputError("sublattice_generated needs a nonempty seed");
  ElementSet closed = seed;
  std::vector<Element> members = seed.members();
  std::vector<Element> work = members;
  while (!work.empty()) {
    Element const x = work.back();
    work.pop_back();
    // Pair x with every member known so far; new products join the worklist.
    for (std::size_t i = 0; i < members.size(); ++i) {
      Element const y = members[i];
      for (Element z : {L.meet(x, y), L.join(x, y)}) {
        if (!closed.contains(z)) {
          closed.insert(z);
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
  }
  return closed;
}

// Neutral elements.

/// Normative test: {a, x, y} generates a distributive sublattice for every
/// pair (x, y). Cost O(n² · closure); use is_neutral for anything large.
inline bool is_neutral_by_generation(FiniteLattice const& L, Element a) {
  for (Element x = 0; x < L.size(); ++x)
    for (Element y = x; y < L.size(); ++y) {
      ElementSet const s = sublattice_generated(L, ElementSet(L.size(), {a, x, y}));
      if (distributivity_counterexample(L, s)) return false;
    }
  return true;
}

/// (a∧x)∨(x∧y)∨(y∧a) = (a∨x)∧(x∨y)∧(y∨a) for the given x, y.
inline bool median_identity_holds(FiniteLattice const& L, Element a, Element x, Element y) {
  Element const lhs = L.join(L.join(L.meet(a, x), L.meet(x, y)), L.meet(y, a));
  Element const rhs = L.meet(L.meet(L.join(a, x), L.join(x, y)), L.join(y, a));
  return lhs == rhs;
}

/// Neutrality through the median identity over all pairs; agrees with
/// is_neutral_by_generation (differential-tested on the exhaustive suite).
inline bool is_neutral(FiniteLattice const& L, Element a) {
  for (Element x = 0; x < L.size(); ++x)
    for (Element y = x + 1; y < L.size(); ++y)
      if (!median_identity_holds(L, a, x, y)) return false;
  return true;
}

inline ElementSet neutral_elements(FiniteLattice const& L) {
  ElementSet s(L.size());
  for (Element a = 0; a < L.size(); ++a)
    if (is_neutral(L, a)) s.insert(a);
  return s;
}

inline ElementSet neutral_elements_by_generation(FiniteLattice const& L) {
  ElementSet s(L.size());
  for (Element a = 0; a < L.size(); ++a)
    if (is_neutral_by_generation(L, a)) s.insert(a);
  return s;
}

inline ElementSet complements_of(FiniteLattice const& L, Element a) {
  ElementSet s(L.size());
  for (Element b = 0; b < L.size(); ++b)
    if (L.meet(a, b) == L.bottom() && L.join(a, b) == L.top()) s.insert(b);
  return s;
}

// The center.

/// Central elements with their complements. `complement[a]` is kNoElement for
/// non-central a.
struct Center {
  ElementSet elements;
  std::vector<Element> complement;

  bool contains(Element a) const { return elements.contains(a); }
  std::size_t size() const { return elements.count(); }
};

/// True iff z ↦ (z∧a, z∧b) is a bijection L → [0,a]×[0,b] with inverse
/// (x, y) ↦ x∨y. Both maps are monotone, so this is exactly a direct
/// decomposition with a ↦ (1,0), b ↦ (0,1).
inline bool splits_as_direct_product(FiniteLattice const& L, Element a, Element b) {
  if (L.meet(a, b) != L.bottom() || L.join(a, b) != L.top()) return false;
  for (Element z = 0; z < L.size(); ++z)
    if (L.join(L.meet(z, a), L.meet(z, b)) != z) return false;
  bool ok = true;
  L.down_set(a).for_each([&](Element x) {
    if (!ok) return;
    L.down_set(b).for_each([&](Element y) {
      Element const s = L.join(x, y);
      ok = ok && L.meet(s, a) == x && L.meet(s, b) == y;
    });
  });
  return ok;
}

/// Cen L. An element is central iff, paired with some complement, it splits L
/// as a direct product; that test is O(n) per complement pair instead of the
/// O(n²) neutrality scan, and is differential-tested against "neutral and
/// complemented". Throws IntegrityError if a central element shows two
/// complements.
inline Center center(FiniteLattice const& L) {
  std::size_t const n = L.size();
  Center c{ElementSet(n), std::vector<Element>(n, kNoElement)};
  for (Element a = 0; a < n; ++a) {
    if (c.complement[a] != kNoElement) continue;
    complements_of(L, a).for_each([&](Element b) {
      if (!splits_as_direct_product(L, a, b)) return;
      if (c.complement[a] != kNoElement && c.complement[a] != b)
        throw IntegrityError("central element " + L.label(a) + " has two complements " +
                             L.label(c.complement[a]) + " and " + L.label(b));
      c.elements.insert(a);
      c.elements.insert(b);
      c.complement[a] = b;
      c.complement[b] = a;
    });
  }
  return c;
}

/// Cen L straight from the definition: neutral (normative generation test)
/// and complemented. Slow; the oracle for center().
inline Center center_by_definition(FiniteLattice const& L) {
  std::size_t const n = L.size();
  Center c{ElementSet(n), std::vector<Element>(n, kNoElement)};
  for (Element a = 0; a < n; ++a) {
    ElementSet const comps = complements_of(L, a);
    if (comps.empty() || !is_neutral_by_generation(L, a)) continue;
    if (comps.count() != 1)
      throw IntegrityError("neutral element " + L.label(a) + " has more than one complement");
    c.elements.insert(a);
    c.complement[a] = comps.first();
  }
  return c;
}

// Starred joins and meets.
//
// Only finite families are accepted. For finite lattices nothing is lost, but
// these predicates make no claim about infinite index families.

/// x = ⋁* xs: for every join-irreducible p, p ≤ x iff p ≤ some member of xs.
inline bool star_join_holds(FiniteLattice const& L, Element x, std::span<Element const> xs) {
  ElementSet below_some(L.size());
  for (Element xi : xs) below_some |= L.down_set(xi);
  ElementSet const j = join_irreducibles(L);
  return (L.down_set(x) & j) == (below_some & j);
}

/// x = ⋀* xs: for every meet-irreducible u, x ≤ u iff some member of xs is ≤ u.
inline bool star_meet_holds(FiniteLattice const& L, Element x, std::span<Element const> xs) {
  ElementSet above_some(L.size());
  for (Element xi : xs) above_some |= L.up_set(xi);
  ElementSet const m = meet_irreducibles(L);
  return (L.up_set(x) & m) == (above_some & m);
}

inline bool star_join_holds(FiniteLattice const& L, Element x, std::initializer_list<Element> xs) {
  return star_join_holds(L, x, std::span<Element const>(xs.begin(), xs.size()));
}

inline bool star_meet_holds(FiniteLattice const& L, Element x, std::initializer_list<Element> xs) {
  return star_meet_holds(L, x, std::span<Element const>(xs.begin(), xs.size()));
}

}  // namespace latticekit

#endif  // LATTICEKIT_STRUCTURE_HPP
