#ifndef LATTICEKIT_CHECK_HPP
#define LATTICEKIT_CHECK_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "decomposition.hpp"
#include "element_set.hpp"
#include "isomorphism.hpp"
#include "lattice.hpp"
#include "operations.hpp"
#include "structure.hpp"

namespace latticekit {

/// What went wrong, phrased with element labels.
using PropertyFailure = std::string;
using PropertyCheck = std::function<std::optional<PropertyFailure>(FiniteLattice const&)>;

namespace detail {

inline std::string names(FiniteLattice const& L, std::initializer_list<Element> xs) {
  std::string s = "(";
  bool first = true;
  for (Element x : xs) {
    s += (first ? "" : ", ") + L.label(x);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

/// Every FiniteLattice invariant on the stored tables.
inline std::optional<PropertyFailure> check_lattice_tables(FiniteLattice const& L) {
  if (auto v = validate_lattice(L)) return v->describe(L);
  return std::nullopt;
}

/// For neutral a: a ∨ x = a ∨* x and a ∧ x = a ∧* x.
inline std::optional<PropertyFailure> check_neutral_starred(FiniteLattice const& L) {
  ElementSet const neu = neutral_elements(L);
  std::optional<PropertyFailure> out;
  neu.for_each([&](Element a) {
    for (Element x = 0; x < L.size() && !out; ++x) {
      if (!star_join_holds(L, L.join(a, x), {a, x}))
        out = "a join x is not a starred join at (a, x) = " + detail::names(L, {a, x});
      else if (!star_meet_holds(L, L.meet(a, x), {a, x}))
        out = "a meet x is not a starred meet at (a, x) = " + detail::names(L, {a, x});
    }
  });
  return out;
}

/// Starred joins and meets over every one- and two-member family: starred
/// implies ordinary, and starred survives meeting (joining) with any y.
inline std::optional<PropertyFailure> check_starred_calculus(FiniteLattice const& L) {
  std::size_t const n = L.size();
  for (Element i = 0; i < n; ++i)
    for (Element j = i; j < n; ++j) {
      std::vector<Element> fam = i == j ? std::vector<Element>{i} : std::vector<Element>{i, j};
      Element const join = L.join(i, j), meet = L.meet(i, j);
      for (Element x = 0; x < n; ++x) {
        if (star_join_holds(L, x, fam)) {
          if (x != join) return "starred join is not the join at (x, family) = " + detail::names(L, {x, i, j});
          for (Element y = 0; y < n; ++y) {
            std::vector<Element> met;
            for (Element f : fam) met.push_back(L.meet(f, y));
            if (!star_join_holds(L, L.meet(x, y), met))
              return "starred join not preserved by meeting with y at (x, family..., y) = " +
                     detail::names(L, {x, i, j, y});
          }
        }
        if (star_meet_holds(L, x, fam)) {
          if (x != meet) return "starred meet is not the meet at (x, family) = " + detail::names(L, {x, i, j});
          for (Element y = 0; y < n; ++y) {
            std::vector<Element> joined;
            for (Element f : fam) joined.push_back(L.join(f, y));
            if (!star_meet_holds(L, L.join(x, y), joined))
              return "starred meet not preserved by joining with y at (x, family..., y) = " +
                     detail::names(L, {x, i, j, y});
          }
        }
      }
    }
  return std::nullopt;
}

/// 1 = a ∨* b and 0 = a ∧* b exactly when (a, b) is a complementary pair of
/// central elements.
inline std::optional<PropertyFailure> check_complementary_pairs(FiniteLattice const& L) {
  Center const cen = center(L);
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = 0; b < L.size(); ++b) {
      bool const starred = star_join_holds(L, L.top(), {a, b}) && star_meet_holds(L, L.bottom(), {a, b});
      bool const central_pair = cen.contains(a) && cen.complement[a] == b;
      if (starred != central_pair)
        return std::string(starred ? "starred complements are not a central pair"
                                   : "central pair is not a starred complement") +
               " at " + detail::names(L, {a, b});
    }
  return std::nullopt;
}

/// Cen L is atomistic and its atoms are exactly the central covers of the
/// join-irreducibles.
inline std::optional<PropertyFailure> check_center_atoms(FiniteLattice const& L) {
  Center const cen = center(L);
  ElementSet const atoms_of_center = center_atoms(L, cen);
  ElementSet covers(L.size());
  join_irreducibles(L).for_each([&](Element p) { covers.insert(central_cover(L, cen, p)); });
  if (covers != atoms_of_center) return std::string("center atoms differ from the central covers of J(L)");
  std::optional<PropertyFailure> out;
  cen.elements.for_each([&](Element u) {
    if (!out && L.join_all(atoms_of_center & L.down_set(u)) != u)
      out = "central element " + L.label(u) + " is not a join of center atoms";
  });
  return out;
}

/// For central a: Cen [0,a] = Cen L ∩ [0,a]; for atoms of Cen L, [0,a] is
/// directly indecomposable.
inline std::optional<PropertyFailure> check_center_intervals(FiniteLattice const& L) {
  Center const cen = center(L);
  ElementSet const atoms_of_center = center_atoms(L, cen);
  std::optional<PropertyFailure> out;
  cen.elements.for_each([&](Element a) {
    if (out) return;
    Sublattice const sub = interval(L, L.bottom(), a);
    Center const sub_center = center(sub.lattice);
    ElementSet mapped(L.size());
    sub_center.elements.for_each([&](Element e) { mapped.insert(sub.to_parent[e]); });
    if (mapped != (cen.elements & L.down_set(a)))
      out = "center of [0, " + L.label(a) + "] is not the center restricted to it";
    else if (atoms_of_center.contains(a) && !is_directly_indecomposable(sub.lattice, sub_center))
      out = "[0, " + L.label(a) + "] is decomposable although " + L.label(a) + " is a center atom";
  });
  return out;
}

inline std::optional<PropertyFailure> check_condition_J(FiniteLattice const& L) {
  if (auto x = condition_J_counterexample(L, center_atoms(L)))
    return "x != join of (x meet u) over center atoms at x = " + L.label(*x);
  return std::nullopt;
}

inline std::optional<PropertyFailure> check_bispatial(FiniteLattice const& L) {
  if (!is_finitely_spatial(L)) return std::string("not finitely spatial");
  if (!is_dually_finitely_spatial(L)) return std::string("not dually finitely spatial");
  if (is_finitely_spatial(dual(L)) != is_dually_finitely_spatial(L)) return std::string("duality mismatch");
  return std::nullopt;
}

/// Neu L is a distributive sublattice; Cen L is a Boolean sublattice whose
/// complementation is an involution.
inline std::optional<PropertyFailure> check_neutral_and_center_sublattices(FiniteLattice const& L) {
  ElementSet const neu = neutral_elements(L);
  if (sublattice_generated(L, neu) != neu) return std::string("Neu L is not closed under meet and join");
  if (auto t = distributivity_counterexample(L, neu))
    return "Neu L is not distributive at " + detail::names(L, {t->x, t->y, t->z});
  Center const cen = center(L);
  if (!cen.elements.is_subset_of(neu)) return std::string("a central element is not neutral");
  if (sublattice_generated(L, cen.elements) != cen.elements) return std::string("Cen L is not a sublattice");
  std::optional<PropertyFailure> out;
  cen.elements.for_each([&](Element a) {
    Element const b = cen.complement[a];
    if (out) return;
    if (!cen.contains(b) || cen.complement[b] != a)
      out = "complementation is not an involution at " + L.label(a);
    else if (L.meet(a, b) != L.bottom() || L.join(a, b) != L.top())
      out = "recorded complement is not a complement at " + L.label(a);
  });
  return out;
}

/// decompose succeeds, is self-consistent, and the forward map is an
/// isomorphism onto the explicit product of the factors.
inline std::optional<PropertyFailure> check_total_decomposition(FiniteLattice const& L) {
  try {
    Decomposition const d = decompose(L);
    if (!verify_decomposition(d)) return std::string("forward map is not an isomorphism onto the product");
  } catch (IntegrityError const& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

/// is_neutral (median identity over all pairs) agrees with the normative
/// generated-sublattice definition at every element.
inline std::optional<PropertyFailure> check_neutrality_oracle(FiniteLattice const& L) {
  for (Element a = 0; a < L.size(); ++a)
    if (is_neutral(L, a) != is_neutral_by_generation(L, a)) return "neutrality tests disagree at a = " + L.label(a);
  return std::nullopt;
}

/// Per-triple form: the median identity at (a, x, y) holds iff {a, x, y}
/// generates a distributive sublattice. True for every lattice of at most 7
/// elements but not in general; the 9-element lattice with covers
/// 0<1,2,3; 1<4,6; 2<5; 3<4,7; 4<8; 5<6,7; 6<8; 7<8 fails at (1, 2, 3).
inline std::optional<PropertyFailure> check_neutrality_triples(FiniteLattice const& L) {
  std::size_t const n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        bool const generated =
            !distributivity_counterexample(L, sublattice_generated(L, ElementSet(n, {a, x, y})));
        if (generated != median_identity_holds(L, a, x, y))
          return "median identity and generated sublattice disagree at (a, x, y) = " + detail::names(L, {a, x, y});
      }
  return std::nullopt;
}

/// center() agrees with "neutral (by generation) and complemented".
inline std::optional<PropertyFailure> check_center_oracle(FiniteLattice const& L) {
  Center const fast = center(L);
  Center const slow = center_by_definition(L);
  if (fast.elements != slow.elements) return std::string("center() differs from neutral-and-complemented");
  std::optional<PropertyFailure> out;
  fast.elements.for_each([&](Element a) {
    if (!out && fast.complement[a] != slow.complement[a]) out = "complements differ at " + L.label(a);
  });
  return out;
}

struct NamedProperty {
  std::string name;
  PropertyCheck check;
  /// Skip lattices larger than this (the normative oracles are polynomial
  /// but steep).
  std::size_t max_size = static_cast<std::size_t>(-1);
};

/// The property suites, in report order. The table check always comes first.
inline std::vector<NamedProperty> property_suites() {
  return {
      {"lattice-tables", check_lattice_tables},
      {"neutral-starred-join-meet", check_neutral_starred},
      {"starred-calculus", check_starred_calculus, 40},
      {"complementary-pair-equivalence", check_complementary_pairs},
      {"center-atoms-are-central-covers", check_center_atoms},
      {"center-of-intervals", check_center_intervals},
      {"condition-J", check_condition_J},
      {"finitely-bispatial", check_bispatial},
      {"neutral-and-center-sublattices", check_neutral_and_center_sublattices},
      {"total-decomposition", check_total_decomposition},
      {"neutrality-oracle", check_neutrality_oracle},
      {"center-oracle", check_center_oracle},
  };
}

/// A lattice with a name, as fed to the suites.
struct Specimen {
  std::string name;
  FiniteLattice lattice;
};

/// Small named lattices covering the families the library builds.
inline std::vector<Specimen> fixture_catalog() {
  std::vector<Specimen> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"chain:" + std::to_string(n), chain(n)});
  for (std::size_t n = 0; n <= 3; ++n) out.push_back({"boolean:" + std::to_string(n), boolean(n)});
  out.push_back({"M3", named("M3")});
  out.push_back({"N5", named("N5")});
  out.push_back({"product(chain:2,chain:3)", direct_product(chain(2), chain(3))});
  out.push_back({"product(chain:2,M3)", direct_product(chain(2), named("M3"))});
  out.push_back({"product(N5,chain:2)", direct_product(named("N5"), chain(2))});
  out.push_back({"product(M3,N5)", direct_product(named("M3"), named("N5"))});
  out.push_back({"sp(chain:3)", sp(chain(3)).lattice});
  out.push_back({"sp(boolean:2)", sp(boolean(2)).lattice});
  out.push_back({"co(chain:3)", co(to_poset(chain(3))).lattice});
  out.push_back({"co(boolean:2)", co(to_poset(boolean(2))).lattice});
  return out;
}

/// SplitMix64 finalizer; per-sample seeds are mix(seed ^ mix(index)), so a
/// sample's lattice depends only on (seed, index).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) { return mix64(seed ^ mix64(index)); }

/// Random specimen number `index`: size drawn in [1, max_size].
inline Specimen random_specimen(std::uint64_t seed, std::uint64_t index, std::size_t max_size) {
  std::uint64_t const s = sample_seed(seed, index);
  std::size_t const n = 1 + static_cast<std::size_t>(s % max_size);
  return {"random(" + std::to_string(n) + ", sample " + std::to_string(index) + ")", random_lattice(n, s)};
}

struct SuiteReport {
  std::string property;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// First failure, if any.
  std::optional<Specimen> counterexample;
  std::string detail;
};

/// Runs every suite over every specimen; stops a suite at its first failure.
/// Specimens whose tables fail validation are only reported by the first
/// suite (other checks assume a valid lattice).
inline std::vector<SuiteReport> run_suites(std::vector<Specimen> const& specimens,
                                           std::vector<NamedProperty> const& properties = property_suites()) {
  std::vector<bool> valid(specimens.size());
  for (std::size_t i = 0; i < specimens.size(); ++i) valid[i] = !validate_lattice(specimens[i].lattice);
  std::vector<SuiteReport> reports;
  for (std::size_t p = 0; p < properties.size(); ++p) {
    auto const& prop = properties[p];
    SuiteReport r;
    r.property = prop.name;
    for (std::size_t i = 0; i < specimens.size(); ++i) {
      auto const& s = specimens[i];
      if (s.lattice.size() > prop.max_size || (p > 0 && !valid[i])) continue;
      ++r.checked;
      if (auto f = prop.check(s.lattice)) {
        ++r.failures;
        r.counterexample = s;
        r.detail = *f;
        break;
      }
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace latticekit

#endif  // LATTICEKIT_CHECK_HPP
