#ifndef LATTICEKIT_DECOMPOSITION_HPP
#define LATTICEKIT_DECOMPOSITION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "isomorphism.hpp"
#include "lattice.hpp"
#include "operations.hpp"
#include "structure.hpp"

namespace latticekit {

/// Least central element above x: the meet of all central u ≥ x.
inline Element central_cover(FiniteLattice const& L, Center const& cen, Element x) {
  return L.meet_all(cen.elements & L.up_set(x));
}

inline Element central_cover(FiniteLattice const& L, Element x) { return central_cover(L, center(L), x); }

/// Atoms of the Boolean lattice Cen L.
inline ElementSet center_atoms(FiniteLattice const& L, Center const& cen) {
  ElementSet out(L.size());
  cen.elements.for_each([&](Element u) {
    if (u == L.bottom()) return;
    // u is an atom of Cen L iff the only central elements below it are 0 and u.
    if ((cen.elements & L.down_set(u)).count() == 2) out.insert(u);
  });
  return out;
}

inline ElementSet center_atoms(FiniteLattice const& L) { return center_atoms(L, center(L)); }

/// First x with x ≠ ⋁_{u ∈ U} (x ∧ u), U the atoms of the center.
inline std::optional<Element> condition_J_counterexample(FiniteLattice const& L, ElementSet const& center_atom_set) {
  std::vector<Element> const u = center_atom_set.members();
  for (Element x = 0; x < L.size(); ++x) {
    Element acc = L.bottom();
    for (Element v : u) acc = L.join(acc, L.meet(x, v));
    if (acc != x) return x;
  }
  return std::nullopt;
}

inline bool condition_J_holds(FiniteLattice const& L) {
  return !condition_J_counterexample(L, center_atoms(L));
}

/// |L| ≥ 2 and Cen L = {0, 1}. The one-point lattice is the empty product and
/// is not counted as indecomposable.
inline bool is_directly_indecomposable(FiniteLattice const& L, Center const& cen) {
  return L.size() >= 2 && cen.size() == 2;
}

inline bool is_directly_indecomposable(FiniteLattice const& L) {
  return L.size() >= 2 && is_directly_indecomposable(L, center(L));
}

/// L ≅ [0,a] × [0,b] through z ↦ (z∧a, z∧b).
struct CentralSplit {
  Sublattice left;
  Sublattice right;
  /// forward[z] = (local index in left, local index in right).
  std::vector<std::pair<Element, Element>> forward;

  Element backward(FiniteLattice const& L, Element x, Element y) const {
    return L.join(left.to_parent[x], right.to_parent[y]);
  }
};

inline CentralSplit split_by_central_pair(FiniteLattice const& L, Element a, Element b) {
  if (a >= L.size() || b >= L.size()) throw InvalidElement("split element outside the lattice");
  Center const cen = center(L);
  if (!cen.contains(a) || cen.complement[a] != b)
    throw NotCentralPair("(" + L.label(a) + ", " + L.label(b) + ") is not a complementary pair of central elements");
  CentralSplit s{interval(L, L.bottom(), a), interval(L, L.bottom(), b), {}};
  s.forward.reserve(L.size());
  for (Element z = 0; z < L.size(); ++z)
    s.forward.emplace_back(s.left.from_parent(L.meet(z, a)), s.right.from_parent(L.meet(z, b)));
  return s;
}

/// L ≅ ∏_{u ∈ U} [0, u] for U the atoms of Cen L.
///
/// forward(x) = (x ∧ u)_u, backward(t) = ⋁ t. Factors appear in ascending
/// index order of their center atom.
struct Decomposition {
  FiniteLattice base;
  std::vector<Element> center_atoms;
  std::vector<Sublattice> factors;
  /// forward[x][k]: local index of x ∧ U[k] inside factor k.
  std::vector<std::vector<Element>> forward;

  Element backward(std::span<Element const> tuple) const {
    Element acc = base.bottom();
    for (std::size_t k = 0; k < factors.size(); ++k) acc = base.join(acc, factors[k].to_parent[tuple[k]]);
    return acc;
  }

  std::vector<FiniteLattice> factor_lattices() const {
    std::vector<FiniteLattice> out;
    for (auto const& f : factors) out.push_back(f.lattice);
    return out;
  }

  /// Index of forward(x) in product_of(factor_lattices()).
  Element product_index(Element x) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) idx = idx * factors[k].lattice.size() + forward[x][k];
    return static_cast<Element>(idx);
  }
};

/// Builds the total decomposition and checks its invariants; any failure is
/// an IntegrityError since a finite lattice always decomposes.
inline Decomposition decompose(FiniteLattice const& L) {
  std::size_t const n = L.size();
  Center const cen = center(L);
  Decomposition d;
  d.base = L;
  ElementSet const atom_set = center_atoms(L, cen);
  d.center_atoms = atom_set.members();
  auto const& U = d.center_atoms;

  Element top = L.bottom();
  for (Element u : U) top = L.join(top, u);
  if (top != L.top()) throw IntegrityError("center atoms do not join to the top");
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = i + 1; j < U.size(); ++j)
      if (L.meet(U[i], U[j]) != L.bottom()) throw IntegrityError("two center atoms meet above the bottom");
  if (auto x = condition_J_counterexample(L, atom_set))
    throw IntegrityError("condition (J) fails at " + L.label(*x));

  std::vector<std::vector<Element>> local;
  for (Element u : U) {
    d.factors.push_back(interval(L, L.bottom(), u));
    std::vector<Element> m(n, kNoElement);
    for (Element i = 0; i < d.factors.back().to_parent.size(); ++i) m[d.factors.back().to_parent[i]] = i;
    local.push_back(std::move(m));
    if (!is_directly_indecomposable(d.factors.back().lattice))
      throw IntegrityError("factor [0, " + L.label(u) + "] is not directly indecomposable");
  }

  d.forward.assign(n, std::vector<Element>(U.size()));
  for (Element x = 0; x < n; ++x)
    for (std::size_t k = 0; k < U.size(); ++k) d.forward[x][k] = local[k][L.meet(x, U[k])];

  std::size_t product_size = 1;
  for (auto const& f : d.factors) product_size *= f.lattice.size();
  if (product_size != n) throw IntegrityError("factor sizes do not multiply to the lattice size");
  for (Element x = 0; x < n; ++x)
    if (d.backward(d.forward[x]) != x) throw IntegrityError("backward(forward(x)) != x at " + L.label(x));
  // Every tuple, in mixed radix: forward(backward(t)) = t.
  std::vector<Element> t(U.size(), 0);
  for (std::size_t count = 0; count < product_size; ++count) {
    if (d.forward[d.backward(t)] != t) throw IntegrityError("forward(backward(t)) != t");
    for (std::size_t k = U.size(); k-- > 0;) {
      if (++t[k] < d.factors[k].lattice.size()) break;
      t[k] = 0;
    }
  }
  return d;
}

/// Independent check that forward is a lattice isomorphism onto the explicit
/// direct product of the factors.
inline bool verify_decomposition(Decomposition const& d, Limits const& limits = Limits::defaults()) {
  FiniteLattice const product = product_of(d.factor_lattices(), limits);
  std::vector<Element> map(d.base.size());
  for (Element x = 0; x < d.base.size(); ++x) map[x] = d.product_index(x);
  return is_lattice_isomorphism(d.base, product, map);
}

}  // namespace latticekit

#endif  // LATTICEKIT_DECOMPOSITION_HPP
