#ifndef LATTICEKIT_OPERATIONS_HPP
#define LATTICEKIT_OPERATIONS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "lattice.hpp"

namespace latticekit {

/// A lattice carved out of a parent, with the embedding back into it.
struct Sublattice {
  FiniteLattice lattice;
  std::vector<Element> to_parent;

  /// Local index of a parent element, or kNoElement.
  Element from_parent(Element parent_index) const {
    for (Element i = 0; i < to_parent.size(); ++i)
      if (to_parent[i] == parent_index) return i;
    return kNoElement;
  }
};

/// A × B with index (i, j) ↦ i·|B| + j, componentwise operations, labels "(a,b)".
inline FiniteLattice direct_product(FiniteLattice const& A, FiniteLattice const& B,
                                    Limits const& limits = Limits::defaults()) {
  std::size_t const na = A.size(), nb = B.size(), n = na * nb;
  if (n > limits.construction)
    throw SizeCapExceeded("product of sizes " + std::to_string(na) + " and " + std::to_string(nb) +
                          " exceeds the size cap " + std::to_string(limits.construction));
  auto idx = [nb](Element i, Element j) { return static_cast<Element>(i * nb + j); };
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element i = 0; i < na; ++i)
    for (Element j = 0; j < nb; ++j) labels.push_back("(" + A.label(i) + "," + B.label(j) + ")");
  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<std::vector<Element>> lower(n);
  for (Element i = 0; i < na; ++i)
    for (Element j = 0; j < nb; ++j) {
      Element const x = idx(i, j);
      A.up_set(i).for_each([&](Element i2) {
        B.up_set(j).for_each([&](Element j2) { up[x].insert(idx(i2, j2)); });
      });
      for (Element i2 : A.lower_covers(i)) lower[x].push_back(idx(i2, j));
      for (Element j2 : B.lower_covers(j)) lower[x].push_back(idx(i, j2));
    }
  std::vector<Element> meet(n * n), join(n * n);
  for (Element i = 0; i < na; ++i)
    for (Element j = 0; j < nb; ++j)
      for (Element k = 0; k < na; ++k)
        for (Element l = 0; l < nb; ++l) {
          std::size_t const cell = static_cast<std::size_t>(idx(i, j)) * n + idx(k, l);
          meet[cell] = idx(A.meet(i, k), B.meet(j, l));
          join[cell] = idx(A.join(i, k), B.join(j, l));
        }
  return FiniteLattice::from_tables(std::move(labels), std::move(up), std::move(meet), std::move(join),
                                    idx(A.bottom(), B.bottom()), idx(A.top(), B.top()), std::move(lower));
}

/// Left-folded product of the factors; the empty product is the one-point lattice.
inline FiniteLattice product_of(std::vector<FiniteLattice> const& factors,
                                Limits const& limits = Limits::defaults()) {
  if (factors.empty()) return FiniteLattice::from_order({"()"}, {ElementSet(1, {0})});
  FiniteLattice acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = direct_product(acc, factors[i], limits);
  return acc;
}

/// The sublattice on `members` (ascending parent order). Throws InputError if
/// `members` is empty or not closed under meet and join.
inline Sublattice induced_sublattice(FiniteLattice const& L, ElementSet const& members) {
  std::vector<Element> to_parent = members.members();
  if (to_parent.empty()) throw InputError("induced sublattice of an empty set");
  std::size_t const k = to_parent.size();
  std::vector<Element> local(L.size(), kNoElement);
  for (Element i = 0; i < k; ++i) local[to_parent[i]] = i;
  std::vector<std::string> labels;
  std::vector<ElementSet> up(k, ElementSet(k));
  std::vector<Element> meet(k * k), join(k * k);
  for (Element i = 0; i < k; ++i) {
    labels.push_back(L.label(to_parent[i]));
    for (Element j = 0; j < k; ++j) {
      Element const a = to_parent[i], b = to_parent[j];
      if (L.leq(a, b)) up[i].insert(j);
      Element const m = local[L.meet(a, b)], s = local[L.join(a, b)];
      if (m == kNoElement || s == kNoElement)
        throw InputError("subset is not closed under meet and join at " + L.label(a) + ", " + L.label(b));
      meet[i * k + j] = m;
      join[i * k + j] = s;
    }
  }
  Element const bottom = local[L.meet_all(members)];
  Element const top = local[L.join_all(members)];
  return {FiniteLattice::from_tables(std::move(labels), std::move(up), std::move(meet), std::move(join), bottom,
                                     top),
          std::move(to_parent)};
}

/// [a, b] = {x : a ≤ x ≤ b}, re-indexed in ascending parent order.
inline Sublattice interval(FiniteLattice const& L, Element a, Element b) {
  if (a >= L.size() || b >= L.size()) throw InvalidElement("interval endpoint outside the lattice");
  if (!L.leq(a, b)) throw EmptyInterval("interval [" + L.label(a) + ", " + L.label(b) + "] is empty");
  return induced_sublattice(L, L.up_set(a) & L.down_set(b));
}

/// Order reversed, meet and join swapped; indexing and labels unchanged.
inline FiniteLattice dual(FiniteLattice const& L) {
  std::size_t const n = L.size();
  std::vector<ElementSet> up;
  up.reserve(n);
  std::vector<std::vector<Element>> lower(n);
  for (Element x = 0; x < n; ++x) {
    up.push_back(L.down_set(x));
    lower[x] = L.upper_covers(x);
  }
  return FiniteLattice::from_tables(L.labels(), std::move(up), L.join_table(), L.meet_table(), L.top(), L.bottom(),
                                    std::move(lower));
}

}  // namespace latticekit

#endif  // LATTICEKIT_OPERATIONS_HPP
