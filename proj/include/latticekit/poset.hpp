#ifndef LATTICEKIT_POSET_HPP
#define LATTICEKIT_POSET_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"

namespace latticekit {

/// A finite poset presented by its cover relation: (a, b) means a ≺ b.
struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> covers;

  std::size_t size() const noexcept { return labels.size(); }

  /// Poset on n elements labelled "0" .. "n-1".
  static FinitePoset with_size(std::size_t n, std::vector<std::pair<Element, Element>> covers = {}) {
    FinitePoset p;
    p.labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.labels.push_back(std::to_string(i));
    p.covers = std::move(covers);
    return p;
  }
};

/// Reflexive-transitive closure of the cover relation, as up-set rows:
/// row x holds every y with x ≤ y. Throws CyclicCovers if the closure is not
/// antisymmetric and InputError on out-of-range indices.
inline std::vector<ElementSet> order_closure(FinitePoset const& poset) {
  std::size_t const n = poset.size();
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : poset.covers) {
    if (a >= n || b >= n) throw InputError("cover pair references an element outside the poset");
    if (a == b) throw CyclicCovers("cover relation contains the loop " + poset.labels[a] + " < " + poset.labels[a]);
    succ[a].push_back(b);
    ++indegree[b];
  }
  // Kahn's algorithm; the closure is built in reverse topological order.
  std::vector<Element> order;
  order.reserve(n);
  for (Element x = 0; x < n; ++x)
    if (indegree[x] == 0) order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Element b : succ[order[head]])
      if (--indegree[b] == 0) order.push_back(b);
  if (order.size() != n) {
    Element culprit = 0;
    while (indegree[culprit] == 0) ++culprit;
    throw CyclicCovers("cover relation has a cycle through " + poset.labels[culprit]);
  }
  std::vector<ElementSet> up(n, ElementSet(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    up[*it].insert(*it);
    for (Element b : succ[*it]) up[*it] |= up[b];
  }
  return up;
}

/// First problem with the poset's own invariants, or nullopt.
inline std::optional<std::string> check_poset(FinitePoset const& poset) {
  std::set<std::string> seen;
  for (auto const& l : poset.labels)
    if (!seen.insert(l).second) return "duplicate label " + l;
  std::vector<ElementSet> up;
  try {
    up = order_closure(poset);
  } catch (LatticeError const& e) {
    return std::string(e.what());
  }
  std::set<std::pair<Element, Element>> distinct(poset.covers.begin(), poset.covers.end());
  for (auto [a, b] : distinct) {
    // a ≺ b is redundant if some other successor c of a already reaches b.
    for (auto [c, d] : distinct) {
      if (c != a || d == b) continue;
      if (up[d].contains(b))
        return "cover " + poset.labels[a] + " < " + poset.labels[b] + " is implied by the others";
    }
  }
  return std::nullopt;
}

/// Transitive reduction of an order given as up-set rows.
inline std::vector<std::pair<Element, Element>> covers_of_order(std::vector<ElementSet> const& up) {
  std::size_t const n = up.size();
  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element x = 0; x < n; ++x) up[x].for_each([&](Element y) { down[y].insert(x); });
  std::vector<std::pair<Element, Element>> covers;
  for (Element x = 0; x < n; ++x)
    up[x].for_each([&](Element y) {
      if (y != x && (up[x] & down[y]).count() == 2) covers.emplace_back(x, y);
    });
  return covers;
}

}  // namespace latticekit

#endif  // LATTICEKIT_POSET_HPP
