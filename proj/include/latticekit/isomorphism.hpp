#ifndef LATTICEKIT_ISOMORPHISM_HPP
#define LATTICEKIT_ISOMORPHISM_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "lattice.hpp"

namespace latticekit {

/// True iff `map` is a bijection A → B preserving meets and joins.
inline bool is_lattice_isomorphism(FiniteLattice const& A, FiniteLattice const& B, std::vector<Element> const& map) {
  std::size_t const n = A.size();
  if (B.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element x : map) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (map[A.meet(x, y)] != B.meet(map[x], map[y]) || map[A.join(x, y)] != B.join(map[x], map[y]))
        return false;
  return true;
}

namespace detail {

using Signature = std::array<std::uint32_t, 6>;

// Isomorphism-invariant profile of an element; only used to prune.
inline std::vector<Signature> element_signatures(FiniteLattice const& L) {
  std::size_t const n = L.size();
  ElementSet jirr(n), mirr(n);
  std::uint32_t max_height = 0;
  for (Element x = 0; x < n; ++x) {
    if (L.lower_covers(x).size() == 1) jirr.insert(x);
    if (L.upper_covers(x).size() == 1) mirr.insert(x);
    max_height = std::max(max_height, L.height(x));
  }
  std::vector<Signature> sig(n);
  for (Element x = 0; x < n; ++x) {
    sig[x] = {L.height(x),
              static_cast<std::uint32_t>(L.lower_covers(x).size()),
              static_cast<std::uint32_t>(L.upper_covers(x).size()),
              static_cast<std::uint32_t>((L.down_set(x) & jirr).count()),
              static_cast<std::uint32_t>((L.up_set(x) & mirr).count()),
              static_cast<std::uint32_t>(L.down_set(x).count())};
  }
  return sig;
}

}  // namespace detail

/// Searches for a lattice isomorphism A → B.
///
/// Backtracking over A's elements in (height, index) order; candidates in B
/// must share the element signature and agree on ≤ in both directions with
/// every element already placed. A bijection that reflects and preserves ≤ is
/// a lattice isomorphism, so the result is exact. Throws SearchBudgetExceeded
/// above the configured size cap or node budget instead of guessing.
inline std::optional<std::vector<Element>> is_isomorphic(FiniteLattice const& A, FiniteLattice const& B,
                                                         Limits const& limits = Limits::defaults()) {
  std::size_t const n = A.size();
  if (B.size() != n) return std::nullopt;
  if (n > limits.isomorphism)
    throw SearchBudgetExceeded("isomorphism search on " + std::to_string(n) + " elements exceeds the cap of " +
                               std::to_string(limits.isomorphism));
  auto const sa = detail::element_signatures(A);
  auto const sb = detail::element_signatures(B);
  {
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }
  // Identity first: it settles the reflexive case without search.
  {
    std::vector<Element> id(n);
    std::iota(id.begin(), id.end(), Element{0});
    if (is_lattice_isomorphism(A, B, id)) return id;
  }

  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return A.height(x) < A.height(y); });

  std::vector<Element> map(n, kNoElement);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;

  auto consistent = [&](std::size_t depth, Element b) {
    Element const a = order[depth];
    for (std::size_t d = 0; d < depth; ++d) {
      Element const x = order[d], y = map[x];
      if (A.leq(x, a) != B.leq(y, b) || A.leq(a, x) != B.leq(b, y)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    if (++nodes > limits.isomorphism_nodes) throw SearchBudgetExceeded("isomorphism search exceeded its node budget");
    Element const a = order[depth];
    for (Element b = 0; b < n; ++b) {
      if (used[b] || sb[b] != sa[a] || !consistent(depth, b)) continue;
      map[a] = b;
      used[b] = true;
      if (self(self, depth + 1)) return true;
      used[b] = false;
      map[a] = kNoElement;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

}  // namespace latticekit

#endif  // LATTICEKIT_ISOMORPHISM_HPP
