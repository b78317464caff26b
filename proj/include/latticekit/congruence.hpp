#ifndef LATTICEKIT_CONGRUENCE_HPP
#define LATTICEKIT_CONGRUENCE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "lattice.hpp"

namespace latticekit {

/// A lattice congruence stored as a block map. Block ids are canonical (the
/// least member of the block), so equal congruences compare equal.
struct Congruence {
  std::vector<Element> block_of;

  std::size_t lattice_size() const noexcept { return block_of.size(); }
  bool related(Element x, Element y) const { return block_of[x] == block_of[y]; }

  std::size_t block_count() const {
    std::size_t c = 0;
    for (Element i = 0; i < block_of.size(); ++i) c += block_of[i] == i;
    return c;
  }

  bool is_identity() const { return block_count() == block_of.size(); }
  bool is_full() const { return block_count() <= 1; }

  /// Blocks in ascending order of their least member.
  std::vector<std::vector<Element>> blocks() const {
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t> slot(block_of.size(), 0);
    for (Element i = 0; i < block_of.size(); ++i) {
      if (block_of[i] == i) {
        slot[i] = out.size();
        out.push_back({});
      }
      out[slot[block_of[i]]].push_back(i);
    }
    return out;
  }

  friend bool operator==(Congruence const&, Congruence const&) = default;
  friend auto operator<=>(Congruence const& a, Congruence const& b) { return a.block_of <=> b.block_of; }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }

  Element find(Element x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  /// Keeps the smaller root so roots stay canonical. False if already joined.
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  Congruence to_congruence() {
    Congruence c{std::vector<Element>(parent_.size())};
    for (Element i = 0; i < parent_.size(); ++i) c.block_of[i] = find(i);
    return c;
  }

 private:
  std::vector<Element> parent_;
};

// Closes the seeded pairs under x ↦ x∧c and x ↦ x∨c. An equivalence that is
// compatible with all these translations is a lattice congruence, and only
// pairs that actually merge two classes need to be translated.
inline Congruence close_under_translations(FiniteLattice const& L, UnionFind& uf,
                                           std::vector<std::pair<Element, Element>> pending) {
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    if (!uf.unite(a, b)) continue;
    for (Element c = 0; c < L.size(); ++c) {
      pending.emplace_back(L.meet(a, c), L.meet(b, c));
      pending.emplace_back(L.join(a, c), L.join(b, c));
    }
  }
  return uf.to_congruence();
}

}  // namespace detail

inline Congruence identity_congruence(std::size_t n) {
  Congruence c{std::vector<Element>(n)};
  std::iota(c.block_of.begin(), c.block_of.end(), Element{0});
  return c;
}

inline Congruence full_congruence(std::size_t n) { return Congruence{std::vector<Element>(n, 0)}; }

/// True iff `c` is an equivalence with canonical ids that is compatible with ∧ and ∨.
inline bool is_congruence(FiniteLattice const& L, Congruence const& c) {
  std::size_t const n = L.size();
  if (c.block_of.size() != n) return false;
  for (Element i = 0; i < n; ++i) {
    Element const b = c.block_of[i];
    if (b > i || c.block_of[b] != b) return false;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (!c.related(a, b)) continue;
      for (Element x = 0; x < n; ++x)
        if (!c.related(L.meet(a, x), L.meet(b, x)) || !c.related(L.join(a, x), L.join(b, x))) return false;
    }
  return true;
}

/// Θ(x, y): the least congruence collapsing x and y.
inline Congruence principal_congruence(FiniteLattice const& L, Element x, Element y) {
  detail::UnionFind uf(L.size());
  return detail::close_under_translations(L, uf, {{x, y}});
}

/// Join in the congruence lattice. The transitive closure of the union of two
/// congruences is already compatible, so merging blocks suffices.
inline Congruence join(Congruence const& a, Congruence const& b) {
  detail::UnionFind uf(a.lattice_size());
  for (Element i = 0; i < a.lattice_size(); ++i) {
    uf.unite(i, a.block_of[i]);
    uf.unite(i, b.block_of[i]);
  }
  return uf.to_congruence();
}

inline Congruence meet(Congruence const& a, Congruence const& b) {
  std::size_t const n = a.lattice_size();
  Congruence c{std::vector<Element>(n)};
  for (Element i = 0; i < n; ++i) {
    c.block_of[i] = i;
    for (Element j = 0; j < i; ++j)
      if (a.related(i, j) && b.related(i, j)) {
        c.block_of[i] = c.block_of[j];
        break;
      }
  }
  return c;
}

/// a ⊆ b as relations.
inline bool refines(Congruence const& a, Congruence const& b) {
  for (Element i = 0; i < a.lattice_size(); ++i)
    if (!b.related(i, a.block_of[i])) return false;
  return true;
}

/// Every congruence of L, ordered lexicographically by block map.
///
/// Partitions are generated as restricted growth strings; after element i is
/// placed, every translation constraint whose elements are all placed and
/// which involves i is checked, so incompatible prefixes are cut early.
inline std::vector<Congruence> all_congruences(FiniteLattice const& L, Limits const& limits = Limits::defaults()) {
  std::size_t const n = L.size();
  if (n > limits.congruence_enumeration)
    throw SizeCapExceeded("congruence enumeration on " + std::to_string(n) + " elements exceeds the cap of " +
                          std::to_string(limits.congruence_enumeration));
  std::vector<Congruence> out;
  std::vector<Element> block(n, 0);

  auto consistent = [&](Element i) {
    for (Element a = 0; a <= i; ++a)
      for (Element b = a; b <= i; ++b) {
        if (block[a] != block[b]) continue;
        for (Element c = 0; c < n; ++c) {
          for (auto [p, q] : {std::pair{L.meet(a, c), L.meet(b, c)}, std::pair{L.join(a, c), L.join(b, c)}}) {
            if (std::max({a, b, p, q}) != i) continue;
            if (block[p] != block[q]) return false;
          }
        }
      }
    return true;
  };

  auto place = [&](auto&& self, Element i) -> void {
    if (i == n) {
      out.push_back(Congruence{block});
      return;
    }
    // Existing blocks (ids are least members, all < i), then a fresh block.
    for (Element j = 0; j < i; ++j) {
      if (block[j] != j) continue;
      block[i] = j;
      if (consistent(i)) self(self, i + 1);
    }
    block[i] = i;
    if (consistent(i)) self(self, i + 1);
  };
  if (n > 0) place(place, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every congruence of L as the join-closure of the principal congruences of
/// covering pairs (each nonzero congruence contains one). Works at any size.
inline std::vector<Congruence> congruences_by_principal_joins(FiniteLattice const& L) {
  std::set<Congruence> seen{identity_congruence(L.size())};
  std::vector<Congruence> generators;
  for (Element x = 0; x < L.size(); ++x)
    for (Element y : L.upper_covers(x)) {
      Congruence c = principal_congruence(L, x, y);
      if (seen.insert(c).second) generators.push_back(c);
    }
  std::vector<Congruence> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (auto const& c : frontier)
      for (auto const& g : generators) {
        Congruence j = join(c, g);
        if (seen.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Minimal elements among the nonzero principal congruences Θ(x, y), x ≺ y.
inline std::vector<Congruence> minimal_nonzero_congruences(FiniteLattice const& L) {
  std::set<Congruence> principal;
  for (Element x = 0; x < L.size(); ++x)
    for (Element y : L.upper_covers(x)) principal.insert(principal_congruence(L, x, y));
  std::vector<Congruence> out;
  for (auto const& c : principal) {
    bool minimal = true;
    for (auto const& d : principal)
      if (d != c && refines(d, c)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

/// Only the identity and the full congruence. Requires |L| ≥ 2.
inline bool is_simple(FiniteLattice const& L) {
  if (L.size() < 2) throw InputError("simplicity is defined for lattices with at least two elements");
  for (Element x = 0; x < L.size(); ++x)
    for (Element y : L.upper_covers(x))
      if (!principal_congruence(L, x, y).is_full()) return false;
  return true;
}

/// The monolith (unique minimal nonzero congruence) if L is subdirectly
/// irreducible, nullopt otherwise. Requires |L| ≥ 2.
inline std::optional<Congruence> is_subdirectly_irreducible(FiniteLattice const& L) {
  if (L.size() < 2) throw InputError("subdirect irreducibility is defined for lattices with at least two elements");
  auto minimal = minimal_nonzero_congruences(L);
  if (minimal.size() != 1) return std::nullopt;
  return minimal.front();
}

/// L / c: blocks ordered by the least-member ids, [a] ≤ [b] iff [a∧b] = [a].
inline FiniteLattice quotient(FiniteLattice const& L, Congruence const& c) {
  if (!is_congruence(L, c)) throw InputError("quotient by a relation that is not a congruence of the lattice");
  auto const blocks = c.blocks();
  std::size_t const k = blocks.size();
  std::vector<Element> index_of(L.size());
  std::vector<std::string> labels;
  for (Element b = 0; b < k; ++b) {
    std::string label = "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      index_of[blocks[b][i]] = b;
      label += (i ? "," : "") + L.label(blocks[b][i]);
    }
    labels.push_back(label + "}");
  }
  std::vector<ElementSet> up(k, ElementSet(k));
  std::vector<Element> meet_t(k * k), join_t(k * k);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) {
      Element const ra = blocks[a].front(), rb = blocks[b].front();
      meet_t[a * k + b] = index_of[L.meet(ra, rb)];
      join_t[a * k + b] = index_of[L.join(ra, rb)];
      if (meet_t[a * k + b] == a) up[a].insert(b);
    }
  return FiniteLattice::from_tables(std::move(labels), std::move(up), std::move(meet_t), std::move(join_t),
                                    index_of[L.bottom()], index_of[L.top()]);
}

}  // namespace latticekit

#endif  // LATTICEKIT_CONGRUENCE_HPP
