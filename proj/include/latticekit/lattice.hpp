#ifndef LATTICEKIT_LATTICE_HPP
#define LATTICEKIT_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace latticekit {

/// A finite bounded lattice on the dense index set {0, ..., n-1}.
///
/// Order rows, meet/join tables, the Hasse diagram and element heights are
/// all computed once at construction; the value is immutable afterwards.
/// Labels are metadata and play no role in any algorithm.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Builds the lattice of a partial order given by up-set rows (row x holds
  /// every y with x ≤ y). Throws NotALattice for the first pair, in index
  /// order, that lacks a meet or a join.
  static FiniteLattice from_order(std::vector<std::string> labels, std::vector<ElementSet> up) {
    std::size_t const n = up.size();
    if (n == 0) throw NoBounds("the empty poset has no least or greatest element");
    if (labels.size() != n) throw InputError("label count does not match element count");
    FiniteLattice L;
    L.labels_ = std::move(labels);
    L.up_ = std::move(up);
    L.build_down();
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (L.up_[x].contains(y) && L.up_[y].contains(x))
          throw CyclicCovers("order is not antisymmetric at " + L.labels_[x] + ", " + L.labels_[y]);

    std::vector<std::size_t> down_count(n), up_count(n);
    for (Element x = 0; x < n; ++x) {
      down_count[x] = L.down_[x].count();
      up_count[x] = L.up_[x].count();
    }
    L.meet_.assign(n * n, kNoElement);
    L.join_.assign(n * n, kNoElement);
    // The glb of x, y (if any) is the lower bound with the largest down-set,
    // and it is the glb exactly when that down-set is all lower bounds.
    auto bound = [&](std::vector<ElementSet> const& rows, std::vector<std::size_t> const& counts,
                     Element x, Element y) -> Element {
      ElementSet common = rows[x] & rows[y];
      std::size_t const want = common.count();
      Element best = kNoElement;
      std::size_t best_count = 0;
      common.for_each([&](Element m) {
        if (best == kNoElement || counts[m] > best_count) {
          best = m;
          best_count = counts[m];
        }
      });
      return (best != kNoElement && best_count == want) ? best : kNoElement;
    };
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        Element m = bound(L.down_, down_count, x, y);
        if (m == kNoElement)
          throw NotALattice(x, y, "elements " + L.labels_[x] + " and " + L.labels_[y] + " have no meet");
        Element j = bound(L.up_, up_count, x, y);
        if (j == kNoElement)
          throw NotALattice(x, y, "elements " + L.labels_[x] + " and " + L.labels_[y] + " have no join");
        L.meet_[x * n + y] = L.meet_[y * n + x] = m;
        L.join_[x * n + y] = L.join_[y * n + x] = j;
      }
    }
    L.bottom_ = L.top_ = 0;
    for (Element x = 1; x < n; ++x) {
      L.bottom_ = L.meet_[L.bottom_ * n + x];
      L.top_ = L.join_[L.top_ * n + x];
    }
    L.build_covers_from_order();
    L.build_heights();
    return L;
  }

  /// Builds directly from tables without checking lattice laws. The Hasse
  /// diagram is derived from `up`. Used for products, duals and fault injection;
  /// run validate_lattice on anything not produced by this library.
  static FiniteLattice from_tables(std::vector<std::string> labels, std::vector<ElementSet> up,
                                   std::vector<Element> meet, std::vector<Element> join, Element bottom,
                                   Element top, std::vector<std::vector<Element>> lower_covers = {}) {
    std::size_t const n = up.size();
    if (labels.size() != n || meet.size() != n * n || join.size() != n * n)
      throw InputError("inconsistent table sizes");
    FiniteLattice L;
    L.labels_ = std::move(labels);
    L.up_ = std::move(up);
    L.meet_ = std::move(meet);
    L.join_ = std::move(join);
    L.bottom_ = bottom;
    L.top_ = top;
    L.build_down();
    if (lower_covers.empty()) {
      L.build_covers_from_order();
    } else {
      L.lower_ = std::move(lower_covers);
      for (auto& v : L.lower_) std::sort(v.begin(), v.end());
      L.upper_.assign(n, {});
      for (Element x = 0; x < n; ++x)
        for (Element y : L.lower_[x]) L.upper_[y].push_back(x);
    }
    L.build_heights();
    return L;
  }

  std::size_t size() const noexcept { return up_.size(); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }

  /// {y : x ≤ y} and {y : y ≤ x}.
  ElementSet const& up_set(Element x) const { return up_[x]; }
  ElementSet const& down_set(Element x) const { return down_[x]; }

  std::vector<Element> const& lower_covers(Element x) const { return lower_[x]; }
  std::vector<Element> const& upper_covers(Element x) const { return upper_[x]; }
  /// Length of the longest chain from bottom to x.
  std::uint32_t height(Element x) const { return height_[x]; }

  std::string const& label(Element x) const { return labels_[x]; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::vector<ElementSet> const& up_rows() const noexcept { return up_; }
  std::vector<Element> const& meet_table() const noexcept { return meet_; }
  std::vector<Element> const& join_table() const noexcept { return join_; }

  /// Index of the element with the given label, or kNoElement.
  Element find(std::string const& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? kNoElement : static_cast<Element>(it - labels_.begin());
  }

  Element join_all(ElementSet const& s) const {
    Element acc = bottom_;
    s.for_each([&](Element e) { acc = join(acc, e); });
    return acc;
  }
  Element meet_all(ElementSet const& s) const {
    Element acc = top_;
    s.for_each([&](Element e) { acc = meet(acc, e); });
    return acc;
  }

  ElementSet all() const { return ElementSet::full(size()); }

  /// Same indexing, same tables, same labels.
  friend bool operator==(FiniteLattice const& a, FiniteLattice const& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_ && a.meet_ == b.meet_ && a.join_ == b.join_ &&
           a.bottom_ == b.bottom_ && a.top_ == b.top_;
  }

 private:
  void build_down() {
    std::size_t const n = up_.size();
    down_.assign(n, ElementSet(n));
    for (Element x = 0; x < n; ++x) up_[x].for_each([&](Element y) { down_[y].insert(x); });
  }

  void build_covers_from_order() {
    std::size_t const n = size();
    lower_.assign(n, {});
    upper_.assign(n, {});
    for (auto [a, b] : covers_of_order(up_)) {
      lower_[b].push_back(a);
      upper_[a].push_back(b);
    }
    for (auto& v : lower_) std::sort(v.begin(), v.end());
    for (auto& v : upper_) std::sort(v.begin(), v.end());
  }

  void build_heights() {
    std::size_t const n = size();
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::vector<std::size_t> dc(n);
    for (Element x = 0; x < n; ++x) dc[x] = down_[x].count();
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return dc[a] < dc[b]; });
    height_.assign(n, 0);
    for (Element x : order)
      for (Element y : lower_[x]) height_[x] = std::max(height_[x], height_[y] + 1);
  }

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::uint32_t> height_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Lattice of the reflexive-transitive closure of the poset's covers.
/// Redundant cover pairs are tolerated: only the generated order matters.
inline FiniteLattice from_covers(FinitePoset const& poset) {
  return FiniteLattice::from_order(poset.labels, order_closure(poset));
}

/// Hasse diagram of L as a poset with the same indexing and labels.
inline FinitePoset to_poset(FiniteLattice const& L) {
  FinitePoset p;
  p.labels = L.labels();
  for (Element x = 0; x < L.size(); ++x)
    for (Element y : L.upper_covers(x)) p.covers.emplace_back(x, y);
  return p;
}

/// A violated lattice law together with the elements that witness it.
struct Violation {
  std::string law;
  std::vector<Element> witness;

  std::string describe(FiniteLattice const& L) const {
    std::string s = law + " violated at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) s += ", ";
      s += witness[i] < L.size() ? L.label(witness[i]) : std::string("?");
    }
    return s + ")";
  }
};

/// Checks every FiniteLattice invariant against the stored tables. Laws over
/// pairs are checked exhaustively; laws over triples exhaustively up to
/// `exhaustive_triples` elements and on a fixed pseudo-random sample beyond.
/// Absorption witnesses are (x, y, offending table value).
inline std::optional<Violation> validate_lattice(FiniteLattice const& L, std::size_t exhaustive_triples = 12,
                                                 std::size_t sampled_triples = 50000) {
  std::size_t const n = L.size();
  auto ok = [n](Element e) { return e < n; };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!ok(L.meet(x, y)) || !ok(L.join(x, y))) return Violation{"table range", {x, y}};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element m = L.meet(x, L.join(x, y));
      if (m != x) return Violation{"absorption x meet (x join y) = x", {x, y, m}};
      Element j = L.join(x, L.meet(x, y));
      if (j != x) return Violation{"absorption x join (x meet y) = x", {x, y, j}};
    }
  }
  for (Element x = 0; x < n; ++x)
    if (L.meet(x, x) != x || L.join(x, x) != x) return Violation{"idempotence", {x}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (L.meet(x, y) != L.meet(y, x)) return Violation{"meet commutativity", {x, y}};
      if (L.join(x, y) != L.join(y, x)) return Violation{"join commutativity", {x, y}};
    }
  auto assoc = [&](Element x, Element y, Element z) -> std::optional<Violation> {
    if (L.meet(L.meet(x, y), z) != L.meet(x, L.meet(y, z))) return Violation{"meet associativity", {x, y, z}};
    if (L.join(L.join(x, y), z) != L.join(x, L.join(y, z))) return Violation{"join associativity", {x, y, z}};
    return std::nullopt;
  };
  if (n <= exhaustive_triples) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (auto v = assoc(x, y, z)) return v;
  } else {
    std::mt19937_64 rng(0x6c61747469636bULL);
    for (std::size_t i = 0; i < sampled_triples; ++i) {
      auto x = static_cast<Element>(rng() % n), y = static_cast<Element>(rng() % n),
           z = static_cast<Element>(rng() % n);
      if (auto v = assoc(x, y, z)) return v;
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!L.leq(x, x)) return Violation{"order reflexivity", {x}};
    for (Element y = 0; y < n; ++y) {
      if (x != y && L.leq(x, y) && L.leq(y, x)) return Violation{"order antisymmetry", {x, y}};
      if (L.leq(x, y) && !L.up_set(y).is_subset_of(L.up_set(x))) return Violation{"order transitivity", {x, y}};
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element m = L.meet(x, y), j = L.join(x, y);
      if (!L.leq(m, x) || !L.leq(m, y) || !(L.down_set(x) & L.down_set(y)).is_subset_of(L.down_set(m)))
        return Violation{"meet is the greatest lower bound", {x, y, m}};
      if (!L.leq(x, j) || !L.leq(y, j) || !(L.up_set(x) & L.up_set(y)).is_subset_of(L.up_set(j)))
        return Violation{"join is the least upper bound", {x, y, j}};
    }
  for (Element x = 0; x < n; ++x)
    if (!L.leq(L.bottom(), x) || !L.leq(x, L.top())) return Violation{"bounds", {x}};
  return std::nullopt;
}

/// Copy of L whose meet table has meet(x, y) = meet(y, x) = value; no other
/// table changes. Exists to exercise validate_lattice and the CLI checks.
inline FiniteLattice with_corrupted_meet(FiniteLattice const& L, Element x, Element y, Element value) {
  std::vector<Element> meet = L.meet_table();
  meet[x * L.size() + y] = meet[y * L.size() + x] = value;
  return FiniteLattice::from_tables(L.labels(), L.up_rows(), std::move(meet), L.join_table(), L.bottom(), L.top());
}

}  // namespace latticekit

#endif  // LATTICEKIT_LATTICE_HPP
