#ifndef LATTICEKIT_CONSTRUCTIONS_HPP
#define LATTICEKIT_CONSTRUCTIONS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "isomorphism.hpp"
#include "lattice.hpp"
#include "poset.hpp"

namespace latticekit {

/// A lattice of subsets of some base set, ordered by inclusion, with each
/// element annotated by the subset it stands for.
struct SetLattice {
  FiniteLattice lattice;
  std::vector<ElementSet> subsets;
  std::vector<std::string> base_labels;

  /// Element whose annotation equals `subset`, or kNoElement.
  Element find(ElementSet const& subset) const {
    auto it = std::find(subsets.begin(), subsets.end(), subset);
    return it == subsets.end() ? kNoElement : static_cast<Element>(it - subsets.begin());
  }
};

namespace detail {

using Mask = std::uint64_t;

inline std::string subset_label(Mask m, std::vector<std::string> const& base_labels) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < base_labels.size(); ++i)
    if ((m >> i) & 1U) {
      if (!first) s += ",";
      s += base_labels[i];
      first = false;
    }
  return s + "}";
}

/// Lattice of a closure system: `family` must contain the full base set and
/// be closed under intersection. Elements are sorted by (cardinality, mask);
/// meet is intersection, join the least member containing the union.
inline SetLattice closure_system_lattice(std::vector<Mask> family, std::vector<std::string> base_labels,
                                         bool label_by_subset = true) {
  std::size_t const base = base_labels.size();
  Mask const full = base == 64 ? ~Mask{0} : ((Mask{1} << base) - 1);
  std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
    int const pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::size_t const n = family.size();
  if (n == 0 || family.back() != full) throw IntegrityError("closure system lacks the full set");
  std::unordered_map<Mask, Element> index;
  for (Element i = 0; i < n; ++i) index.emplace(family[i], i);

  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<Element> meet(n * n), join(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = i; j < n; ++j) {
      Mask const a = family[i], b = family[j];
      if ((a & b) == a) up[i].insert(j);
      if ((a & b) == b) up[j].insert(i);
      auto it = index.find(a & b);
      if (it == index.end()) throw IntegrityError("closure system is not closed under intersection");
      meet[i * n + j] = meet[j * n + i] = it->second;
      Mask const u = a | b;
      Element k = j;
      while ((family[k] & u) != u) ++k;  // the full set is last, so this stops
      join[i * n + j] = join[j * n + i] = k;
    }
  std::vector<std::string> labels;
  SetLattice out;
  for (Element i = 0; i < n; ++i) {
    labels.push_back(label_by_subset ? subset_label(family[i], base_labels) : std::to_string(i));
    ElementSet s(base);
    for (std::size_t b = 0; b < base; ++b)
      if ((family[i] >> b) & 1U) s.insert(static_cast<Element>(b));
    out.subsets.push_back(std::move(s));
  }
  out.lattice = FiniteLattice::from_tables(std::move(labels), std::move(up), std::move(meet), std::move(join), 0,
                                           static_cast<Element>(n - 1));
  out.base_labels = std::move(base_labels);
  return out;
}

/// Masks of up-sets / down-sets of a lattice's elements.
inline std::vector<Mask> mask_rows(std::vector<ElementSet> const& rows) {
  std::vector<Mask> out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].for_each([&](Element e) { out[i] |= Mask{1} << e; });
  return out;
}

}  // namespace detail

/// The Boolean lattice 2ⁿ on bitmask indices. Labels: "0" for ∅, "1" for the
/// full set, atom letters otherwise ("a", "bc", ...).
inline FiniteLattice boolean(std::size_t n, Limits const& limits = Limits::defaults()) {
  if (n > limits.boolean_rank) throw InputError("boolean(n) requires n <= " + std::to_string(limits.boolean_rank));
  std::size_t const size = std::size_t{1} << n;
  if (size > limits.construction) throw SizeCapExceeded("boolean(" + std::to_string(n) + ") exceeds the size cap");
  Element const full = static_cast<Element>(size - 1);
  std::vector<std::string> labels;
  std::vector<ElementSet> up(size, ElementSet(size));
  std::vector<std::vector<Element>> lower(size);
  std::vector<Element> meet(size * size), join(size * size);
  for (Element x = 0; x < size; ++x) {
    std::string l;
    if (x == 0)
      l = "0";
    else if (x == full)
      l = "1";
    else
      for (std::size_t b = 0; b < n; ++b)
        if ((x >> b) & 1U) l += static_cast<char>('a' + b);
    labels.push_back(l);
    for (Element y = 0; y < size; ++y) {
      if ((x & y) == x) up[x].insert(y);
      meet[x * size + y] = x & y;
      join[x * size + y] = x | y;
    }
    for (std::size_t b = 0; b < n; ++b)
      if ((x >> b) & 1U) lower[x].push_back(x & ~(Element{1} << b));
  }
  return FiniteLattice::from_tables(std::move(labels), std::move(up), std::move(meet), std::move(join), 0, full,
                                    std::move(lower));
}

/// The chain 0 < 1 < ... < n-1.
inline FiniteLattice chain(std::size_t n, Limits const& limits = Limits::defaults()) {
  if (n == 0) throw InputError("chain(n) requires n >= 1");
  if (n > limits.construction) throw SizeCapExceeded("chain(" + std::to_string(n) + ") exceeds the size cap");
  FinitePoset p = FinitePoset::with_size(n);
  for (Element i = 0; i + 1 < n; ++i) p.covers.emplace_back(i, i + 1);
  return from_covers(p);
}

/// Named small lattices: "M3" (diamond, atoms a b c) and "N5" (pentagon,
/// 0 < a < c < 1 and 0 < b < 1).
inline FiniteLattice named(std::string const& name) {
  FinitePoset p;
  p.labels = {"0", "a", "b", "c", "1"};
  if (name == "M3") {
    p.covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  } else if (name == "N5") {
    p.covers = {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}};
  } else {
    throw InputError("unknown named lattice " + name);
  }
  return from_covers(p);
}

/// Sp(A) for finite A: the meet-closed subsets of A that contain the top,
/// ordered by inclusion. In a finite lattice every nonempty up-directed subset
/// has a largest element, so closure under directed joins adds nothing; the
/// empty intersection is the top, which is why every member contains it.
///
/// Families over more than six base elements are generated with NextClosure
/// (lectic order) instead of filtering all 2^|A| subsets.
inline SetLattice sp(FiniteLattice const& A, Limits const& limits = Limits::defaults()) {
  std::size_t const m = A.size();
  if (m > limits.sp_base)
    throw SizeCapExceeded("sp(A) requires |A| <= " + std::to_string(limits.sp_base));
  using detail::Mask;
  Mask const top_bit = Mask{1} << A.top();
  auto closure = [&](Mask x) {
    x |= top_bit;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < m; ++i)
        if ((x >> i) & 1U)
          for (std::size_t j = i + 1; j < m; ++j)
            if ((x >> j) & 1U) {
              Mask const bit = Mask{1} << A.meet(static_cast<Element>(i), static_cast<Element>(j));
              if (!(x & bit)) {
                x |= bit;
                changed = true;
              }
            }
    }
    return x;
  };
  std::vector<Mask> family;
  if (m <= 6) {
    for (Mask x = 0; x < (Mask{1} << m); ++x)
      if (closure(x) == x) family.push_back(x);
  } else {
    // NextClosure: the lectic successor of a closed set X is the smallest
    // closure(X ∩ {0..i-1} ∪ {i}) that adds nothing below i.
    Mask x = closure(0);
    family.push_back(x);
    Mask const full = (Mask{1} << m) - 1;
    while (x != full) {
      for (std::size_t i = m; i-- > 0;) {
        Mask const bit = Mask{1} << i;
        if (x & bit) continue;
        Mask const below = bit - 1;
        Mask const y = closure((x & below) | bit);
        if ((y & below) == (x & below)) {
          x = y;
          break;
        }
      }
      family.push_back(x);
    }
  }
  return detail::closure_system_lattice(std::move(family), A.labels());
}

/// U_a = {a, 1} as an element of Sp(B). The top of B has no U.
inline Element u_atom(SetLattice const& sp_of_b, Element a) {
  std::size_t const m = sp_of_b.base_labels.size();
  ElementSet const& top_subset = sp_of_b.subsets.front();  // {1} is the least algebraic subset
  if (a >= m) throw InvalidElement("u_atom: element outside the base lattice");
  if (top_subset.contains(a)) throw InvalidElement("u_atom: U_a is undefined for the top element");
  ElementSet target = top_subset;
  target.insert(a);
  Element const e = sp_of_b.find(target);
  if (e == kNoElement) throw InvalidElement("u_atom: {a, 1} is not an element of this lattice");
  return e;
}

/// Co(P): the convex subsets of P ordered by inclusion, ∅ at the bottom;
/// meet is intersection and join the convex hull of the union.
inline SetLattice co(FinitePoset const& P, Limits const& limits = Limits::defaults()) {
  std::size_t const m = P.size();
  if (m > limits.co_base) throw SizeCapExceeded("co(P) requires |P| <= " + std::to_string(limits.co_base));
  using detail::Mask;
  auto const up = detail::mask_rows(order_closure(P));
  std::vector<Mask> down(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if ((up[x] >> y) & 1U) down[y] |= Mask{1} << x;
  auto hull = [&](Mask x) {
    Mask ups = 0, downs = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((x >> i) & 1U) {
        ups |= up[i];
        downs |= down[i];
      }
    return ups & downs;
  };
  std::vector<Mask> family;
  for (Mask x = 0; x < (Mask{1} << m); ++x)
    if (hull(x) == x) family.push_back(x);
  return detail::closure_system_lattice(std::move(family), P.labels);
}

/// Closed subsets of a finite chain in its interval topology that contain the
/// top. The closed sets are generated from the subbasis {↓a, ↑a}; on a finite
/// chain every singleton is closed, so the result is all supersets of {1}.
inline SetLattice closed_sets_interval_topology(FiniteLattice const& chain_lattice) {
  std::size_t const m = chain_lattice.size();
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (!chain_lattice.leq(x, y) && !chain_lattice.leq(y, x))
        throw NotAChain("elements " + chain_lattice.label(x) + " and " + chain_lattice.label(y) + " are incomparable");
  if (m > 20) throw SizeCapExceeded("interval topology closed sets require at most 20 points");
  using detail::Mask;
  Mask const full = (Mask{1} << m) - 1;
  auto const ups = detail::mask_rows(chain_lattice.up_rows());
  std::vector<Mask> subbasis{full};
  for (Element a = 0; a < m; ++a) {
    subbasis.push_back(ups[a]);
    Mask d = 0;
    for (Element x = 0; x < m; ++x)
      if (chain_lattice.leq(x, a)) d |= Mask{1} << x;
    subbasis.push_back(d);
  }
  // Finite intersections of subbasic sets, then finite unions of those.
  auto close = [](std::vector<Mask> sets, auto op) {
    std::vector<Mask> all = std::move(sets);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        Mask const c = op(all[i], all[j]);
        if (std::find(all.begin(), all.end(), c) == all.end()) all.push_back(c);
      }
    return all;
  };
  auto basis = close(subbasis, [](Mask a, Mask b) { return a & b; });
  auto closed = close(basis, [](Mask a, Mask b) { return a | b; });
  Mask const top_bit = Mask{1} << chain_lattice.top();
  std::vector<Mask> family;
  for (Mask c : closed)
    if (c & top_bit) family.push_back(c);
  return detail::closure_system_lattice(std::move(family), chain_lattice.labels());
}

/// A random closure system on k ≤ 7 points with at most n members, as a
/// lattice labelled "0".."m-1" (m ≤ n). Generators are drawn one at a time and
/// kept only if the intersection closure stays within n. Reproducible per
/// seed: the raw mt19937_64 stream is used without library distributions.
inline FiniteLattice random_lattice(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random_lattice(n) requires n >= 1");
  using detail::Mask;
  std::mt19937_64 rng(seed);
  std::size_t const k = 1 + static_cast<std::size_t>(rng() % std::min<std::size_t>(n, 7));
  Mask const full = (Mask{1} << k) - 1;
  std::vector<Mask> family{full};
  auto closed_with = [&](Mask g) {
    std::vector<Mask> out = family;
    if (std::find(out.begin(), out.end(), g) != out.end()) return out;
    out.push_back(g);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        Mask const c = out[i] & out[j];
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
    return out;
  };
  for (int attempt = 0; attempt < 64 && family.size() < n; ++attempt) {
    auto next = closed_with(rng() & full);
    if (next.size() <= n) family = std::move(next);
  }
  std::vector<std::string> base;
  for (std::size_t i = 0; i < k; ++i) base.push_back(std::to_string(i));
  return detail::closure_system_lattice(std::move(family), std::move(base), false).lattice;
}

/// All lattices on n elements up to isomorphism, in a fixed order.
///
/// Removing a join-irreducible p from a finite lattice leaves a join-closed
/// subset with a bottom, hence a lattice. So every n-element lattice arises
/// from an (n-1)-element one by adding p above a single element d with some
/// up-set of (d, 1] above it; candidates are checked and deduplicated with
/// is_isomorphic inside signature buckets.
inline std::vector<FiniteLattice> enumerate_lattices(std::size_t n, Limits const& limits = Limits::defaults()) {
  if (n == 0) throw InputError("enumerate_lattices(n) requires n >= 1");
  if (n > limits.enumerate) throw SizeCapExceeded("enumerate_lattices(n) requires n <= " + std::to_string(limits.enumerate));
  std::vector<FiniteLattice> level{FiniteLattice::from_order({"0"}, {ElementSet(1, {0})})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<FiniteLattice> next;
    std::map<std::vector<detail::Signature>, std::vector<std::size_t>> buckets;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
    for (auto const& K : level) {
      std::size_t const m = K.size();
      auto const new_index = static_cast<Element>(m);
      // Elements sorted so that everything above x precedes x.
      std::vector<Element> by_depth(m);
      for (Element x = 0; x < m; ++x) by_depth[x] = x;
      std::stable_sort(by_depth.begin(), by_depth.end(),
                       [&](Element a, Element b) { return K.down_set(a).count() > K.down_set(b).count(); });
      for (Element d = 0; d < m; ++d) {
        ElementSet strict_up = K.up_set(d);
        strict_up.erase(d);
        std::vector<Element> cand;
        for (Element x : by_depth)
          if (strict_up.contains(x)) cand.push_back(x);
        ElementSet chosen(m);
        auto emit = [&] {
          std::vector<ElementSet> up(size, ElementSet(size));
          for (Element x = 0; x < m; ++x) {
            K.up_set(x).for_each([&](Element y) { up[x].insert(y); });
            if (K.leq(x, d)) up[x].insert(new_index);
          }
          up[new_index].insert(new_index);
          chosen.for_each([&](Element y) { up[new_index].insert(y); });
          FiniteLattice L;
          try {
            L = FiniteLattice::from_order(labels, std::move(up));
          } catch (NotALattice const&) {
            return;
          }
          auto sig = detail::element_signatures(L);
          std::sort(sig.begin(), sig.end());
          auto& bucket = buckets[sig];
          for (std::size_t idx : bucket)
            if (is_isomorphic(next[idx], L, limits)) return;
          bucket.push_back(next.size());
          next.push_back(std::move(L));
        };
        auto choose = [&](auto&& self, std::size_t i) -> void {
          if (i == cand.size()) {
            emit();
            return;
          }
          self(self, i + 1);
          ElementSet above = K.up_set(cand[i]);
          above.erase(cand[i]);
          if (above.is_subset_of(chosen)) {
            chosen.insert(cand[i]);
            self(self, i + 1);
            chosen.erase(cand[i]);
          }
        };
        choose(choose, 0);
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace latticekit

#endif  // LATTICEKIT_CONSTRUCTIONS_HPP
