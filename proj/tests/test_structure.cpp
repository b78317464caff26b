#include <catch_amalgamated.hpp>

#include <latticekit/check.hpp>
#include <latticekit/constructions.hpp>
#include <latticekit/operations.hpp>
#include <latticekit/structure.hpp>

#include "oracles.hpp"
#include "universe.hpp"

using namespace latticekit;

namespace {

ElementSet labels_to_set(FiniteLattice const& L, std::vector<std::string> const& names) {
  ElementSet s(L.size());
  for (auto const& n : names) s.insert(L.find(n));
  return s;
}

std::set<int> as_set(ElementSet const& s) {
  std::set<int> out;
  s.for_each([&](Element e) { out.insert(static_cast<int>(e)); });
  return out;
}

}  // namespace

TEST_CASE("join- and meet-irreducibles", "[structure]") {
  auto const b3 = boolean(3);
  CHECK(join_irreducibles(b3) == atoms(b3));
  CHECK(meet_irreducibles(b3) == coatoms(b3));
  CHECK(meet_irreducibles(b3).count() == 3);

  auto const c4 = chain(4);
  CHECK(join_irreducibles(c4) == labels_to_set(c4, {"1", "2", "3"}));
  CHECK(meet_irreducibles(c4) == labels_to_set(c4, {"0", "1", "2"}));

  auto const m3 = named("M3");
  CHECK(join_irreducibles(m3) == labels_to_set(m3, {"a", "b", "c"}));
  CHECK(meet_irreducibles(m3) == labels_to_set(m3, {"a", "b", "c"}));

  for (auto const& L : testing_universe::standard(100))
    CHECK(as_set(join_irreducibles(L)) == oracle::join_irreducibles(oracle::Ops(L)));
}

TEST_CASE("atoms, atomistic and separative", "[structure]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(is_atomistic(boolean(n)));
    CHECK(is_separative(boolean(n)));
  }
  auto const c3 = chain(3);
  CHECK_FALSE(is_atomistic(c3));
  auto const w = separativity_counterexample(c3);
  REQUIRE(w);
  CHECK(c3.label(w->x) == "2");
  CHECK(c3.label(w->y) == "1");

  auto const sp2 = sp(boolean(2));
  CHECK(is_atomistic(sp2.lattice));

  for (auto const& L : testing_universe::standard(100))
    if (is_atomistic(L)) CHECK(is_separative(L));
}

TEST_CASE("finite lattices are finitely bi-spatial", "[structure]") {
  CHECK(is_finitely_bispatial(named("M3")));
  for (auto const& L : testing_universe::standard(100)) {
    CHECK(is_finitely_bispatial(L));
    CHECK(is_finitely_spatial(dual(L)) == is_dually_finitely_spatial(L));
  }
}

TEST_CASE("distributive and modular", "[structure]") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(is_distributive(chain(n)));
  auto const m3 = named("M3");
  CHECK(is_modular(m3));
  CHECK_FALSE(is_distributive(m3));
  auto const n5 = named("N5");
  auto const w = modularity_counterexample(n5);
  REQUIRE(w);
  CHECK_FALSE(is_modular(n5));
  // x ≤ z but x ∨ (y ∧ z) ≠ (x ∨ y) ∧ z.
  CHECK(n5.leq(w->x, w->z));
  CHECK(n5.join(w->x, n5.meet(w->y, w->z)) != n5.meet(n5.join(w->x, w->y), w->z));

  for (auto const& L : testing_universe::standard(100)) {
    oracle::Ops const o(L);
    std::set<int> all;
    for (int x = 0; x < o.size(); ++x) all.insert(x);
    CHECK(is_distributive(L) == oracle::distributive_on(o, all));
    if (is_distributive(L)) CHECK(is_modular(L));
  }
}

TEST_CASE("sublattice_generated", "[structure]") {
  auto const b2 = boolean(2);
  for (Element x = 0; x < b2.size(); ++x) CHECK(sublattice_generated(b2, ElementSet(4, {x})) == ElementSet(4, {x}));
  CHECK(sublattice_generated(b2, labels_to_set(b2, {"a", "b"})) == b2.all());
  auto const m3 = named("M3");
  CHECK(sublattice_generated(m3, labels_to_set(m3, {"a", "b", "c"})) == m3.all());

  for (auto const& L : testing_universe::all_up_to(6)) {
    oracle::Ops const o(L);
    for (Element x = 0; x < L.size(); ++x)
      for (Element y = 0; y < L.size(); ++y)
        CHECK(as_set(sublattice_generated(L, ElementSet(L.size(), {x, y}))) ==
              oracle::generated(o, {static_cast<int>(x), static_cast<int>(y)}));
  }
}

TEST_CASE("neutral elements", "[structure]") {
  auto const m3 = named("M3");
  auto const n5 = named("N5");
  CHECK(neutral_elements(m3) == labels_to_set(m3, {"0", "1"}));
  CHECK(neutral_elements(n5) == labels_to_set(n5, {"0", "1"}));
  CHECK(neutral_elements_by_generation(m3) == labels_to_set(m3, {"0", "1"}));
  CHECK(neutral_elements_by_generation(n5) == labels_to_set(n5, {"0", "1"}));
  CHECK(as_set(neutral_elements(n5)) == oracle::neutral(oracle::Ops(n5)));

  for (auto const& L : testing_universe::standard(100))
    if (is_distributive(L)) CHECK(neutral_elements(L) == L.all());
}

TEST_CASE("median identity agrees with generation on the normative oracle", "[structure][oracle]") {
  for (auto const& L : testing_universe::all_up_to(7)) {
    CHECK(as_set(neutral_elements(L)) == oracle::neutral(oracle::Ops(L)));
    CHECK_FALSE(check_neutrality_triples(L));
  }
  for (std::size_t i = 0; i < 300; ++i) CHECK_FALSE(check_neutrality_oracle(random_specimen(11, i, 10).lattice));
}

TEST_CASE("per-triple median agreement fails beyond seven elements", "[structure]") {
  // {1, 2, 3} generates the whole lattice, which is not distributive, yet the
  // median identity holds at (1, 2, 3). Neutrality itself still agrees.
  auto const L = from_covers(FinitePoset::with_size(
      9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 6}, {2, 5}, {3, 4}, {3, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}));
  CHECK(median_identity_holds(L, 1, 2, 3));
  CHECK(sublattice_generated(L, ElementSet(9, {1, 2, 3})) == L.all());
  CHECK_FALSE(is_distributive(L));
  CHECK(check_neutrality_triples(L));
  CHECK_FALSE(check_neutrality_oracle(L));
}

TEST_CASE("center", "[structure]") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const b = boolean(n);
    auto const c = center(b);
    CHECK(c.elements == b.all());
    for (Element x = 0; x < b.size(); ++x) {
      CHECK(b.meet(x, c.complement[x]) == b.bottom());
      CHECK(b.join(x, c.complement[x]) == b.top());
    }
  }
  auto const m3 = named("M3");
  CHECK(center(m3).elements == labels_to_set(m3, {"0", "1"}));

  auto const p = direct_product(chain(3), named("N5"));
  auto const cp = center(p);
  Element const ten = p.find("(2,0)"), one = p.find("(0,1)");
  CHECK(cp.elements == labels_to_set(p, {"(0,0)", "(2,0)", "(0,1)", "(2,1)"}));
  CHECK(cp.complement[ten] == one);
  CHECK(cp.complement[one] == ten);
}

TEST_CASE("center is a Boolean sublattice of neutral elements", "[structure]") {
  for (auto const& L : testing_universe::standard(200)) {
    auto const c = center(L);
    CHECK(c.elements.is_subset_of(neutral_elements(L)));
    CHECK(c.contains(L.bottom()));
    CHECK(c.contains(L.top()));
    c.elements.for_each([&](Element a) {
      Element const na = c.complement[a];
      CHECK(c.contains(na));
      CHECK(c.complement[na] == a);
      CHECK(complements_of(L, a) == ElementSet(L.size(), {na}));
    });
    CHECK_FALSE(check_neutral_and_center_sublattices(L));
    CHECK_FALSE(check_center_oracle(L));
  }
}

TEST_CASE("starred joins and meets", "[structure]") {
  auto const m3 = named("M3");
  Element const a = m3.find("a"), b = m3.find("b"), one = m3.top();
  for (Element x = 0; x < m3.size(); ++x) {
    CHECK(star_join_holds(m3, x, {x}));
    CHECK(star_meet_holds(m3, x, {x}));
  }
  CHECK(m3.join(a, b) == one);
  CHECK_FALSE(star_join_holds(m3, one, {a, b}));

  for (auto const& L : testing_universe::standard(200)) {
    neutral_elements(L).for_each([&](Element n) {
      for (Element x = 0; x < L.size(); ++x) {
        CHECK(star_join_holds(L, L.join(n, x), {n, x}));
        CHECK(star_meet_holds(L, L.meet(n, x), {n, x}));
      }
    });
  }
}

TEST_CASE("starred calculus and complementary pairs", "[structure]") {
  for (auto const& L : testing_universe::standard(200)) {
    CHECK_FALSE(check_neutral_starred(L));
    CHECK_FALSE(check_starred_calculus(L));
    CHECK_FALSE(check_complementary_pairs(L));
  }
}
