#include <catch_amalgamated.hpp>

#include <latticekit/constructions.hpp>
#include <latticekit/isomorphism.hpp>
#include <latticekit/lattice.hpp>
#include <latticekit/operations.hpp>
#include <latticekit/structure.hpp>

#include "oracles.hpp"
#include "universe.hpp"

using namespace latticekit;

namespace {

FinitePoset labelled(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> covers) {
  FinitePoset p;
  p.labels = std::move(labels);
  for (auto& [a, b] : covers) {
    auto ia = std::find(p.labels.begin(), p.labels.end(), a) - p.labels.begin();
    auto ib = std::find(p.labels.begin(), p.labels.end(), b) - p.labels.begin();
    p.covers.emplace_back(static_cast<Element>(ia), static_cast<Element>(ib));
  }
  return p;
}

}  // namespace

TEST_CASE("ElementSet basics", "[core]") {
  ElementSet s(130, {0, 64, 129});
  CHECK(s.count() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.members() == std::vector<Element>{0, 64, 129});
  CHECK(s.next(1) == 64);
  CHECK((~s).count() == 127);
  CHECK((s & ElementSet(130, {64, 65})) == ElementSet(130, {64}));
  CHECK(ElementSet(130, {64}).is_subset_of(s));
  CHECK(ElementSet::full(130).count() == 130);
  s.erase(64);
  CHECK(s.count() == 2);
}

TEST_CASE("from_covers builds the 2-chain and the square", "[core]") {
  auto const two = from_covers(FinitePoset::with_size(2, {{0, 1}}));
  CHECK(two.size() == 2);
  CHECK(two.bottom() == 0);
  CHECK(two.top() == 1);

  auto const sq = from_covers(labelled({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
  Element const a = sq.find("a"), b = sq.find("b");
  CHECK(sq.label(sq.meet(a, b)) == "0");
  CHECK(sq.label(sq.join(a, b)) == "1");
  CHECK_FALSE(validate_lattice(sq));
}

TEST_CASE("from_covers rejects non-lattices", "[core][errors]") {
  auto const vee = labelled({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  try {
    from_covers(vee);
    FAIL("expected NotALattice");
  } catch (NotALattice const& e) {
    CHECK(vee.labels[e.x()] == "a");
    CHECK(vee.labels[e.y()] == "b");
  }
  CHECK_THROWS_AS(from_covers(FinitePoset::with_size(2, {{0, 1}, {1, 0}})), CyclicCovers);
  CHECK_THROWS_AS(from_covers(FinitePoset::with_size(0)), NoBounds);
  // Two incomparable points have neither bounds nor a join.
  CHECK_THROWS_AS(from_covers(FinitePoset::with_size(2)), NotALattice);
  CHECK_THROWS_AS(from_covers(FinitePoset::with_size(2, {{0, 5}})), InputError);
}

TEST_CASE("from_covers tolerates redundant covers", "[core]") {
  auto const L = from_covers(FinitePoset::with_size(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(L.size() == 3);
  CHECK(L.upper_covers(0) == std::vector<Element>{1});
  CHECK(check_poset(FinitePoset::with_size(3, {{0, 1}, {1, 2}, {0, 2}})).has_value());
}

TEST_CASE("extracting covers and rebuilding is the identity", "[core]") {
  for (auto const& L : testing_universe::standard(50)) {
    auto const back = from_covers(to_poset(L));
    REQUIRE(back.size() == L.size());
    CHECK(back.labels() == L.labels());
    CHECK(back.up_rows() == L.up_rows());
    CHECK(back.meet_table() == L.meet_table());
  }
}

TEST_CASE("meet and join tables agree with the brute-force oracle", "[core][oracle]") {
  for (auto const& L : testing_universe::standard(100)) {
    oracle::Ops const o(L);
    for (Element x = 0; x < L.size(); ++x)
      for (Element y = 0; y < L.size(); ++y) {
        REQUIRE(static_cast<int>(L.meet(x, y)) == o.meet[x][y]);
        REQUIRE(static_cast<int>(L.join(x, y)) == o.join[x][y]);
      }
    CHECK(static_cast<int>(L.bottom()) == o.bottom);
    CHECK(static_cast<int>(L.top()) == o.top);
    CHECK_FALSE(validate_lattice(L));
  }
}

TEST_CASE("validate_lattice reports a corrupted meet", "[core][errors]") {
  auto const L = named("N5");
  auto const bad = with_corrupted_meet(L, L.bottom(), L.top(), L.top());
  auto const v = validate_lattice(bad);
  REQUIRE(v);
  CHECK(v->law.find("absorption") != std::string::npos);
  CHECK(v->describe(bad).find("(0, 1, 1)") != std::string::npos);

  auto const asym = with_corrupted_meet(L, L.find("a"), L.find("b"), L.find("a"));
  CHECK(validate_lattice(asym));
}

TEST_CASE("direct_product", "[core]") {
  auto const sq = direct_product(chain(2), chain(2));
  CHECK(is_isomorphic(sq, boolean(2)));
  CHECK(sq.label(1) == "(0,1)");

  auto const grid = direct_product(chain(2), chain(3));
  CHECK(grid.size() == 6);
  CHECK(join_irreducibles(grid).count() == 3);
  CHECK(oracle::join_irreducibles(oracle::Ops(grid)).size() == 3);

  auto const n5 = named("N5");
  CHECK(is_isomorphic(direct_product(n5, chain(1)), n5));
  CHECK(product_of({}).size() == 1);

  Limits small;
  small.construction = 20;
  CHECK_THROWS_AS(direct_product(chain(5), chain(5), small), SizeCapExceeded);
}

TEST_CASE("interval", "[core]") {
  auto const sq = boolean(2);
  auto const low = interval(sq, sq.bottom(), sq.find("a"));
  CHECK(is_isomorphic(low.lattice, chain(2)));
  CHECK(low.to_parent == std::vector<Element>{sq.bottom(), sq.find("a")});

  auto const m3 = named("M3");
  CHECK(is_isomorphic(interval(m3, m3.bottom(), m3.top()).lattice, m3));
  CHECK(is_isomorphic(interval(m3, m3.find("a"), m3.top()).lattice, chain(2)));
  CHECK_THROWS_AS(interval(m3, m3.find("a"), m3.find("b")), EmptyInterval);
  CHECK_THROWS_AS(interval(m3, 0, 99), InvalidElement);
}

TEST_CASE("dual", "[core]") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(is_isomorphic(dual(chain(n)), chain(n)));
  for (auto const& L : testing_universe::standard(50)) {
    auto const d = dual(L);
    CHECK(dual(d) == L);
    CHECK(join_irreducibles(d) == meet_irreducibles(L));
    CHECK(d.bottom() == L.top());
  }
}

TEST_CASE("is_isomorphic", "[core][isomorphism]") {
  auto const n5 = named("N5");
  auto const id = is_isomorphic(n5, n5);
  REQUIRE(id);
  for (Element x = 0; x < n5.size(); ++x) CHECK((*id)[x] == x);

  auto const m = is_isomorphic(direct_product(chain(2), chain(2)), boolean(2));
  REQUIRE(m);
  CHECK(is_lattice_isomorphism(direct_product(chain(2), chain(2)), boolean(2), *m));

  CHECK_FALSE(is_isomorphic(named("M3"), named("N5")));
  CHECK_FALSE(oracle::isomorphic(named("M3"), named("N5")));
}

TEST_CASE("is_isomorphic agrees with permutation search", "[core][isomorphism][oracle]") {
  std::vector<FiniteLattice> pool = testing_universe::all_up_to(6);
  for (std::size_t i = 0; i < 40; ++i) pool.push_back(random_lattice(1 + i % 7, 1000 + i));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].size() != pool[j].size()) continue;
      auto const m = is_isomorphic(pool[i], pool[j]);
      REQUIRE(m.has_value() == oracle::isomorphic(pool[i], pool[j]));
      if (m) CHECK(is_lattice_isomorphism(pool[i], pool[j], *m));
      CHECK(is_isomorphic(pool[j], pool[i]).has_value() == m.has_value());
    }
}

TEST_CASE("is_isomorphic respects its size cap", "[core][isomorphism][errors]") {
  auto const big = boolean(7);
  CHECK_THROWS_AS(is_isomorphic(big, big), SizeCapExceeded);
  Limits tight;
  tight.isomorphism_nodes = 3;
  auto const a = direct_product(named("M3"), named("M3"));
  auto const b = dual(a);
  // Either an answer (which must be right: M3 × M3 is self-dual) or an
  // explicit budget failure.
  try {
    auto const m = is_isomorphic(a, b, tight);
    REQUIRE(m);
    CHECK(is_lattice_isomorphism(a, b, *m));
  } catch (SearchBudgetExceeded const&) {
    SUCCEED();
  }
}

TEST_CASE("enumerated lattices satisfy the lattice laws", "[core]") {
  for (auto const& L : testing_universe::all_up_to(7)) CHECK_FALSE(validate_lattice(L));
}
