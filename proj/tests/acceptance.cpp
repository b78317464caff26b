// Acceptance suite: one PASS/FAIL line per criterion, with the runtime bound
// each criterion must meet. Exit status is nonzero iff any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <latticekit/check.hpp>
#include <latticekit/congruence.hpp>
#include <latticekit/constructions.hpp>
#include <latticekit/decomposition.hpp>
#include <latticekit/io.hpp>
#include <latticekit/isomorphism.hpp>

#include "oracles.hpp"

using namespace latticekit;
namespace fs = std::filesystem;

namespace {

/// Collects the first reason a criterion fails.
class Verdict {
 public:
  void require(bool ok, std::string const& what) {
    if (!ok && reason_.empty()) reason_ = what;
  }
  bool ok() const { return reason_.empty(); }
  std::string const& reason() const { return reason_; }

 private:
  std::string reason_;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Verdict&)> body;
};

std::string element_labels(FiniteLattice const& L, ElementSet const& s) {
  std::string out = "{";
  s.for_each([&](Element e) { out += (out.size() > 1 ? "," : "") + L.label(e); });
  return out + "}";
}

// 1. Sp(2²): size from the subset filter, the presentation by generators, not simple.
void sp_presentation(Verdict& v) {
  auto const B = boolean(2);
  auto const s = sp(B);
  std::size_t const brute = oracle::meet_closed_with_top(oracle::Ops(B)).size();
  v.require(brute == 7, "brute-force subset filter found " + std::to_string(brute) + " sets, expected 7");
  v.require(s.lattice.size() == 7, "sp(boolean(2)) has " + std::to_string(s.lattice.size()) + " elements");
  auto const presented = from_covers(oracle::presented_abc());
  v.require(presented.size() == 7, "presented semilattice has the wrong size");
  auto const iso = is_isomorphic(s.lattice, presented);
  v.require(iso && is_lattice_isomorphism(s.lattice, presented, *iso),
            "sp(boolean(2)) is not isomorphic to <a,b,c | c <= a v b>");
  v.require(!is_simple(s.lattice), "sp(boolean(2)) reported simple");
}

// 2. Sp(B) is subdirectly irreducible with monolith Θ({1}, U₀); its atoms are the U_a.
void sp_subdirectly_irreducible(Verdict& v) {
  for (std::size_t n : {2u, 3u}) {
    std::string const tag = "sp(boolean(" + std::to_string(n) + ")): ";
    auto const B = boolean(n);
    auto const s = sp(B);
    if (n == 3) {
      std::size_t const brute = oracle::meet_closed_with_top(oracle::Ops(B)).size();
      v.require(brute == 61, tag + "brute force over 2^8 subsets found " + std::to_string(brute));
      v.require(s.lattice.size() == 61, tag + std::to_string(s.lattice.size()) + " elements, expected 61");
    }
    Element const one = s.lattice.bottom();
    v.require(s.subsets[one] == ElementSet(B.size(), {B.top()}), tag + "bottom is not {1}");
    Element const u0 = u_atom(s, B.bottom());
    auto const mono = is_subdirectly_irreducible(s.lattice);
    v.require(mono.has_value(), tag + "no monolith");
    if (mono) v.require(*mono == principal_congruence(s.lattice, one, u0), tag + "monolith differs from Θ({1}, U0)");
    ElementSet us(s.lattice.size());
    for (Element a = 0; a < B.size(); ++a)
      if (a != B.top()) us.insert(u_atom(s, a));
    ElementSet const at = atoms(s.lattice);
    v.require(at == us, tag + "atoms " + element_labels(s.lattice, at) + " differ from the U_a " +
                            element_labels(s.lattice, us));
  }
}

// 3. Co(2²): 13 elements, directly indecomposable, not subdirectly irreducible.
void co_contrast(Verdict& v) {
  auto const B = boolean(2);
  auto const c = co(to_poset(B));
  std::size_t const brute = oracle::convex_subsets(oracle::order_of(B)).size();
  v.require(brute == 13, "convexity filter found " + std::to_string(brute) + " sets, expected 13");
  v.require(c.lattice.size() == 13, "co(boolean(2)) has " + std::to_string(c.lattice.size()) + " elements");
  v.require(is_directly_indecomposable(c.lattice), "co(boolean(2)) is decomposable");
  v.require(!is_subdirectly_irreducible(c.lattice), "co(boolean(2)) reported subdirectly irreducible");
}

// 4. Decomposition of 500 seeded random products recovers the factors.
void decomposition_round_trip(Verdict& v) {
  std::vector<std::pair<std::string, FiniteLattice>> const pool = {
      {"chain:2", chain(2)}, {"chain:3", chain(3)}, {"chain:4", chain(4)},
      {"M3", named("M3")},   {"N5", named("N5")},   {"co(chain:3)", co(to_poset(chain(3))).lattice}};
  std::mt19937_64 rng(20240611);
  std::size_t failures = 0;
  std::string first;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t const k = 2 + rng() % 3;
    std::vector<FiniteLattice> factors;
    std::string desc;
    for (std::size_t i = 0; i < k; ++i) {
      auto const& [name, L] = pool[rng() % pool.size()];
      factors.push_back(L);
      desc += (i ? " x " : "") + name;
    }
    auto const P = product_of(factors);
    auto const d = decompose(P);
    bool ok = d.factors.size() == k;
    std::vector<bool> used(k);
    for (auto const& f : d.factors) {
      bool matched = false;
      for (std::size_t j = 0; j < k && !matched; ++j)
        if (!used[j] && f.lattice.size() == factors[j].size() && is_isomorphic(f.lattice, factors[j]))
          used[j] = matched = true;
      ok = ok && matched;
    }
    for (Element x = 0; x < P.size() && ok; ++x) ok = d.backward(d.forward[x]) == x;
    if (!ok && failures++ == 0) first = "trial " + std::to_string(trial) + " (" + desc + ")";
  }
  v.require(failures == 0, std::to_string(failures) + " failing products, first: " + first);
}

// 5. Property suites on every lattice up to 6 elements and 1000 random ones of size ≤ 10.
void property_suites_zero_violations(Verdict& v) {
  std::vector<std::size_t> const known = {1, 1, 1, 2, 5};
  for (int n = 1; n <= 5; ++n) {
    std::size_t const brute = oracle::count_lattices(n);
    std::size_t const fast = enumerate_lattices(static_cast<std::size_t>(n)).size();
    v.require(brute == known[n - 1] && fast == brute,
              "lattice count for n=" + std::to_string(n) + ": enumerate " + std::to_string(fast) + ", brute force " +
                  std::to_string(brute));
  }
  std::vector<Specimen> specimens;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const all = enumerate_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      specimens.push_back({"enumerated(" + std::to_string(n) + ", #" + std::to_string(i) + ")", all[i]});
  }
  for (std::size_t i = 0; i < 1000; ++i) specimens.push_back(random_specimen(1, i, 10));
  for (auto const& r : run_suites(specimens)) {
    v.require(r.checked == specimens.size(), r.property + " skipped specimens");
    v.require(r.failures == 0,
              r.property + ": " + r.detail + (r.counterexample ? " in " + r.counterexample->name : std::string()));
  }
}

// 6. Median identity agrees with the generated-sublattice definition per triple on suite 5(a).
void neutrality_oracle(Verdict& v) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto const& L : enumerate_lattices(n)) {
      if (auto f = check_neutrality_triples(L)) v.require(false, *f);
      if (auto f = check_neutrality_oracle(L)) v.require(false, *f);
    }
  for (auto const* name : {"M3", "N5"}) {
    auto const L = named(name);
    ElementSet const expected(L.size(), {L.bottom(), L.top()});
    v.require(neutral_elements(L) == expected, std::string("Neu(") + name + ") != {0,1}");
    v.require(neutral_elements_by_generation(L) == expected, std::string("normative Neu(") + name + ") != {0,1}");
  }
}

// 7. CLI determinism and fault injection.
struct Run {
  int code;
  std::string out;
};

Run cli(std::string const& args) {
  std::string const cmd = std::string("\"") + LATTICEKIT_CLI_PATH + "\" " + args + " 2>&1";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int const status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void cli_determinism(Verdict& v) {
  fs::path const dir = fs::temp_directory_path() / ("latticekit_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int k = 0;
  for (auto const& s : fixture_catalog()) {
    std::string const text = serialize_lattice(s.lattice);
    v.require(serialize_lattice(parse_lattice(text)) == text, s.name + ": library round trip not byte-stable");
    fs::path const file = dir / ("fixture_" + std::to_string(k++) + ".json");
    std::ofstream(file, std::ios::binary) << text;
    Run const emit = cli("validate --emit " + file.string());
    v.require(emit.code == 0 && emit.out == text, s.name + ": CLI round trip not byte-stable");
    Run const dec = cli("decompose --verify " + file.string());
    v.require(dec.code == 0, s.name + ": decompose --verify exited " + std::to_string(dec.code));
    Run const again = cli("decompose --verify --json " + file.string());
    Run const twice = cli("decompose --verify --json " + file.string());
    v.require(again.code == 0 && again.out == twice.out, s.name + ": decompose output not deterministic");
  }
  fs::path const n5 = dir / "n5.json";
  std::ofstream(n5, std::ios::binary) << serialize_lattice(named("N5"));
  Run const fault = cli("validate --inject-meet 0,1,1 " + n5.string());
  v.require(fault.code == 4, "fault-injected validate exited " + std::to_string(fault.code));
  v.require(fault.out.find("absorption") != std::string::npos && fault.out.find("(0, 1, 1)") != std::string::npos,
            "fault-injected validate did not name the absorption triple: " + fault.out);
  Run const check = cli("check --samples 0 --inject-fault");
  v.require(check.code == 4, "check --inject-fault exited " + std::to_string(check.code));
  v.require(check.out.find("absorption") != std::string::npos, "check --inject-fault did not report absorption");
  fs::remove_all(dir);
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "sp(2^2) presentation, size 7, not simple", 1.0, sp_presentation},
      {2, "sp(2^2), sp(2^3) subdirectly irreducible, atoms U_a", 30.0, sp_subdirectly_irreducible},
      {3, "co(2^2) indecomposable but not subdirectly irreducible", 1.0, co_contrast},
      {4, "decomposition round trip on 500 random products", 120.0, decomposition_round_trip},
      {5, "property suites on all lattices <= 6 and 1000 random <= 10", 300.0, property_suites_zero_violations},
      {6, "median identity vs generated sublattice on all lattices <= 6", 300.0, neutrality_oracle},
      {7, "CLI round trip, decompose --verify, fault injection", 300.0, cli_determinism},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    Verdict v;
    auto const start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (std::exception const& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs <= c.limit_seconds, "runtime exceeded the bound");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (v.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << secs << " s, limit "
         << c.limit_seconds << " s]";
    if (!v.ok()) line << " -- " << v.reason();
    std::cout << line.str() << std::endl;
    failed += !v.ok();
  }
  return failed == 0 ? 0 : 1;
}
