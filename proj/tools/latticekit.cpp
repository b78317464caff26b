// latticekit: command-line front end for the finite lattice library.
//
// Exit codes: 0 ok, 2 input error, 3 not a lattice, 4 internal invariant
// violation, 5 property-suite failure.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <latticekit/check.hpp>
#include <latticekit/congruence.hpp>
#include <latticekit/constructions.hpp>
#include <latticekit/decomposition.hpp>
#include <latticekit/descriptor.hpp>
#include <latticekit/io.hpp>
#include <latticekit/structure.hpp>

namespace lk = latticekit;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kInputError = 2, kNotALattice = 3, kIntegrity = 4, kPropertyFailure = 5 };

/// Terminates a command with an exit code after its message has been printed.
struct ExitWith {
  int code;
};

std::string read_input(std::string const& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lk::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(std::string const& path, std::string const& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lk::InputError("cannot write " + path);
  out << text;
}

lk::FiniteLattice load(std::string const& path) { return lk::parse_lattice(read_input(path)); }

std::string label_list(lk::FiniteLattice const& L, lk::ElementSet const& s) {
  std::string out;
  for (lk::Element x : lk::canonical_order(L))
    if (s.contains(x)) out += (out.empty() ? "" : " ") + L.label(x);
  return out.empty() ? "(none)" : out;
}

json label_array(lk::FiniteLattice const& L, lk::ElementSet const& s) {
  json a = json::array();
  for (lk::Element x : lk::canonical_order(L))
    if (s.contains(x)) a.push_back(L.label(x));
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// validate

struct ValidateOptions {
  std::string file;
  std::string inject_meet;
  bool emit = false;
};

int cmd_validate(ValidateOptions const& o) {
  lk::FiniteLattice L = load(o.file);
  if (!o.inject_meet.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(o.inject_meet);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 3) throw lk::InputError("--inject-meet expects x,y,z");
    lk::Element idx[3];
    for (int i = 0; i < 3; ++i)
      if ((idx[i] = L.find(parts[i])) == lk::kNoElement) throw lk::InputError("unknown element " + parts[i]);
    L = lk::with_corrupted_meet(L, idx[0], idx[1], idx[2]);
  }
  if (auto v = lk::validate_lattice(L)) {
    std::cout << "invalid: " << v->describe(L) << "\n";
    return kIntegrity;
  }
  if (o.emit)
    std::cout << lk::serialize_lattice(L);
  else
    std::cout << "ok: lattice with " << L.size() << " elements\n";
  return kOk;
}

// analyze

int cmd_analyze(std::string const& file, bool as_json) {
  lk::FiniteLattice const L = load(file);
  auto const J = lk::join_irreducibles(L);
  auto const M = lk::meet_irreducibles(L);
  auto const A = lk::atoms(L);
  auto const neu = lk::neutral_elements(L);
  auto const cen = lk::center(L);
  auto const dist = lk::distributivity_counterexample(L);
  auto const mod = lk::modularity_counterexample(L);
  auto const sep = lk::separativity_counterexample(L);
  bool const atomistic = lk::is_atomistic(L);
  bool const bispatial = lk::is_finitely_bispatial(L);
  bool const indecomposable = lk::is_directly_indecomposable(L, cen);
  std::optional<bool> simple, si;
  std::optional<lk::Congruence> monolith;
  if (L.size() >= 2) {
    simple = lk::is_simple(L);
    monolith = lk::is_subdirectly_irreducible(L);
    si = monolith.has_value();
  }
  auto triple = [&](lk::TripleWitness const& t) {
    return json::array({L.label(t.x), L.label(t.y), L.label(t.z)});
  };

  if (as_json) {
    json complements = json::object();
    for (lk::Element x : lk::canonical_order(L))
      if (cen.contains(x)) complements[L.label(x)] = L.label(cen.complement[x]);
    json j = {{"schema", lk::kSchema},
              {"size", L.size()},
              {"join_irreducibles", label_array(L, J)},
              {"meet_irreducibles", label_array(L, M)},
              {"atoms", label_array(L, A)},
              {"neutral", label_array(L, neu)},
              {"center", label_array(L, cen.elements)},
              {"complements", complements},
              {"distributive", !dist},
              {"modular", !mod},
              {"atomistic", atomistic},
              {"separative", !sep},
              {"finitely_bispatial", bispatial},
              {"directly_indecomposable", indecomposable},
              {"simple", simple ? json(*simple) : json(nullptr)},
              {"subdirectly_irreducible", si ? json(*si) : json(nullptr)},
              {"monolith", monolith ? lk::congruence_to_json(L, *monolith) : json(nullptr)}};
    if (dist) j["distributivity_witness"] = triple(*dist);
    if (mod) j["modularity_witness"] = triple(*mod);
    if (sep) j["separativity_witness"] = json::array({L.label(sep->x), L.label(sep->y)});
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  std::cout << "size: " << L.size() << "\n"
            << "join-irreducibles: " << label_list(L, J) << "\n"
            << "meet-irreducibles: " << label_list(L, M) << "\n"
            << "atoms: " << label_list(L, A) << "\n"
            << "neutral: " << label_list(L, neu) << "\n"
            << "center:";
  for (lk::Element x : lk::canonical_order(L))
    if (cen.contains(x)) std::cout << " " << L.label(x) << " (complement " << L.label(cen.complement[x]) << ")";
  std::cout << "\n";
  auto witness3 = [&](std::optional<lk::TripleWitness> const& t) {
    return t ? "no (" + L.label(t->x) + ", " + L.label(t->y) + ", " + L.label(t->z) + ")" : std::string("yes");
  };
  std::cout << "distributive: " << witness3(dist) << "\n"
            << "modular: " << witness3(mod) << "\n"
            << "atomistic: " << yes_no(atomistic) << "\n"
            << "separative: "
            << (sep ? "no (" + L.label(sep->x) + ", " + L.label(sep->y) + ")" : std::string("yes")) << "\n"
            << "finitely-bispatial: " << yes_no(bispatial) << "\n"
            << "directly-indecomposable: " << yes_no(indecomposable) << "\n"
            << "simple: " << (simple ? yes_no(*simple) : "n/a") << "\n"
            << "subdirectly-irreducible: " << (si ? yes_no(*si) : "n/a") << "\n";
  if (monolith) std::cout << "monolith: " << lk::congruence_to_json(L, *monolith).dump() << "\n";
  return kOk;
}

// decompose

int cmd_decompose(std::string const& file, std::string const& out_dir, bool verify, bool as_json) {
  lk::FiniteLattice const L = load(file);
  lk::Decomposition const d = lk::decompose(L);
  if (verify && !lk::verify_decomposition(d)) {
    std::cout << "verify: forward map is not an isomorphism onto the product of the factors\n";
    return kIntegrity;
  }
  json const summary = lk::decomposition_to_json(d);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < d.factors.size(); ++k)
      write_output((std::filesystem::path(out_dir) / ("factor_" + std::to_string(k) + ".json")).string(),
                   lk::serialize_lattice(d.factors[k].lattice));
    write_output((std::filesystem::path(out_dir) / "summary.json").string(), summary.dump(2) + "\n");
  }
  if (as_json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << "factors: " << d.factors.size() << "\n";
    for (std::size_t k = 0; k < d.factors.size(); ++k)
      std::cout << "  [0, " << L.label(d.center_atoms[k]) << "]: " << d.factors[k].lattice.size() << " elements\n";
    if (verify) std::cout << "verify: ok\n";
  }
  return kOk;
}

// congruences

int cmd_congruences(std::string const& file, bool as_json) {
  lk::FiniteLattice const L = load(file);
  auto const all = lk::congruences_by_principal_joins(L);
  std::optional<lk::Congruence> monolith;
  if (L.size() >= 2) monolith = lk::is_subdirectly_irreducible(L);
  if (as_json) {
    json list = json::array();
    for (auto const& c : all) list.push_back(lk::congruence_to_json(L, c));
    std::cout << json{{"schema", lk::kSchema},
                      {"congruences", list},
                      {"monolith", monolith ? lk::congruence_to_json(L, *monolith) : json(nullptr)}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "congruences: " << all.size() << "\n";
  for (auto const& c : all) std::cout << "  " << lk::congruence_to_json(L, c).dump() << "\n";
  std::cout << "monolith: " << (monolith ? lk::congruence_to_json(L, *monolith).dump() : std::string("none"))
            << "\n";
  return kOk;
}

// check

struct CheckOptions {
  std::size_t max_size = 10;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t enumerate = 0;
  bool inject_fault = false;
};

int cmd_check(CheckOptions const& o) {
  std::vector<lk::Specimen> specimens = lk::fixture_catalog();
  if (o.inject_fault)
    for (auto& s : specimens)
      if (s.lattice.size() >= 2)
        s.lattice = lk::with_corrupted_meet(s.lattice, s.lattice.bottom(), s.lattice.top(), s.lattice.top());
  for (std::size_t n = 1; n <= o.enumerate; ++n) {
    auto const all = lk::enumerate_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      specimens.push_back({"enumerated(" + std::to_string(n) + ", #" + std::to_string(i) + ")", all[i]});
  }
  for (std::size_t i = 0; i < o.samples; ++i) specimens.push_back(lk::random_specimen(o.seed, i, o.max_size));
  // Smallest specimens first, so a reported counterexample is a minimal one.
  std::stable_sort(specimens.begin(), specimens.end(),
                   [](lk::Specimen const& a, lk::Specimen const& b) { return a.lattice.size() < b.lattice.size(); });

  auto const reports = lk::run_suites(specimens);
  int code = kOk;
  for (auto const& r : reports) {
    std::cout << (r.failures ? "FAIL " : "PASS ") << r.property << " (" << r.checked << " lattices)";
    if (r.failures) std::cout << ": " << r.detail << " in " << r.counterexample->name;
    std::cout << "\n";
    if (r.failures) {
      std::cout << lk::serialize_lattice(r.counterexample->lattice);
      int const this_code = r.property == "lattice-tables" ? kIntegrity : kPropertyFailure;
      if (code == kOk || this_code == kIntegrity) code = this_code;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latticekit: finite lattice structure, decomposition and congruence analysis"};
  app.require_subcommand(1);

  ValidateOptions validate_opts;
  auto* validate = app.add_subcommand("validate", "Check that a file describes a lattice");
  validate->add_option("file", validate_opts.file, "Interchange JSON file ('-' for stdin)")->required();
  validate->add_option("--inject-meet", validate_opts.inject_meet,
                       "Fault injection: overwrite meet(x,y) with z before validating (x,y,z labels)");
  validate->add_flag("--emit", validate_opts.emit, "Print the canonical interchange form on success");

  std::string file;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "Report irreducibles, neutral and central elements, and flags");
  analyze->add_option("file", file, "Interchange JSON file")->required();
  analyze->add_flag("--json", as_json, "Emit JSON");

  std::string out_dir;
  bool verify = false;
  auto* decompose = app.add_subcommand("decompose", "Split into directly indecomposable factors");
  decompose->add_option("file", file, "Interchange JSON file")->required();
  decompose->add_option("--out-dir", out_dir, "Write factor_K.json files and summary.json here");
  decompose->add_flag("--verify", verify, "Check the forward map against the explicit product");
  decompose->add_flag("--json", as_json, "Print the summary as JSON");

  auto* congruences = app.add_subcommand("congruences", "List congruences and the monolith");
  congruences->add_option("file", file, "Interchange JSON file")->required();
  congruences->add_flag("--json", as_json, "Emit JSON");

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Run the structural property suites");
  check->add_option("--max-size", check_opts.max_size, "Maximum size of the random lattices")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  check->add_option("--samples", check_opts.samples, "Number of random lattices (0: fixtures only)")
      ->capture_default_str();
  check->add_option("--seed", check_opts.seed, "Seed for the random lattices")->capture_default_str();
  check->add_option("--enumerate", check_opts.enumerate, "Also check every lattice up to this size")
      ->capture_default_str()
      ->check(CLI::Range(0, 8));
  check->add_flag("--inject-fault", check_opts.inject_fault, "Corrupt the fixture meet tables (fault injection)");

  std::string descriptor, out_file;
  auto* generate = app.add_subcommand("generate", "Write a family member as interchange JSON");
  generate->add_option("descriptor", descriptor, "boolean:N, chain:N, M3, N5, sp(D), co(D), product(D,D)")
      ->required();
  generate->add_option("--out", out_file, "Output file (default stdout)");

  bool dot = true;
  auto* render = app.add_subcommand("render", "Render the Hasse diagram");
  render->add_option("file", file, "Interchange JSON file")->required();
  render->add_flag("--dot", dot, "DOT output (the only format)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(validate_opts);
    if (*analyze) return cmd_analyze(file, as_json);
    if (*decompose) return cmd_decompose(file, out_dir, verify, as_json);
    if (*congruences) return cmd_congruences(file, as_json);
    if (*check) return cmd_check(check_opts);
    if (*generate) {
      write_output(out_file, lk::serialize_lattice(lk::from_descriptor(descriptor)));
      return kOk;
    }
    if (*render) {
      std::cout << lk::render_dot(load(file));
      return kOk;
    }
  } catch (lk::NotALattice const& e) {
    std::cerr << "not a lattice: " << e.what() << "\n";
    return kNotALattice;
  } catch (lk::CyclicCovers const& e) {
    std::cerr << "not a lattice: " << e.what() << "\n";
    return kNotALattice;
  } catch (lk::NoBounds const& e) {
    std::cerr << "not a lattice: " << e.what() << "\n";
    return kNotALattice;
  } catch (lk::IntegrityError const& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kIntegrity;
  } catch (lk::LatticeError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (std::filesystem::filesystem_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
