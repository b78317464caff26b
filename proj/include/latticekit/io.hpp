#ifndef LATTICEKIT_IO_HPP
#define LATTICEKIT_IO_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "congruence.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "poset.hpp"

namespace latticekit {

inline constexpr char const* kSchema = "latticekit/1";

/// Elements in (height, index) order: the linear extension every serializer uses.
inline std::vector<Element> canonical_order(FiniteLattice const& L) {
  std::vector<Element> order(L.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return L.height(a) < L.height(b); });
  return order;
}

/// Reads {"elements": [...], "covers": [[lower, upper], ...]}. Structural
/// problems raise InputError; order problems surface from from_covers.
inline FinitePoset parse_poset(std::string const& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers") || !doc["elements"].is_array() ||
      !doc["covers"].is_array())
    throw InputError("expected an object with \"elements\" and \"covers\" arrays");
  FinitePoset p;
  std::map<std::string, Element> index;
  for (auto const& e : doc["elements"]) {
    if (!e.is_string()) throw InputError("element names must be strings");
    auto name = e.get<std::string>();
    if (!index.emplace(name, static_cast<Element>(p.labels.size())).second)
      throw InputError("duplicate element name " + name);
    p.labels.push_back(std::move(name));
  }
  for (auto const& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw InputError("each cover must be a pair of element names");
    auto a = index.find(c[0].get<std::string>());
    auto b = index.find(c[1].get<std::string>());
    if (a == index.end() || b == index.end()) throw InputError("cover references an unknown element");
    p.covers.emplace_back(a->second, b->second);
  }
  return p;
}

inline FiniteLattice parse_lattice(std::string const& text) { return from_covers(parse_poset(text)); }

inline nlohmann::json lattice_to_json(FiniteLattice const& L) {
  nlohmann::json elements = nlohmann::json::array();
  for (Element x : canonical_order(L)) elements.push_back(L.label(x));
  std::vector<std::pair<std::string, std::string>> covers;
  for (Element x = 0; x < L.size(); ++x)
    for (Element y : L.upper_covers(x)) covers.emplace_back(L.label(x), L.label(y));
  std::sort(covers.begin(), covers.end());
  nlohmann::json cj = nlohmann::json::array();
  for (auto& [a, b] : covers) cj.push_back({a, b});
  return {{"elements", elements}, {"covers", cj}};
}

/// Canonical interchange text: elements in canonical_order, covers sorted by
/// (lower label, upper label), one key per line.
inline std::string serialize_lattice(FiniteLattice const& L) {
  nlohmann::json const j = lattice_to_json(L);
  return "{\n  \"elements\": " + j["elements"].dump() + ",\n  \"covers\": " + j["covers"].dump() + "\n}\n";
}

/// Blocks as sorted lists of labels, the blocks themselves sorted.
inline nlohmann::json congruence_to_json(FiniteLattice const& L, Congruence const& c) {
  std::vector<std::vector<std::string>> blocks;
  for (auto const& b : c.blocks()) {
    std::vector<std::string> names;
    for (Element e : b) names.push_back(L.label(e));
    std::sort(names.begin(), names.end());
    blocks.push_back(std::move(names));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline nlohmann::json decomposition_to_json(Decomposition const& d) {
  FiniteLattice const& L = d.base;
  nlohmann::json atoms = nlohmann::json::array();
  nlohmann::json factors = nlohmann::json::array();
  for (std::size_t k = 0; k < d.factors.size(); ++k) {
    atoms.push_back(L.label(d.center_atoms[k]));
    factors.push_back({{"center_atom", L.label(d.center_atoms[k])}, {"lattice", lattice_to_json(d.factors[k].lattice)}});
  }
  nlohmann::json forward = nlohmann::json::array();
  for (Element x : canonical_order(L)) {
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t k = 0; k < d.factors.size(); ++k) comps.push_back(d.factors[k].lattice.label(d.forward[x][k]));
    forward.push_back({{"element", L.label(x)}, {"components", comps}});
  }
  return {{"schema", kSchema}, {"center_atoms", atoms}, {"factors", factors}, {"forward", forward}};
}

/// Hasse diagram as a DOT digraph: edges are covers pointing upward, nodes
/// grouped by height with the bottom at rank 0.
inline std::string render_dot(FiniteLattice const& L) {
  auto q = [](std::string const& s) { return nlohmann::json(s).dump(); };
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::map<std::uint32_t, std::vector<Element>> ranks;
  for (Element x : canonical_order(L)) ranks[L.height(x)].push_back(x);
  for (auto const& [h, xs] : ranks) {
    out += "  { rank=same;";
    for (Element x : xs) out += " " + q(L.label(x)) + ";";
    out += " }  // rank " + std::to_string(h) + "\n";
  }
  for (Element x : canonical_order(L))
    for (Element y : L.upper_covers(x)) out += "  " + q(L.label(x)) + " -> " + q(L.label(y)) + ";\n";
  return out + "}\n";
}

}  // namespace latticekit

#endif  // LATTICEKIT_IO_HPP
