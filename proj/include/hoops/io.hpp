#pragma once

// Document formats and graph export. One JSON dialect for hoops,
// morphisms, certificates and sequence manifests; keys serialize
// sorted, so files are canonical and diffable.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hoops/enumeration.hpp"
#include "hoops/exact.hpp"
#include "json.hpp"

namespace hoops {

using json = nlohmann::json;

inline std::string serialize(const json& j) { return j.dump(2) + "\n"; }

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw argument_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw argument_error("cannot open " + path + " for writing");
  out << content;
}

inline json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw argument_error("malformed JSON");
  return j;
}

namespace detail {

inline std::vector<Elem> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw argument_error(std::string(what) + ": expected an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw argument_error(std::string(what) + ": expected integers");
    out.push_back(v.get<Elem>());
  }
  return out;
}

inline std::vector<Elem> int_matrix(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw argument_error(std::string(what) + ": expected " + std::to_string(n) + " rows");
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : j) {
    std::vector<Elem> r = int_array(row, what);
    if (static_cast<int>(r.size()) != n)
      throw argument_error(std::string(what) + ": ragged row");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

inline json matrix_json(const std::vector<Elem>& flat, int n) {
  json rows = json::array();
  for (Elem x = 0; x < n; ++x) {
    json row = json::array();
    for (Elem y = 0; y < n; ++y) row.push_back(flat[static_cast<size_t>(x) * n + y]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline json hoop_to_json(const Hoop& h) {
  const HoopData& d = h.data();
  json j;
  j["size"] = d.size;
  j["unit"] = d.unit;
  j["mul"] = detail::matrix_json(d.mul, d.size);
  j["imp"] = detail::matrix_json(d.imp, d.size);
  if (!d.labels.empty()) j["labels"] = d.labels;
  return j;
}

// Shape and range checks only; axiom checking is the caller's business.
inline HoopData hoop_data_from_json(const json& j) {
  if (!j.is_object()) throw argument_error("hoop: expected an object");
  for (const char* key : {"size", "unit", "mul", "imp"})
    if (!j.contains(key)) throw argument_error(std::string("hoop: missing field ") + key);
  if (!j["size"].is_number_integer() || !j["unit"].is_number_integer())
    throw argument_error("hoop: size and unit must be integers");
  HoopData d;
  d.size = j["size"].get<int>();
  if (d.size < 1) throw argument_error("hoop: size must be positive");
  d.unit = j["unit"].get<Elem>();
  d.mul = detail::int_matrix(j["mul"], d.size, "mul");
  d.imp = detail::int_matrix(j["imp"], d.size, "imp");
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != d.size)
      throw argument_error("hoop: labels must list one string per element");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw argument_error("hoop: labels must be strings");
      d.labels.push_back(l.get<std::string>());
    }
  }
  try {
    check_structure(d);
  } catch (const structural_error& e) {
    throw argument_error(std::string("hoop: ") + e.what());
  }
  return d;
}

inline Hoop hoop_from_json(const json& j) { return Hoop(hoop_data_from_json(j)); }

inline Hoop load_hoop(const std::string& path) {
  return hoop_from_json(parse_json(read_input(path)));
}

// morphism documents: {"map": [...]} with optional inline "domain" and
// "codomain" hoops; a bare integer array is accepted too
struct MorphismFile {
  std::vector<Elem> map;
  std::optional<Hoop> domain;
  std::optional<Hoop> codomain;
};

inline json morphism_to_json(std::span<const Elem> map, const Hoop* domain = nullptr,
                             const Hoop* codomain = nullptr) {
  json j;
  j["map"] = std::vector<Elem>(map.begin(), map.end());
  if (domain) j["domain"] = hoop_to_json(*domain);
  if (codomain) j["codomain"] = hoop_to_json(*codomain);
  return j;
}

inline MorphismFile morphism_from_json(const json& j) {
  MorphismFile m;
  if (j.is_array()) {
    m.map = detail::int_array(j, "map");
    return m;
  }
  if (!j.is_object() || !j.contains("map"))
    throw argument_error("morphism: expected an object with a map field");
  m.map = detail::int_array(j["map"], "map");
  if (j.contains("domain")) m.domain = hoop_from_json(j["domain"]);
  if (j.contains("codomain")) m.codomain = hoop_from_json(j["codomain"]);
  return m;
}

inline MorphismFile load_morphism(const std::string& path) {
  return morphism_from_json(parse_json(read_input(path)));
}

inline json certificate_to_json(const DecompositionCertificate& cert) {
  json j;
  j["association"] = cert.association == Association::left ? "left" : "right";
  j["input_hash"] = cert.input_hash;
  j["iso_to_input"] = cert.iso_to_input;
  json nodes = json::array();
  for (const auto& node : cert.tree.nodes) {
    json nj;
    if (node.is_leaf()) {
      nj["mv"] = node.mv;
    } else {
      nj["left"] = node.left;
      nj["right"] = node.right;
      nj["morphism"] = node.morphism;
    }
    nodes.push_back(std::move(nj));
  }
  j["tree"]["nodes"] = std::move(nodes);
  j["tree"]["root"] = cert.tree.root;
  return j;
}

inline DecompositionCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw argument_error("certificate: expected an object");
  for (const char* key : {"association", "input_hash", "iso_to_input", "tree"})
    if (!j.contains(key)) throw argument_error(std::string("certificate: missing ") + key);
  DecompositionCertificate cert;
  std::string assoc = j["association"].get<std::string>();
  if (assoc == "left")
    cert.association = Association::left;
  else if (assoc == "right")
    cert.association = Association::right;
  else
    throw argument_error("certificate: association must be left or right");
  if (!j["input_hash"].is_string()) throw argument_error("certificate: input_hash must be a string");
  cert.input_hash = j["input_hash"].get<std::string>();
  cert.iso_to_input = detail::int_array(j["iso_to_input"], "iso_to_input");
  const json& t = j["tree"];
  if (!t.is_object() || !t.contains("nodes") || !t.contains("root") || !t["nodes"].is_array())
    throw argument_error("certificate: tree needs nodes and root");
  for (const auto& nj : t["nodes"]) {
    CertTree::Node node;
    if (nj.contains("mv")) {
      node.mv = nj["mv"].get<int>();
      if (node.mv < 1) throw argument_error("certificate: leaf order must be positive");
    } else {
      if (!nj.contains("left") || !nj.contains("right") || !nj.contains("morphism"))
        throw argument_error("certificate: node needs left, right and morphism");
      node.left = nj["left"].get<int>();
      node.right = nj["right"].get<int>();
      node.morphism = detail::int_array(nj["morphism"], "morphism");
    }
    cert.tree.nodes.push_back(std::move(node));
  }
  cert.tree.root = t["root"].get<int>();
  return cert;
}

inline DecompositionCertificate load_certificate(const std::string& path) {
  return certificate_from_json(parse_json(read_input(path)));
}

// {"hoops": [...], "maps": [...]} where entries may be inline documents
// or file paths relative to the manifest
inline HoopSequence load_sequence_manifest(const std::string& path) {
  json j = parse_json(read_input(path));
  if (!j.is_object() || !j.contains("hoops") || !j.contains("maps"))
    throw argument_error("manifest: expected hoops and maps fields");
  std::filesystem::path base =
      path == "-" ? std::filesystem::current_path() : std::filesystem::path(path).parent_path();
  auto resolve = [&base](const std::string& p) {
    std::filesystem::path q(p);
    return q.is_absolute() ? q.string() : (base / q).string();
  };
  HoopSequence seq;
  for (const auto& entry : j["hoops"]) {
    if (entry.is_string())
      seq.hoops.push_back(load_hoop(resolve(entry.get<std::string>())));
    else
      seq.hoops.push_back(hoop_from_json(entry));
  }
  for (const auto& entry : j["maps"]) {
    if (entry.is_string())
      seq.maps.push_back(load_morphism(resolve(entry.get<std::string>())).map);
    else
      seq.maps.push_back(morphism_from_json(entry).map);
  }
  return seq;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Hasse diagram, edges upward, idempotents double-circled.
inline std::string to_dot(const Hoop& h) {
  std::ostringstream out;
  out << "digraph hoop {\n  rankdir=BT;\n";
  const auto& labels = h.data().labels;
  for (Elem x = 0; x < h.size(); ++x) {
    std::string name = labels.empty() ? std::to_string(x) : labels[static_cast<size_t>(x)];
    out << "  n" << x << " [label=\"" << detail::dot_escape(name) << "\", shape="
        << (is_idempotent(h, x) ? "doublecircle" : "circle") << "];\n";
  }
  for (const auto& [lo, hi] : h.order().hasse_edges)
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hoops
