// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ordua/error.hpp"
#include "ordua/morphism.hpp"
#include "ordua/poset.hpp"
#include "ordua/space.hpp"
#include "ordua/structure.hpp"

namespace ordua {

using nlohmann::json;

struct StructureDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  std::optional<std::string> kind_hint;
};

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, origin + ": " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
}

inline const json& field(const json& obj, const char* key, const std::string& origin) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(Errc::schema_error, origin + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) fail(Errc::schema_error, where + " must be a string");
  return v.get<std::string>();
}

}  // namespace detail

inline StructureDocument parse_document(const std::string& text, const std::string& origin = "<input>") {
  json j = detail::parse_json(text, origin);
  if (!j.is_object()) fail(Errc::schema_error, origin + ": top level must be an object");
  StructureDocument doc;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key != "elements" && key != "leq" && key != "kind-hint" && key != "name") {
      fail(Errc::schema_error, origin + ": unknown field \"" + key + "\"");
    }
  }
  const json& elements = detail::field(j, "elements", origin);
  if (!elements.is_array()) fail(Errc::schema_error, origin + ": \"elements\" must be an array");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    doc.elements.push_back(detail::string_at(elements[i], origin + ": elements[" + std::to_string(i) + "]"));
  }
  const json& leq = detail::field(j, "leq", origin);
  if (!leq.is_array()) fail(Errc::schema_error, origin + ": \"leq\" must be an array");
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const std::string where = origin + ": leq[" + std::to_string(i) + "]";
    if (!leq[i].is_array() || leq[i].size() != 2) fail(Errc::schema_error, where + " must be a pair");
    doc.leq.emplace_back(detail::string_at(leq[i][0], where + "[0]"), detail::string_at(leq[i][1], where + "[1]"));
  }
  if (auto it = j.find("kind-hint"); it != j.end()) doc.kind_hint = detail::string_at(*it, origin + ": kind-hint");
  if (auto it = j.find("name"); it != j.end()) doc.name = detail::string_at(*it, origin + ": name");
  return doc;
}

inline Structure structure_of(const StructureDocument& doc, const std::string& origin = "<input>") {
  std::optional<Kind> hint;
  if (doc.kind_hint) {
    hint = parse_kind(*doc.kind_hint);
    if (!hint) fail(Errc::schema_error, origin + ": unknown kind-hint \"" + *doc.kind_hint + "\"");
  }
  Structure s = classify(validate_poset(doc.elements, doc.leq));
  if (hint && *hint != s.kind()) {
    fail(Errc::kind_hint_mismatch, origin + ": declared " + std::string(kind_name(*hint)) + " but the order is a " +
                                       std::string(kind_name(s.kind())));
  }
  return s;
}

inline Structure load_structure(const std::string& path) {
  return structure_of(parse_document(detail::read_file(path), path), path);
}

inline std::string document_name(const std::string& path) {
  auto doc = parse_document(detail::read_file(path), path);
  if (!doc.name.empty()) return doc.name;
  return std::filesystem::path(path).stem().string();
}

/// Canonical document: labels sorted, Hasse pairs sorted, kind recorded as the hint.
inline std::string export_document(const Structure& s, const std::string& name = "") {
  std::vector<std::string> labels = s.labels();
  std::sort(labels.begin(), labels.end());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [a, b] : s.base().leq().covers()) pairs.emplace_back(s.label(a), s.label(b));
  std::sort(pairs.begin(), pairs.end());
  json j = json::object();
  j["elements"] = labels;
  json leq = json::array();
  for (const auto& [a, b] : pairs) leq.push_back({a, b});
  j["leq"] = std::move(leq);
  j["kind-hint"] = std::string(kind_name(s.kind()));
  if (!name.empty()) j["name"] = name;
  return j.dump(2) + "\n";
}

/// Morphism file: {"source": path, "target": path, "map": {label: label}, "kind": string}. Paths are
/// resolved against the morphism file's directory.
inline StructureMorphism load_morphism(const std::string& path) {
  const std::string text = detail::read_file(path);
  json j = detail::parse_json(text, path);
  if (!j.is_object()) fail(Errc::schema_error, path + ": top level must be an object");
  const auto dir = std::filesystem::path(path).parent_path();
  auto resolve = [&](const char* key) {
    std::filesystem::path p = detail::string_at(detail::field(j, key, path), path + ": " + key);
    if (p.is_relative()) p = dir / p;
    return share(load_structure(p.string()));
  };
  StructurePtr src = resolve("source");
  StructurePtr tgt = resolve("target");
  std::string kind_text = detail::string_at(detail::field(j, "kind", path), path + ": kind");
  auto kind = parse_morphism_kind(kind_text);
  if (!kind) fail(Errc::schema_error, path + ": unknown morphism kind \"" + kind_text + "\"");
  const json& m = detail::field(j, "map", path);
  if (!m.is_object()) fail(Errc::schema_error, path + ": \"map\" must be an object");
  std::vector<std::size_t> map(src->size(), 0);
  std::vector<bool> seen(src->size(), false);
  for (auto it = m.begin(); it != m.end(); ++it) {
    auto from = src->base().index_of(it.key());
    if (!from) fail(Errc::unknown_label, path + ": map key '" + it.key() + "'");
    auto to = tgt->base().index_of(detail::string_at(it.value(), path + ": map[" + it.key() + "]"));
    if (!to) fail(Errc::unknown_label, path + ": map value for '" + it.key() + "'");
    map[*from] = *to;
    seen[*from] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) fail(Errc::schema_error, path + ": map is missing '" + src->label(i) + "'");
  }
  return {src, tgt, std::move(map), *kind};
}

namespace detail {

inline std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string dot_order(const std::string& name, const std::vector<std::string>& labels, const Relation& r,
                             const std::vector<std::string>& legend) {
  std::string out = "digraph " + dot_id(name) + " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& l : labels) out += "  " + dot_id(l) + ";\n";
  for (auto [a, b] : r.covers()) out += "  " + dot_id(labels[a]) + " -> " + dot_id(labels[b]) + ";\n";
  if (!legend.empty()) {
    std::string text;
    for (const auto& line : legend) text += line + "\\l";
    out += "  legend [shape=note, label=" + dot_id(text) + "];\n";
  }
  out += "}\n";
  return out;
}

inline std::vector<std::string> neighbourhood_legend(const FiniteSpace& s) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < s.size(); ++x) out.push_back("U(" + s.label(x) + ") = " + s.format(s.neighbourhood(x)));
  return out;
}

}  // namespace detail

inline std::string export_dot(const Poset& p, const std::string& name = "poset") {
  return detail::dot_order(name, p.labels(), p.leq(), {});
}

inline std::string export_dot(const Structure& s, const std::string& name = "structure") {
  return export_dot(s.base(), name);
}

/// Points with specialization edges and the minimal open neighbourhoods as a legend.
inline std::string export_dot(const FiniteSpace& s, const std::string& name = "space") {
  return detail::dot_order(name, s.labels(), specialization_preorder(s), detail::neighbourhood_legend(s));
}

inline std::string export_dot(const PreorderedSpace& ps, const std::string& name = "space") {
  return detail::dot_order(name, ps.space.labels(), ps.order, detail::neighbourhood_legend(ps.space));
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write '" + path + "'");
  out << content;
  if (!out) fail(Errc::io_error, "write to '" + path + "' failed");
}

}  // namespace ordua
