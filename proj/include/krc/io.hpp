#pragma once

// JSON and DOT serialization.
//
//   pattern: {"n": 3, "r": 2, "s": 1, "rows": [[a_{1,r}, ..., a_{r,r}], ..., [.., a_{r,n}]]}
//   tensor:  {"factors": [pattern, ...]}
//   graph:   {"vertices": [...], "edges": [[source, color, target], ...]}

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "krc/crystal.hpp"
#include "krc/error.hpp"
#include "krc/pattern.hpp"
#include "krc/perfect.hpp"
#include "krc/tensor.hpp"

namespace krc {

using Json = nlohmann::ordered_json;

inline Json to_json(const Pattern& a) {
  const auto& k = a.params();
  return Json{{"n", k.n}, {"r", k.r}, {"s", k.s}, {"rows", a.rows()}};
}

inline Json to_json(const TensorElement& x) {
  Json factors = Json::array();
  for (const auto& a : x) factors.push_back(to_json(a));
  return Json{{"factors", std::move(factors)}};
}

inline Json to_json(const DominantWeight& w) { return Json(w.coeffs); }

namespace detail {

inline int json_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("pattern JSON needs an integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

}  // namespace detail

/// Parses and validates a pattern.
inline Pattern pattern_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("pattern JSON must be an object");
  const auto k = make_params(detail::json_int(j, "n"), detail::json_int(j, "r"),
                             detail::json_int(j, "s"));
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    throw ParseError("pattern JSON needs an array field \"rows\"");
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("rows")) {
    if (!row.is_array()) throw ParseError("pattern rows must be arrays");
    std::vector<int> out;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("pattern entries must be integers");
      out.push_back(v.get<int>());
    }
    rows.push_back(std::move(out));
  }
  return validate_pattern(rows, k);
}

/// Accepts {"factors": [...]}, a bare array of patterns, or a single pattern.
inline TensorElement tensor_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("factors")) list = &j.at("factors");
  TensorElement out;
  if (list->is_array()) {
    for (const auto& p : *list) out.push_back(pattern_from_json(p));
  } else {
    out.push_back(pattern_from_json(*list));
  }
  if (out.empty()) throw ParseError("tensor JSON has no factors");
  return out;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <class V>
Json graph_to_json(const CrystalGraph<V>& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back(to_json(v));
  Json edges = Json::array();
  for (const auto& ed : g.edges) edges.push_back(Json::array({ed.source, ed.color, ed.target}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Vertices are named v<index> and labeled by their pattern(s); edges carry
/// the color as label.
template <class V>
std::string graph_to_dot(const CrystalGraph<V>& g, const std::string& name = "crystal") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << detail::dot_escape(to_string(g.vertices[i])) << "\"];\n";
  }
  for (const auto& ed : g.edges) {
    os << "  v" << ed.source << " -> v" << ed.target << " [label=\"" << ed.color << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

/// "a,b,c" -> {a, b, c}.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw ParseError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

/// "n,r,s" -> KRParams.
inline KRParams parse_params(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 3) throw ParseError("expected n,r,s but got '" + text + "'");
  return make_params(v[0], v[1], v[2]);
}

}  // namespace krc
