#pragma once

// Serialization: JSON documents for idempotent sets, graphs and reports,
// plus DOT and tab-separated edge-list exports.

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "idemgraph/report.hpp"

namespace idemgraph {

using json = nlohmann::ordered_json;

inline json field_to_json(const FieldSpec& f) {
  return {{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}, {"order", f.order()}};
}

inline Field field_from_json(const json& j) {
  return make_field(j.at("p").get<std::uint64_t>(), j.at("k").get<std::int64_t>(),
                    j.at("modulus").get<std::vector<Rep>>());
}

inline json matrix_to_json(const Mat2& m) {
  return json::array({json::array({m.a.rep(), m.b.rep()}), json::array({m.c.rep(), m.d.rep()})});
}

inline Mat2 matrix_from_json(const FieldSpec& f, const json& j) {
  return make_mat(f, j.at(0).at(0).get<Rep>(), j.at(0).at(1).get<Rep>(), j.at(1).at(0).get<Rep>(),
                  j.at(1).at(1).get<Rep>());
}

inline json to_json(const IdempotentSet& set) {
  json sizes = json::object();
  const auto counts = set.class_sizes();
  for (auto c : kAllClasses) sizes[std::string(to_string(c))] = counts[static_cast<std::size_t>(c)];
  json items = json::array();
  for (std::size_t i = 0; i < set.all.size(); ++i)
    items.push_back({{"id", set.all[i].id()},
                     {"matrix", matrix_to_json(set.all[i])},
                     {"class", to_string(set.classes[i])}});
  return {{"field", field_to_json(*set.field)},
          {"count", set.all.size()},
          {"class_sizes", sizes},
          {"idempotents", items}};
}

inline IdempotentSet idempotent_set_from_json(const json& j) {
  IdempotentSet set{field_from_json(j.at("field")), {}, {}};
  for (const auto& item : j.at("idempotents")) {
    set.all.push_back(matrix_from_json(*set.field, item.at("matrix")));
    const auto cls = class_from_string(item.at("class").get<std::string>());
    if (!cls) throw std::invalid_argument("unknown class " + item.at("class").dump());
    set.classes.push_back(*cls);
  }
  return set;
}

inline json to_json(const IdemGraph& g) {
  json vertices = json::array();
  for (const auto& m : g.vertices)
    vertices.push_back({{"id", m.id()}, {"matrix", matrix_to_json(m)}, {"class", to_string(classify(m))}});
  json edges = json::array();
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.adj[u])
      if (u < v) edges.push_back(json::array({g.vertices[u].id(), g.vertices[v].id()}));
  return {{"field", field_to_json(*g.field)},
          {"kind", to_string(g.kind)},
          {"vertices", vertices},
          {"edges", edges}};
}

namespace detail {

inline json optional_to_json(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

inline std::optional<std::uint64_t> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

inline json rational_to_json(const Rational& r) { return {{"numerator", r.num()}, {"denominator", r.den()}}; }

inline Rational rational_from_json(const json& j) {
  return {j.at("numerator").get<std::int64_t>(), j.at("denominator").get<std::int64_t>()};
}

inline ClaimStatus status_from_string(const std::string& s) {
  for (auto st : {ClaimStatus::Pass, ClaimStatus::Fail, ClaimStatus::Discrepancy, ClaimStatus::Skipped})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown claim status " + s);
}

}  // namespace detail

/// Report document. `infinite` diameter or girth is encoded as null; every
/// claim carries a `passed` boolean alongside its status.
inline json to_json(const GraphReport& r) {
  using detail::optional_to_json;
  using detail::rational_to_json;
  json sizes = json::object();
  for (auto c : kAllClasses) sizes[std::string(to_string(c))] = r.class_sizes[static_cast<std::size_t>(c)];
  json claims = json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"status", to_string(c.status)},
                      {"passed", c.status != ClaimStatus::Fail},
                      {"note", c.note}});
  return {
      {"p", r.p},
      {"k", r.k},
      {"modulus", r.modulus},
      {"q", r.q},
      {"bruteforce_used", r.bruteforce_used},
      {"idempotent_count", r.idempotent_count},
      {"class_sizes", sizes},
      {"vertex_count", r.vertex_count},
      {"edge_count", r.edge_count},
      {"degree_min", r.degree_min},
      {"degree_max", r.degree_max},
      {"is_regular", r.is_regular},
      {"diameter", optional_to_json(r.diameter)},
      {"girth", optional_to_json(r.girth)},
      {"component_count", r.component_count},
      {"wiener", r.wiener},
      {"harary", rational_to_json(r.harary)},
      {"ir_component_count", r.ir_component_count},
      {"ir_edge_count", r.ir_edge_count},
      {"expected",
       {{"idempotent_count", r.expected_idempotent_count},
        {"vertex_count", r.expected_vertex_count},
        {"degree", r.expected_degree},
        {"edge_count", r.expected_edge_count},
        {"diameter", r.expected_diameter},
        {"girth", r.expected_girth},
        {"wiener", r.expected_wiener},
        {"harary", rational_to_json(r.expected_harary)},
        {"ir_components", r.expected_ir_components}}},
      {"all_passed", r.all_passed()},
      {"claims", claims},
  };
}

inline GraphReport report_from_json(const json& j) {
  using detail::optional_from_json;
  using detail::rational_from_json;
  GraphReport r;
  r.p = j.at("p").get<std::uint64_t>();
  r.k = j.at("k").get<std::uint64_t>();
  r.modulus = j.at("modulus").get<std::vector<Rep>>();
  r.q = j.at("q").get<std::uint64_t>();
  r.bruteforce_used = j.at("bruteforce_used").get<bool>();
  r.idempotent_count = j.at("idempotent_count").get<std::uint64_t>();
  for (auto c : kAllClasses)
    r.class_sizes[static_cast<std::size_t>(c)] = j.at("class_sizes").at(std::string(to_string(c))).get<std::uint64_t>();
  r.vertex_count = j.at("vertex_count").get<std::uint64_t>();
  r.edge_count = j.at("edge_count").get<std::uint64_t>();
  r.degree_min = j.at("degree_min").get<std::uint64_t>();
  r.degree_max = j.at("degree_max").get<std::uint64_t>();
  r.is_regular = j.at("is_regular").get<bool>();
  r.diameter = optional_from_json(j.at("diameter"));
  r.girth = optional_from_json(j.at("girth"));
  r.component_count = j.at("component_count").get<std::uint64_t>();
  r.wiener = j.at("wiener").get<std::uint64_t>();
  r.harary = rational_from_json(j.at("harary"));
  r.ir_component_count = j.at("ir_component_count").get<std::uint64_t>();
  r.ir_edge_count = j.at("ir_edge_count").get<std::uint64_t>();
  const auto& e = j.at("expected");
  r.expected_idempotent_count = e.at("idempotent_count").get<std::uint64_t>();
  r.expected_vertex_count = e.at("vertex_count").get<std::uint64_t>();
  r.expected_degree = e.at("degree").get<std::uint64_t>();
  r.expected_edge_count = e.at("edge_count").get<std::uint64_t>();
  r.expected_diameter = e.at("diameter").get<std::uint64_t>();
  r.expected_girth = e.at("girth").get<std::uint64_t>();
  r.expected_wiener = e.at("wiener").get<std::uint64_t>();
  r.expected_harary = rational_from_json(e.at("harary"));
  r.expected_ir_components = e.at("ir_components").get<std::uint64_t>();
  for (const auto& c : j.at("claims"))
    r.claims.push_back({c.at("name").get<std::string>(), c.at("statement").get<std::string>(),
                        c.at("computed").get<std::string>(), c.at("expected").get<std::string>(),
                        detail::status_from_string(c.at("status").get<std::string>()),
                        c.at("note").get<std::string>()});
  return r;
}

/// Header "# q=<q> kind=<IR|GID>", then one "id\tid" line per edge with the
/// smaller canonical id first, in ascending order.
inline void write_edgelist(std::ostream& out, const IdemGraph& g) {
  out << "# q=" << g.field->order() << " kind=" << to_string(g.kind) << '\n';
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.adj[u])
      if (u < v) out << g.vertices[u].id() << '\t' << g.vertices[v].id() << '\n';
}

inline void write_dot(std::ostream& out, const IdemGraph& g) {
  out << "graph " << to_string(g.kind) << "_q" << g.field->order() << " {\n";
  for (const auto& m : g.vertices) out << "  n" << m.id() << " [label=\"" << to_string(m) << "\"];\n";
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.adj[u])
      if (u < v) out << "  n" << g.vertices[u].id() << " -- n" << g.vertices[v].id() << ";\n";
  out << "}\n";
}

}  // namespace idemgraph
