#pragma once

// Full verification run for one field: enumerates Id(R) both ways, builds
// both graphs, and checks every structural statement and closed form,
// collecting results as data.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idemgraph/audit.hpp"
#include "idemgraph/claim.hpp"
#include "idemgraph/graph.hpp"

namespace idemgraph {

struct GraphReport {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::vector<Rep> modulus;
  std::uint64_t q = 0;
  bool bruteforce_used = false;

  std::uint64_t idempotent_count = 0;
  std::array<std::uint64_t, 8> class_sizes{};

  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t degree_min = 0;
  std::uint64_t degree_max = 0;
  bool is_regular = false;
  std::optional<std::uint64_t> diameter;  // nullopt: infinite
  std::optional<std::uint64_t> girth;     // nullopt: infinite
  std::uint64_t component_count = 0;
  std::uint64_t wiener = 0;
  Rational harary;
  std::uint64_t ir_component_count = 0;
  std::uint64_t ir_edge_count = 0;

  std::uint64_t expected_idempotent_count = 0;
  std::uint64_t expected_vertex_count = 0;
  std::uint64_t expected_degree = 0;
  std::uint64_t expected_edge_count = 0;
  std::uint64_t expected_diameter = 2;
  std::uint64_t expected_girth = 0;
  std::uint64_t expected_wiener = 0;
  Rational expected_harary;
  std::uint64_t expected_ir_components = 0;

  std::vector<Claim> claims;

  bool all_passed() const {
    return std::none_of(claims.begin(), claims.end(),
                        [](const Claim& c) { return c.status == ClaimStatus::Fail; });
  }

  const Claim* find(std::string_view name) const {
    for (const auto& c : claims)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool operator==(const GraphReport&) const = default;
};

// Closed forms in the field order q.
namespace closed_form {

constexpr std::uint64_t vertex_count(std::uint64_t q) { return q * q + q; }
constexpr std::uint64_t degree(std::uint64_t q) { return 2 * q - 1; }
constexpr std::uint64_t edge_count(std::uint64_t q) { return vertex_count(q) * degree(q) / 2; }
constexpr std::uint64_t girth(std::uint64_t q) { return q == 2 ? 4 : 3; }
constexpr std::uint64_t distance_two_count(std::uint64_t q) { return q * q - q; }
constexpr std::uint64_t distance_sum(std::uint64_t q) { return 2 * q * q - 1; }
inline Rational reciprocal_distance_sum(std::uint64_t q) {
  return Rational(static_cast<std::int64_t>(q * q + 3 * q - 2), 2);
}
constexpr std::uint64_t wiener(std::uint64_t q) { return vertex_count(q) * distance_sum(q) / 2; }
inline Rational harary(std::uint64_t q) {
  return Rational(static_cast<std::int64_t>(vertex_count(q) * (q * q + 3 * q - 2)), 2);
}
constexpr std::uint64_t ir_components(std::uint64_t q) { return q * (q + 1) / 2; }

}  // namespace closed_form

struct VerifyOptions {
  std::uint64_t bruteforce_cap = kDefaultBruteForceCap;
};

namespace detail {

inline std::string opt_str(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("inf");
}

inline std::string count_str(std::size_t bad, std::size_t total, std::string_view what) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " " + std::string(what);
}

}  // namespace detail

inline GraphReport verify_all(const Field& field, const VerifyOptions& options = {}) {
  using detail::count_str;
  using std::to_string;
  const FieldSpec& f = *field;
  const std::uint64_t q = f.order();

  GraphReport r;
  r.p = f.p();
  r.k = static_cast<std::uint64_t>(f.k());
  r.modulus = f.modulus();
  r.q = q;
  r.expected_idempotent_count = expected_idempotent_count(q);
  r.expected_vertex_count = closed_form::vertex_count(q);
  r.expected_degree = closed_form::degree(q);
  r.expected_edge_count = closed_form::edge_count(q);
  r.expected_girth = closed_form::girth(q);
  r.expected_wiener = closed_form::wiener(q);
  r.expected_harary = closed_form::harary(q);
  r.expected_ir_components = closed_form::ir_components(q);
  auto& claims = r.claims;

  // Enumeration.
  const IdempotentSet idems = enumerate_constructive(field);
  std::optional<IdempotentSet> brute;
  try {
    brute = enumerate_bruteforce(field, options.bruteforce_cap);
    r.bruteforce_used = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  const IdempotentSet& reference = brute ? *brute : idems;
  r.idempotent_count = reference.all.size();
  r.class_sizes = idems.class_sizes();

  claims.push_back(make_claim("idempotents.count", "|Id(R)| = q^2 + q + 2",
                              to_string(r.idempotent_count), to_string(r.expected_idempotent_count),
                              r.idempotent_count == r.expected_idempotent_count,
                              brute ? "brute force" : "constructive only"));
  if (brute) {
    const bool same = *brute == idems;
    claims.push_back(make_claim("idempotents.enumerators_agree",
                                "brute-force and constructive enumerations are list-identical",
                                same ? "identical" : "differ", "identical", same));
  } else {
    claims.push_back({"idempotents.enumerators_agree",
                      "brute-force and constructive enumerations are list-identical", "not run",
                      "identical", ClaimStatus::Skipped, "q^4 exceeds brute-force cap"});
  }
  {
    std::string got, want;
    bool ok = true;
    for (auto c : kAllClasses) {
      const auto i = static_cast<std::size_t>(c);
      const std::string sep = i ? "," : "";
      got += sep + to_string(r.class_sizes[i]);
      want += sep + to_string(expected_class_size(c, q));
      ok = ok && r.class_sizes[i] == expected_class_size(c, q);
    }
    claims.push_back(make_claim("idempotents.class_sizes",
                                "|P0|=2, |P1|=|P2|=1, |P3..P6|=q-1, |P7|=(q-2)(q-1)", got, want, ok));
  }
  {
    std::size_t bad = 0, bad_p7 = 0, bad_trdet = 0;
    for (std::size_t i = 0; i < idems.all.size(); ++i) {
      const Mat2& m = idems.all[i];
      if (classify(m) != idems.classes[i]) ++bad;
      const bool nontrivial = !m.is_zero() && !m.is_identity();
      if (nontrivial) {
        const bool offdiag = !m.b.is_zero() && !m.c.is_zero();
        if (offdiag != (idems.classes[i] == IdempotentClass::P7)) ++bad_p7;
        if (!trace(m).is_one() || !det(m).is_zero()) ++bad_trdet;
      }
    }
    const std::size_t n = idems.all.size();
    claims.push_back(make_claim("idempotents.classify_consistent",
                                "structural classification matches the generating family",
                                count_str(bad, n, "agree"), count_str(0, n, "agree"), bad == 0));
    claims.push_back(make_claim("idempotents.p7_offdiagonal",
                                "a nontrivial idempotent is in P7 iff b != 0 and c != 0",
                                count_str(bad_p7, n - 2, "agree"), count_str(0, n - 2, "agree"), bad_p7 == 0));
    claims.push_back(make_claim("idempotents.trace_det",
                                "every nontrivial idempotent has trace 1 and determinant 0",
                                count_str(bad_trdet, n - 2, "agree"), count_str(0, n - 2, "agree"),
                                bad_trdet == 0));
  }
  {
    // Orthogonal complement uniqueness over all idempotent pairs.
    std::size_t bad = 0, total = 0;
    for (const auto& e : idems.all) {
      if (e.is_zero()) continue;
      const Mat2 comp = complement(e);
      for (const auto& a : idems.all) {
        if (a.is_zero()) continue;
        ++total;
        const bool orth = product_is_zero(e, a) && product_is_zero(a, e);
        if (orth != (a == comp)) ++bad;
      }
    }
    claims.push_back(make_claim("idempotents.complement_unique",
                                "for nonzero E and nonzero A: EA = AE = 0 iff A = 1 - E",
                                count_str(bad, total, "pairs agree"), count_str(0, total, "pairs agree"),
                                bad == 0));
  }

  // Graphs.
  const IdemGraph gid = build_graph(idems, GraphKind::GID);
  const IdemGraph ir = build_graph(idems, GraphKind::IR);
  const std::size_t n = gid.size();
  r.vertex_count = n;
  r.edge_count = gid.edge_count();
  r.degree_min = n ? gid.adj[0].size() : 0;
  r.degree_max = r.degree_min;
  for (const auto& row : gid.adj) {
    r.degree_min = std::min<std::uint64_t>(r.degree_min, row.size());
    r.degree_max = std::max<std::uint64_t>(r.degree_max, row.size());
  }
  r.is_regular = r.degree_min == r.degree_max;

  claims.push_back(make_claim("graph.vertex_count", "|V| = q^2 + q", to_string(r.vertex_count),
                              to_string(r.expected_vertex_count), r.vertex_count == r.expected_vertex_count));
  claims.push_back(make_claim("graph.regular_degree", "every GID vertex has degree 2q - 1",
                              r.is_regular ? to_string(r.degree_min)
                                           : to_string(r.degree_min) + ".." + to_string(r.degree_max),
                              to_string(r.expected_degree),
                              r.is_regular && r.degree_min == r.expected_degree));
  claims.push_back(make_claim("graph.edge_count", "|E(GID)| = (q^2 + q)(2q - 1)/2", to_string(r.edge_count),
                              to_string(r.expected_edge_count), r.edge_count == r.expected_edge_count));
  {
    std::size_t bad = 0;
    std::string note;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Mat2> row;
      for (Vertex w : gid.adj[v]) row.push_back(gid.vertices[w]);
      try {
        if (neighbors_closed_form(gid.vertices[v]) != row) ++bad;
      } catch (const std::exception& e) {
        ++bad;
        if (note.empty()) note = e.what();
      }
    }
    claims.push_back(make_claim("graph.closed_form_neighbors",
                                "family-generated neighbor list equals the pairwise adjacency row",
                                count_str(bad, n, "rows equal"), count_str(0, n, "rows equal"), bad == 0, note));
  }
  {
    std::size_t bad = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : ir.adj[u])
        if (!gid.adjacent(u, v)) ++bad;
    claims.push_back(make_claim("graph.ir_subgraph", "every IR edge is a GID edge",
                                count_str(bad, 2 * ir.edge_count(), "edge ends"),
                                count_str(0, 2 * ir.edge_count(), "edge ends"), bad == 0));
  }
  {
    // Transpose is an automorphism of GID.
    std::size_t bad = 0;
    std::vector<Vertex> image(n);
    bool bijective = true;
    for (Vertex v = 0; v < n; ++v) {
      const auto t = gid.index_of(transpose(gid.vertices[v]));
      if (!t) {
        bijective = false;
        break;
      }
      image[v] = *t;
    }
    if (bijective)
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v : gid.adj[u])
          if (!gid.adjacent(image[u], image[v])) ++bad;
    claims.push_back(make_claim("graph.transpose_automorphism",
                                "M -> M^T permutes the vertices and preserves GID edges",
                                bijective ? count_str(bad, 2 * r.edge_count, "edge ends preserved") : "not a bijection",
                                count_str(0, 2 * r.edge_count, "edge ends preserved"), bijective && bad == 0));
  }

  // Metrics.
  const DistanceTable dist = all_pairs_distances(gid);
  r.component_count = components(gid);
  const auto d = diameter(dist);
  r.diameter = d ? std::optional<std::uint64_t>(*d) : std::nullopt;
  const auto g = girth(gid);
  r.girth = g ? std::optional<std::uint64_t>(*g) : std::nullopt;

  claims.push_back(make_claim("graph.connected", "GID is connected", to_string(r.component_count) + " component(s)",
                              "1 component(s)", r.component_count == 1));
  claims.push_back(make_claim("graph.diameter", "diam(GID) = 2", detail::opt_str(r.diameter), "2",
                              r.diameter == std::optional<std::uint64_t>(2)));
  {
    // E11, [[0,0],[1,1]] and [[0,-1],[0,1]] are pairwise adjacent in every field.
    const Mat2 t1 = unit(f, 1, 1);
    const Mat2 t2 = family::p3(t1.a);
    const Mat2 t3 = family::p4(-t1.a);
    const bool triangle = adjacent(GraphKind::GID, t1, t2) && adjacent(GraphKind::GID, t2, t3) &&
                          adjacent(GraphKind::GID, t1, t3);
    claims.push_back(make_claim("graph.girth", "girth(GID) = 4 if q = 2, else 3", detail::opt_str(r.girth),
                                to_string(r.expected_girth),
                                r.girth == std::optional<std::uint64_t>(r.expected_girth),
                                triangle ? "triangle " + to_string(t1) + " ~ " + to_string(t2) + " ~ " +
                                               to_string(t3)
                                         : ""));
  }
  claims.push_back(audit_girth_witness(f));
  {
    bool e11e22_common = false;
    const auto i11 = gid.index_of(unit(f, 1, 1));
    const auto i22 = gid.index_of(unit(f, 2, 2));
    if (i11 && i22)
      for (Vertex w : gid.adj[*i11])
        if (gid.adjacent(w, *i22)) e11e22_common = true;
    const bool ok = i11 && i22 && dist(*i11, *i22) == 1 && !e11e22_common;
    claims.push_back(make_claim("graph.e11_e22_no_common_neighbor",
                                "E11 ~ E22 and they share no neighbor", ok ? "holds" : "violated", "holds", ok));
  }
  {
    std::size_t bad = 0, total = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        ++total;
        if (predicted_distance(gid.vertices[u], gid.vertices[v]) != dist(u, v)) ++bad;
      }
    claims.push_back(make_claim("graph.class_distances",
                                "class-by-class adjacency rules give every pairwise distance (1 or 2)",
                                count_str(bad, total, "pairs agree"), count_str(0, total, "pairs agree"), bad == 0));
  }
  for (auto& c : audit_witnesses(idems)) claims.push_back(std::move(c));

  // I(R).
  {
    r.ir_component_count = components(ir);
    r.ir_edge_count = ir.edge_count();
    std::size_t bad = 0;
    for (Vertex v = 0; v < ir.size(); ++v)
      if (ir.adj[v].size() != 1 || ir.vertices[ir.adj[v][0]] != complement(ir.vertices[v])) ++bad;
    claims.push_back(make_claim("ir.perfect_matching",
                                "IR is q(q+1)/2 disjoint edges, each joining E and 1 - E",
                                to_string(r.ir_component_count) + " components, " + count_str(bad, ir.size(), "matched to 1 - E"),
                                to_string(r.expected_ir_components) + " components, " + count_str(0, ir.size(), "matched to 1 - E"),
                                bad == 0 && r.ir_component_count == r.expected_ir_components &&
                                    r.ir_edge_count == r.expected_ir_components));
  }

  // Per-vertex sums and indices. These need a connected GID.
  if (r.component_count == 1) {
    std::size_t bad2 = 0, bad_sum = 0, bad_rec = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (sphere_size(dist, v, 2) != n - gid.adj[v].size() - 1 ||
          sphere_size(dist, v, 2) != closed_form::distance_two_count(q))
        ++bad2;
      if (distance_sum(dist, v) != closed_form::distance_sum(q)) ++bad_sum;
      if (reciprocal_distance_sum(dist, v) != closed_form::reciprocal_distance_sum(q)) ++bad_rec;
    }
    claims.push_back(make_claim("metrics.distance_two_count",
                                "each vertex has |V| - deg - 1 = q^2 - q vertices at distance 2",
                                count_str(bad2, n, "vertices"), count_str(0, n, "vertices"), bad2 == 0,
                                "expected per vertex " + to_string(closed_form::distance_two_count(q))));
    claims.push_back(make_claim("metrics.distance_sum", "each vertex has distance sum 2q^2 - 1",
                                count_str(bad_sum, n, "vertices"), count_str(0, n, "vertices"), bad_sum == 0,
                                "expected per vertex " + to_string(closed_form::distance_sum(q))));
    claims.push_back(make_claim("metrics.reciprocal_distance_sum",
                                "each vertex has reciprocal distance sum (q^2 + 3q - 2)/2",
                                count_str(bad_rec, n, "vertices"), count_str(0, n, "vertices"), bad_rec == 0,
                                "expected per vertex " + closed_form::reciprocal_distance_sum(q).str()));
    r.wiener = wiener(dist);
    r.harary = harary(dist);
    claims.push_back(make_claim("metrics.wiener", "W(GID) = (q^2 + q)(2q^2 - 1)/2", to_string(r.wiener),
                                to_string(r.expected_wiener), r.wiener == r.expected_wiener));
    claims.push_back(make_claim("metrics.harary", "H(GID) = (q^2 + q)(q^2 + 3q - 2)/2", r.harary.str(),
                                r.expected_harary.str(), r.harary == r.expected_harary));
  } else {
    for (const char* name : {"metrics.distance_two_count", "metrics.distance_sum",
                             "metrics.reciprocal_distance_sum", "metrics.wiener", "metrics.harary"})
      claims.push_back(make_claim(name, "requires a connected GID", "disconnected", "connected", false));
  }
  return r;
}

}  // namespace idemgraph
