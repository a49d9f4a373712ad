#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "idemgraph/audit.hpp"
#include "idemgraph/graph.hpp"
#include "oracle.hpp"

using namespace idemgraph;

namespace {

const std::vector<std::pair<std::uint64_t, int>> kFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                            {2, 3}, {3, 2}, {11, 1}, {13, 1}};

oracle::RefField ref_of(const FieldSpec& f) {
  return {static_cast<int>(f.p()), oracle::Poly(f.modulus().begin(), f.modulus().end())};
}

IdemGraph gid(const Field& f) { return build_graph(enumerate_constructive(f), GraphKind::GID); }

using Edge = std::pair<int, int>;

// Labels e1..e6 from the GF(2) worked example.
std::set<Edge> labelled_edges(const IdemGraph& g) {
  const FieldSpec& f = *g.field;
  const std::vector<Mat2> e = {make_mat(f, 1, 0, 0, 0), make_mat(f, 0, 0, 0, 1), make_mat(f, 0, 0, 1, 1),
                               make_mat(f, 0, 1, 0, 1), make_mat(f, 1, 1, 0, 0), make_mat(f, 1, 0, 1, 0)};
  std::set<Edge> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (g.adjacent(*g.index_of(e[i]), *g.index_of(e[j]))) out.insert({i + 1, j + 1});
  return out;
}

}  // namespace

TEST(Graph, GoldenGF2) {
  auto f = make_field(2, 1);
  const auto idems = enumerate_constructive(f);
  const auto ir = build_graph(idems, GraphKind::IR);
  const auto g = build_graph(idems, GraphKind::GID);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(labelled_edges(ir), (std::set<Edge>{{1, 2}, {3, 6}, {4, 5}}));
  EXPECT_EQ(labelled_edges(g), (std::set<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5},
                                               {5, 6}}));
}

TEST(Graph, AdjacencyMatchesOracle) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const auto ref = ref_of(*f);
    for (bool either : {false, true}) {
      const auto g = build_graph(enumerate_constructive(f), either ? GraphKind::GID : GraphKind::IR);
      const auto rg = oracle::graph(ref, either);
      ASSERT_EQ(g.size(), rg.vertices.size());
      for (Vertex u = 0; u < g.size(); ++u) {
        ASSERT_EQ(g.vertices[u].id(), oracle::id(ref, rg.vertices[u]));
        for (Vertex v = 0; v < g.size(); ++v) ASSERT_EQ(g.adjacent(u, v), rg.adj[u][v]);
      }
    }
  }
}

TEST(Graph, ClosedFormNeighborsMatchAdjacencyRows) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const auto g = gid(f);
    for (Vertex u = 0; u < g.size(); ++u) {
      std::vector<MatId> want, got;
      for (Vertex v : g.adj[u]) want.push_back(g.vertices[v].id());
      for (const auto& m : neighbors_closed_form(g.vertices[u])) got.push_back(m.id());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want) << to_string(g.vertices[u]);
      EXPECT_EQ(got.size(), 2 * f->order() - 1);
    }
  }
  try {
    neighbors_closed_form(identity(*make_field(3, 1)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TrivialIdempotent);
  }
}

TEST(Graph, DistancesMatchFloydWarshall) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    if (f->order() > 9) continue;
    const auto g = gid(f);
    const auto d = all_pairs_distances(g);
    const auto ref = oracle::floyd_warshall(oracle::graph(ref_of(*f), true));
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = 0; v < g.size(); ++v) ASSERT_EQ(d(u, v), ref[u][v]);
  }
}

TEST(Graph, IndicesAtQ3FromIndependentDistances) {
  auto f = make_field(3, 1);
  const auto ref = oracle::floyd_warshall(oracle::graph(ref_of(*f), true));
  std::uint64_t w = 0;
  Rational h;
  for (std::size_t u = 0; u < ref.size(); ++u)
    for (std::size_t v = 0; v < ref.size(); ++v)
      if (u != v) {
        if (u < v) w += ref[u][v];
        h += Rational(1, ref[u][v]);
      }
  EXPECT_EQ(w, 102u);
  EXPECT_EQ(h, Rational(96));
  const auto g = gid(f);
  EXPECT_EQ(wiener(g), w);
  EXPECT_EQ(harary(g), h);
}

TEST(Graph, IndicesAtQ2) {
  const auto g = gid(make_field(2, 1));
  EXPECT_EQ(wiener(g), 21u);
  EXPECT_EQ(harary(g), Rational(24));
}

TEST(Graph, PerVertexSums) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const std::int64_t q = f->order();
    const auto d = all_pairs_distances(gid(f));
    for (std::size_t v = 0; v < d.size(); ++v) {
      EXPECT_EQ(distance_sum(d, v), static_cast<std::uint64_t>(2 * q * q - 1));
      EXPECT_EQ(reciprocal_distance_sum(d, v), Rational(q * q + 3 * q - 2, 2));
      EXPECT_EQ(sphere_size(d, v, 2), static_cast<std::size_t>(q * q - q));
    }
  }
}

TEST(Graph, DiameterAndConnectivity) {
  for (auto [p, k] : kFields) {
    const auto g = gid(make_field(p, k));
    EXPECT_EQ(diameter(g), std::optional<std::size_t>(2));
    EXPECT_EQ(components(g), 1u);
  }
}

TEST(Graph, GirthEqualsShortestCycleSearch) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const int ref = oracle::short_cycle(oracle::graph(ref_of(*f), true));
    ASSERT_NE(ref, 0);
    EXPECT_EQ(girth(gid(f)), std::optional<std::size_t>(ref)) << "q=" << f->order();
  }
}

TEST(Graph, GirthOfSmallShapes) {
  // 4-cycle and a path, built by hand around the GF(2) vertex set.
  auto f = make_field(2, 1);
  IdemGraph g{GraphKind::GID, f, enumerate_constructive(f).nontrivial(), {}};
  g.adj.assign(6, {});
  auto link = [&g](Vertex u, Vertex v) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  };
  link(0, 1);
  link(1, 2);
  link(2, 3);
  EXPECT_EQ(girth(g), std::nullopt);
  EXPECT_EQ(diameter(g), std::nullopt);
  link(3, 0);
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  EXPECT_EQ(girth(g), std::optional<std::size_t>(4));
  link(4, 5);
  EXPECT_EQ(components(g), 2u);
  try {
    wiener(g);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
  }
}

TEST(Graph, IRIsPerfectMatchingOnComplements) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const auto q = f->order();
    const auto ir = build_graph(enumerate_constructive(f), GraphKind::IR);
    EXPECT_EQ(components(ir), q * (q + 1) / 2);
    EXPECT_EQ(ir.edge_count(), q * (q + 1) / 2);
    for (Vertex u = 0; u < ir.size(); ++u) {
      ASSERT_EQ(ir.adj[u].size(), 1u);
      EXPECT_EQ(ir.vertices[ir.adj[u][0]], complement(ir.vertices[u]));
    }
    try {
      harary(ir);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
    }
  }
}

TEST(Graph, TransposeIsAutomorphism) {
  const auto g = gid(make_field(3, 2));
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < g.size(); ++v)
      EXPECT_EQ(g.adjacent(u, v),
                g.adjacent(*g.index_of(transpose(g.vertices[u])), *g.index_of(transpose(g.vertices[v]))));
}

TEST(Graph, PredictedDistancesHold) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const auto g = gid(f);
    const auto d = all_pairs_distances(g);
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = 0; v < g.size(); ++v)
        ASSERT_EQ(predicted_distance(g.vertices[u], g.vertices[v]), d(u, v));
  }
}

TEST(Graph, WitnessAuditHasNoFailures) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    for (const auto& c : audit_witnesses(enumerate_constructive(f)))
      EXPECT_NE(c.status, ClaimStatus::Fail) << c.name << " q=" << f->order() << " " << c.note;
  }
}

TEST(Graph, EveryFieldHasTriangleThroughE11) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const Fq c(*f, 1);
    const Mat2 e11 = unit(*f, 1, 1), a = family::p3(c), b = family::p4(-c.inverse());
    EXPECT_TRUE(adjacent(GraphKind::GID, e11, a));
    EXPECT_TRUE(adjacent(GraphKind::GID, a, b));
    EXPECT_TRUE(adjacent(GraphKind::GID, e11, b));
  }
}
