#pragma once

// Idempotent graphs of M2(GF(q)) and their metrics.
//
// Both graphs live on the q^2 + q nontrivial idempotents:
//   IR   h ~ k  iff  hk = kh = 0
//   GID  h ~ k  iff  hk = 0 or kh = 0
// so IR is a spanning subgraph of GID.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string_view>
#include <vector>

#include "idemgraph/idempotents.hpp"
#include "idemgraph/rational.hpp"

namespace idemgraph {

enum class GraphKind { IR, GID };

constexpr std::string_view to_string(GraphKind kind) { return kind == GraphKind::IR ? "IR" : "GID"; }

using Vertex = std::uint32_t;

struct IdemGraph {
  GraphKind kind = GraphKind::GID;
  Field field;
  std::vector<Mat2> vertices;             // ascending canonical id
  std::vector<std::vector<Vertex>> adj;   // sorted neighbor indices

  std::size_t size() const { return vertices.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += row.size();
    return twice / 2;
  }

  std::optional<Vertex> index_of(const Mat2& m) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), m.id(),
                               [](const Mat2& x, MatId id) { return x.id() < id; });
    if (it == vertices.end() || it->id() != m.id()) return std::nullopt;
    return static_cast<Vertex>(it - vertices.begin());
  }

  bool adjacent(Vertex u, Vertex v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }
};

inline bool adjacent(GraphKind kind, const Mat2& h, const Mat2& k) {
  const bool hk = product_is_zero(h, k);
  const bool kh = product_is_zero(k, h);
  return kind == GraphKind::IR ? (hk && kh) : (hk || kh);
}

/// Decides every edge from the pairwise products. O(V^2).
inline IdemGraph build_graph(const IdempotentSet& idems, GraphKind kind) {
  IdemGraph g{kind, idems.field, idems.nontrivial(), {}};
  const auto n = static_cast<Vertex>(g.vertices.size());
  g.adj.assign(n, {});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(kind, g.vertices[u], g.vertices[v])) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
      }
  return g;
}

/// The 2q-1 neighbors of a nontrivial idempotent in GID, generated from the
/// explicit neighbor families rather than by scanning. Sorted by canonical id.
inline std::vector<Mat2> neighbors_closed_form(const Mat2& e) {
  const IdempotentClass cls = classify(e);
  if (cls == IdempotentClass::P0) throw Error(ErrorKind::TrivialIdempotent, to_string(e));

  const FieldSpec& f = e.spec();
  const auto elems = elements(f);
  const Fq zero = elems[0];
  const Fq one = zero.one();
  std::vector<Mat2> out;
  out.reserve(2 * f.order());

  auto all_of = [&](auto make) {
    for (const Fq& t : elems)
      if (!t.is_zero()) out.push_back(make(t));
  };
  auto for_a = [&](auto make) {
    for (const Fq& a : elems)
      if (!a.is_zero() && !a.is_one()) out.push_back(make(a));
  };

  switch (cls) {
    case IdempotentClass::P1:
      out.push_back(unit(f, 2, 2));
      all_of(family::p3);
      all_of(family::p4);
      break;
    case IdempotentClass::P2:
      out.push_back(unit(f, 1, 1));
      all_of(family::p5);
      all_of(family::p6);
      break;
    case IdempotentClass::P3: {
      const Fq c = e.c;
      all_of(family::p5);
      out.push_back(family::p4(-c.inverse()));
      out.push_back(unit(f, 1, 1));
      for_a([&](const Fq& a) { return family::p7(a, -(one - a) / c); });
      break;
    }
    case IdempotentClass::P4: {
      const Fq c = e.b;
      all_of(family::p6);
      out.push_back(family::p3(-c.inverse()));
      out.push_back(unit(f, 1, 1));
      for_a([&](const Fq& a) { return family::p7(a, -(a * c)); });
      break;
    }
    case IdempotentClass::P5: {
      const Fq c = e.c;
      all_of(family::p3);
      out.push_back(family::p6(-c.inverse()));
      out.push_back(unit(f, 2, 2));
      for_a([&](const Fq& a) { return family::p7(a, -(a / c)); });
      break;
    }
    case IdempotentClass::P6: {
      const Fq c = e.b;
      all_of(family::p4);
      out.push_back(family::p5(-c.inverse()));
      out.push_back(unit(f, 2, 2));
      for_a([&](const Fq& a) { return family::p7(a, (a - one) * c); });
      break;
    }
    case IdempotentClass::P7: {
      const Fq a = e.a;
      const Fq b = e.b;
      // The four neighbors outside P7.
      out.push_back(family::p3((a - one) / b));
      out.push_back(family::p4(-(b / a)));
      out.push_back(family::p6(b / (a - one)));
      out.push_back(family::p5(-(a / b)));
      // E * E1 = 0: b1 = -(1 - a1) b / a.
      for_a([&](const Fq& a1) { return family::p7(a1, -((one - a1) * b / a)); });
      // E2 * E = 0: b2 = -a2 b / (1 - a).
      for_a([&](const Fq& a2) { return family::p7(a2, -(a2 * b / (one - a))); });
      break;
    }
    case IdempotentClass::P0: break;
  }

  std::sort(out.begin(), out.end());
  const std::size_t before = out.size();
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Mat2& x, const Mat2& y) { return x.id() == y.id(); }),
            out.end());
  // The two P7 families meet only in 1 - E; every other family is disjoint.
  const std::size_t expected_overlap = cls == IdempotentClass::P7 && f.order() > 2 ? 1 : 0;
  if (before - out.size() != expected_overlap)
    throw std::logic_error("unexpected neighbor overlap at " + to_string(e));
  return out;
}

/// Sentinel for unreachable pairs in a DistanceTable.
inline constexpr std::uint16_t kUnreachable = std::numeric_limits<std::uint16_t>::max();

/// Flat V x V table of hop distances.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const { return n_; }
  std::uint16_t operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
  std::uint16_t& at(std::size_t u, std::size_t v) { return d_[u * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> d_;
};

inline std::vector<std::uint16_t> bfs(const IdemGraph& g, Vertex root) {
  std::vector<std::uint16_t> dist(g.size(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[root] = 0;
  frontier.push(root);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.adj[u])
      if (dist[w] == kUnreachable) {
        dist[w] = static_cast<std::uint16_t>(dist[u] + 1);
        frontier.push(w);
      }
  }
  return dist;
}

inline DistanceTable all_pairs_distances(const IdemGraph& g) {
  DistanceTable table(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    const auto row = bfs(g, u);
    for (Vertex v = 0; v < g.size(); ++v) table.at(u, v) = row[v];
  }
  return table;
}

/// Connected-component label per vertex, labels numbered from 0 in order of
/// first appearance.
inline std::vector<std::uint32_t> component_labels(const IdemGraph& g) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.size(), kNone);
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (label[s] != kNone) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.adj[u])
        if (label[w] == kNone) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline std::size_t components(const IdemGraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

// nullopt stands for infinity in diameter() and girth().

inline std::optional<std::size_t> diameter(const DistanceTable& d) {
  std::size_t best = 0;
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (d(u, v) == kUnreachable) return std::nullopt;
      best = std::max<std::size_t>(best, d(u, v));
    }
  return best;
}

inline std::optional<std::size_t> diameter(const IdemGraph& g) { return diameter(all_pairs_distances(g)); }

/// Shortest cycle length. From each root, the first non-tree edge met by BFS
/// closes a cycle through the root of length at most dist(u) + dist(w) + 1;
/// the minimum over all roots is exact.
inline std::optional<std::size_t> girth(const IdemGraph& g) {
  std::optional<std::size_t> best;
  constexpr auto kNone = std::numeric_limits<Vertex>::max();
  for (Vertex root = 0; root < g.size(); ++root) {
    std::vector<std::uint32_t> dist(g.size(), kNone);
    std::vector<Vertex> parent(g.size(), kNone);
    std::queue<Vertex> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      if (best && 2 * dist[u] >= *best) break;
      for (Vertex w : g.adj[u]) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          frontier.push(w);
        } else if (parent[u] != w) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

inline void require_connected(const DistanceTable& d) {
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = 0; v < d.size(); ++v)
      if (d(u, v) == kUnreachable) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

/// Sum of distances from v to every vertex.
inline std::uint64_t distance_sum(const DistanceTable& d, std::size_t v) {
  std::uint64_t s = 0;
  for (std::size_t u = 0; u < d.size(); ++u) {
    if (d(v, u) == kUnreachable) throw Error(ErrorKind::Disconnected, "graph is not connected");
    s += d(v, u);
  }
  return s;
}

/// Sum of 1/d(v, u) over u != v.
inline Rational reciprocal_distance_sum(const DistanceTable& d, std::size_t v) {
  Rational s;
  for (std::size_t u = 0; u < d.size(); ++u) {
    if (u == v) continue;
    if (d(v, u) == kUnreachable) throw Error(ErrorKind::Disconnected, "graph is not connected");
    s += Rational(1, d(v, u));
  }
  return s;
}

/// Number of vertices at exactly distance `r` from v.
inline std::size_t sphere_size(const DistanceTable& d, std::size_t v, std::uint16_t r) {
  std::size_t n = 0;
  for (std::size_t u = 0; u < d.size(); ++u) n += d(v, u) == r;
  return n;
}

/// Wiener index: sum of d(u, v) over unordered pairs.
inline std::uint64_t wiener(const DistanceTable& d) {
  require_connected(d);
  std::uint64_t twice = 0;
  for (std::size_t v = 0; v < d.size(); ++v) twice += distance_sum(d, v);
  return twice / 2;
}

/// Harary index in vertex-sum form: the sum over vertices v of the
/// reciprocal-distance sums from v. Each unordered pair contributes twice.
inline Rational harary(const DistanceTable& d) {
  require_connected(d);
  Rational total;
  for (std::size_t v = 0; v < d.size(); ++v) total += reciprocal_distance_sum(d, v);
  return total;
}

inline std::uint64_t wiener(const IdemGraph& g) { return wiener(all_pairs_distances(g)); }
inline Rational harary(const IdemGraph& g) { return harary(all_pairs_distances(g)); }

}  // namespace idemgraph
