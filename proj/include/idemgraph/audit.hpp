#pragma once

// Checks of the explicit path constructions behind the distance structure
// of GID: for each pair of idempotent classes there is a stated adjacency
// rule and, for non-adjacent pairs, a stated common neighbor. The rules
// give a predicted distance for every pair, compared against BFS; every
// displayed common neighbor is recomputed and its products checked.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "idemgraph/claim.hpp"
#include "idemgraph/graph.hpp"

namespace idemgraph {

/// GID adjacency predicted from the class-by-class rules, without
/// multiplying u and v.
inline bool predicted_adjacent(const Mat2& u_in, const Mat2& v_in) {
  using C = IdempotentClass;
  Mat2 u = u_in, v = v_in;
  C cu = classify(u), cv = classify(v);
  if (cu > cv) {
    std::swap(u, v);
    std::swap(cu, cv);
  }
  const Fq one = u.a.one();
  switch (cu) {
    case C::P1: return cv == C::P2 || cv == C::P3 || cv == C::P4;
    case C::P2: return cv == C::P5 || cv == C::P6;
    case C::P3: {
      const Fq c = u.c;
      if (cv == C::P4) return v == family::p4(-c.inverse());
      if (cv == C::P5) return true;
      if (cv == C::P7) return v.b == -(one - v.a) / c;
      return false;
    }
    case C::P4: {
      const Fq c = u.b;
      if (cv == C::P6) return true;
      if (cv == C::P7) return v.b == -(v.a * c);
      return false;
    }
    case C::P5: {
      const Fq c = u.c;
      if (cv == C::P6) return v == family::p6(-c.inverse());
      if (cv == C::P7) return v.b == -(v.a / c);
      return false;
    }
    case C::P6: {
      const Fq c = u.b;
      if (cv == C::P7) return v.b == (v.a - one) * c;
      return false;
    }
    case C::P7: {
      const Fq a = u.a, b = u.b;
      return v.b == -((one - v.a) * b / a) || v.b == -(v.a * b / (one - a));
    }
    case C::P0: break;
  }
  throw Error(ErrorKind::TrivialIdempotent, to_string(u));
}

/// 0 on the diagonal, 1 for predicted neighbors, 2 otherwise.
inline std::uint16_t predicted_distance(const Mat2& u, const Mat2& v) {
  if (u == v) return 0;
  return predicted_adjacent(u, v) ? 1 : 2;
}

namespace detail {

inline bool zero_product(const Mat2& x, const Mat2& y) { return product_is_zero(x, y); }

/// Aggregates one witness family over all of its instances.
class WitnessTally {
 public:
  WitnessTally(std::string name, std::string statement)
      : name_(std::move(name)), statement_(std::move(statement)) {}

  /// `ok` is the product condition; the witness must also be a vertex
  /// distinct from both endpoints for the path to exist.
  void record(const Mat2& from, const Mat2& witness, const Mat2& to, bool ok) {
    ++checked_;
    if (ok && is_vertex(witness) && witness != from && witness != to) return;
    fail(to_string(from) + " ~ " + to_string(witness) + " ~ " + to_string(to));
  }

  void record_edge(const Mat2& x, const Mat2& y, bool ok) {
    ++checked_;
    if (ok && is_vertex(x) && is_vertex(y) && x != y) return;
    fail(to_string(x) + " ~ " + to_string(y));
  }

  Claim finish(std::string documented_note = {}) const {
    Claim c;
    c.name = name_;
    c.statement = statement_;
    c.computed = std::to_string(checked_ - failed_) + "/" + std::to_string(checked_) + " valid";
    c.expected = std::to_string(checked_) + "/" + std::to_string(checked_) + " valid";
    if (failed_ == 0) {
      c.status = ClaimStatus::Pass;
    } else if (!documented_note.empty()) {
      c.status = ClaimStatus::Discrepancy;
      c.note = std::move(documented_note) + "; first failure " + first_failure_;
    } else {
      c.status = ClaimStatus::Fail;
      c.note = "first failure " + first_failure_;
    }
    return c;
  }

 private:
  static bool is_vertex(const Mat2& m) { return is_idempotent(m) && !m.is_zero() && !m.is_identity(); }

  void fail(std::string what) {
    if (failed_++ == 0) first_failure_ = std::move(what);
  }

  std::string name_;
  std::string statement_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

}  // namespace detail

/// Witness families whose displayed form is known not to validate in
/// general. Each maps to the note recorded with the discrepancy; the
/// corresponding distance is still asserted through predicted_distance.
inline std::string documented_discrepancy(const std::string& name) {
  if (name == "witness.e22_via_e11")
    return "stated product f E11 vanishes only for f in P4; for f in P3 the edge E11 ~ f "
           "comes from E11 f = 0, so the path itself exists";
  if (name == "witness.p4_to_p7_via_p6")
    return "displayed witness [[1,(a-1)^-1],[0,0]] annihilates B2 only when b = 1; "
           "[[1,(a-1)^-1 b],[0,0]] is the working form (see witness.p4_to_p7_via_p6_scaled)";
  return {};
}

/// Recomputes every displayed adjacency and common-neighbor witness over
/// all instances in the field.
inline std::vector<Claim> audit_witnesses(const IdempotentSet& idems) {
  using detail::WitnessTally;
  using detail::zero_product;
  using C = IdempotentClass;

  const FieldSpec& f = *idems.field;
  const auto elems = elements(f);
  const Fq one = elems[1 % elems.size()].one();
  const Mat2 e11 = unit(f, 1, 1);
  const Mat2 e22 = unit(f, 2, 2);

  std::vector<Mat2> cls[8];
  for (std::size_t i = 0; i < idems.all.size(); ++i)
    cls[static_cast<std::size_t>(idems.classes[i])].push_back(idems.all[i]);
  auto members = [&](C c) -> const std::vector<Mat2>& { return cls[static_cast<std::size_t>(c)]; };
  auto either = [](const Mat2& x, const Mat2& y) { return zero_product(x, y) || zero_product(y, x); };

  std::vector<Claim> out;
  auto emit = [&](const WitnessTally& t, const std::string& name) {
    out.push_back(t.finish(documented_discrepancy(name)));
  };

  // E11 and E22 rows.
  {
    WitnessTally t("witness.e11_via_e22", "E11 ~ E22 ~ f for f in P5 u P6");
    for (C c : {C::P5, C::P6})
      for (const auto& x : members(c)) t.record(e11, e22, x, either(e11, e22) && either(e22, x));
    emit(t, "witness.e11_via_e22");
  }
  {
    WitnessTally t("witness.e11_to_p7_via_p3", "E11 g = g x = 0 with g = [[0,0],[(a-1)/b,1]] for x in P7");
    for (const auto& x : members(C::P7)) {
      const Mat2 g = family::p3((x.a - one) / x.b);
      t.record(e11, g, x, zero_product(e11, g) && zero_product(g, x));
    }
    emit(t, "witness.e11_to_p7_via_p3");
  }
  {
    WitnessTally t("witness.e22_via_e11", "E22 ~ E11 ~ f for f in P3 u P4 (E11 E22 = f E11 = 0)");
    for (C c : {C::P3, C::P4})
      for (const auto& x : members(c)) t.record(e22, e11, x, zero_product(e11, e22) && zero_product(x, e11));
    emit(t, "witness.e22_via_e11");
  }
  {
    WitnessTally t("witness.e22_to_p7_via_p6", "E22 h = h y = 0 with h = [[1,b/(a-1)],[0,0]] for y in P7");
    for (const auto& y : members(C::P7)) {
      const Mat2 h = family::p6(y.b / (y.a - one));
      t.record(e22, h, y, zero_product(e22, h) && zero_product(h, y));
    }
    emit(t, "witness.e22_to_p7_via_p6");
  }

  // The four neighbors of a P7 element outside P7.
  {
    WitnessTally t("witness.p7_outer_neighbors",
                   "for E in P7: p3((a-1)/b) E = 0, E p4(-b/a) = 0, p6(b/(a-1)) E = 0, E p5(-a/b) = 0");
    for (const auto& e : members(C::P7)) {
      const Fq a = e.a, b = e.b;
      const Mat2 g3 = family::p3((a - one) / b), g4 = family::p4(-(b / a));
      const Mat2 g6 = family::p6(b / (a - one)), g5 = family::p5(-(a / b));
      t.record_edge(g3, e, zero_product(g3, e));
      t.record_edge(g4, e, zero_product(e, g4));
      t.record_edge(g6, e, zero_product(g6, e));
      t.record_edge(g5, e, zero_product(e, g5));
    }
    emit(t, "witness.p7_outer_neighbors");
  }

  // P3: A1 = [[0,0],[c,1]].
  {
    WitnessTally adj("witness.p3_adjacent", "A1 x1 = 0 with x1 = [[0,-1/c],[0,1]], and P5 A1 = 0");
    WitnessTally via_e11("witness.p3_to_p3p4_via_e11", "E11 is a common neighbor of A1 and B1 in (P3 u P4) \\ {x1, A1}");
    WitnessTally via_p5("witness.p3_to_p6_via_p5", "y A1 = B1 y = 0 with y = [[1,0],[-1/b,0]] for B1 = [[1,b],[0,0]]");
    WitnessTally to_p7("witness.p3_to_p7_via_p5", "y1 A1 = B1 y1 = 0 with y1 = [[1,0],[-a/b,0]] for B1 in P7 \\ {x2}");
    for (const auto& a1 : members(C::P3)) {
      const Fq c = a1.c;
      const Mat2 x1 = family::p4(-c.inverse());
      adj.record_edge(x1, a1, zero_product(a1, x1));
      for (const auto& p5 : members(C::P5)) adj.record_edge(p5, a1, zero_product(p5, a1));
      for (C k : {C::P3, C::P4})
        for (const auto& b1 : members(k)) {
          if (b1 == x1 || b1 == a1) continue;
          via_e11.record(a1, e11, b1, either(a1, e11) && either(e11, b1));
        }
      for (const auto& b1 : members(C::P6)) {
        const Mat2 y = family::p5(-b1.b.inverse());
        via_p5.record(a1, y, b1, zero_product(y, a1) && zero_product(b1, y));
      }
      for (const auto& b1 : members(C::P7)) {
        if (b1.b == -(one - b1.a) / c) continue;  // x2
        const Mat2 y1 = family::p5(-(b1.a / b1.b));
        to_p7.record(a1, y1, b1, zero_product(y1, a1) && zero_product(b1, y1));
      }
    }
    emit(adj, "witness.p3_adjacent");
    emit(via_e11, "witness.p3_to_p3p4_via_e11");
    emit(via_p5, "witness.p3_to_p6_via_p5");
    emit(to_p7, "witness.p3_to_p7_via_p5");
  }

  // P4: A2 = [[0,c],[0,1]].
  {
    WitnessTally adj("witness.p4_adjacent", "x3 A2 = 0 with x3 = [[0,0],[-1/c,1]], and A2 P6 = 0");
    WitnessTally via_e11("witness.p4_to_p3p4_via_e11", "E11 is a common neighbor of A2 and B2 in (P3 u P4) \\ {x3, A2}");
    WitnessTally via_p6("witness.p4_to_p5_via_p6", "A2 y' = y' B2 = 0 with y' = [[1,-1/b],[0,0]] for B2 = [[1,0],[b,0]]");
    WitnessTally to_p7("witness.p4_to_p7_via_p6", "A2 y2 = y2 B2 = 0 with y2 = [[1,(a-1)^-1],[0,0]] for B2 in P7 \\ {x4}");
    WitnessTally to_p7s("witness.p4_to_p7_via_p6_scaled", "A2 y = y B2 = 0 with y = [[1,(a-1)^-1 b],[0,0]] for B2 in P7 \\ {x4}");
    for (const auto& a2 : members(C::P4)) {
      const Fq c = a2.b;
      const Mat2 x3 = family::p3(-c.inverse());
      adj.record_edge(x3, a2, zero_product(x3, a2));
      for (const auto& p6 : members(C::P6)) adj.record_edge(p6, a2, zero_product(a2, p6));
      for (C k : {C::P3, C::P4})
        for (const auto& b2 : members(k)) {
          if (b2 == x3 || b2 == a2) continue;
          via_e11.record(a2, e11, b2, either(a2, e11) && either(e11, b2));
        }
      for (const auto& b2 : members(C::P5)) {
        const Mat2 y = family::p6(-b2.c.inverse());
        via_p6.record(a2, y, b2, zero_product(a2, y) && zero_product(y, b2));
      }
      for (const auto& b2 : members(C::P7)) {
        if (b2.b == -(b2.a * c)) continue;  // x4
        const Mat2 y2 = family::p6((b2.a - one).inverse());
        to_p7.record(a2, y2, b2, zero_product(a2, y2) && zero_product(y2, b2));
        const Mat2 ys = family::p6(b2.b / (b2.a - one));
        to_p7s.record(a2, ys, b2, zero_product(a2, ys) && zero_product(ys, b2));
      }
    }
    emit(adj, "witness.p4_adjacent");
    emit(via_e11, "witness.p4_to_p3p4_via_e11");
    emit(via_p6, "witness.p4_to_p5_via_p6");
    emit(to_p7, "witness.p4_to_p7_via_p6");
    emit(to_p7s, "witness.p4_to_p7_via_p6_scaled");
  }

  // P5: A3 = [[1,0],[c,0]].
  {
    WitnessTally adj("witness.p5_adjacent", "x5 A3 = 0 with x5 = [[1,-1/c],[0,0]], and A3 P3 = 0");
    WitnessTally via_e22("witness.p5_to_p5p6_via_e22", "E22 is a common neighbor of A3 and B3 in (P5 u P6) \\ {x5, A3}");
    WitnessTally via_p3("witness.p5_to_p4_via_p3", "A3 y'' = y'' B3 = 0 with y'' = [[0,0],[-1/b,1]] for B3 = [[0,b],[0,1]]");
    WitnessTally to_p7("witness.p5_to_p7_via_p3", "A3 y3 = y3 B3 = 0 with y3 = [[0,0],[(a-1)/b,1]] for B3 in P7 \\ {x6}");
    for (const auto& a3 : members(C::P5)) {
      const Fq c = a3.c;
      const Mat2 x5 = family::p6(-c.inverse());
      adj.record_edge(x5, a3, zero_product(x5, a3));
      for (const auto& p3 : members(C::P3)) adj.record_edge(p3, a3, zero_product(a3, p3));
      for (C k : {C::P5, C::P6})
        for (const auto& b3 : members(k)) {
          if (b3 == x5 || b3 == a3) continue;
          via_e22.record(a3, e22, b3, either(a3, e22) && either(e22, b3));
        }
      for (const auto& b3 : members(C::P4)) {
        const Mat2 y = family::p3(-b3.b.inverse());
        via_p3.record(a3, y, b3, zero_product(a3, y) && zero_product(y, b3));
      }
      for (const auto& b3 : members(C::P7)) {
        if (b3.b == -(b3.a / c)) continue;  // x6
        const Mat2 y3 = family::p3((b3.a - one) / b3.b);
        to_p7.record(a3, y3, b3, zero_product(a3, y3) && zero_product(y3, b3));
      }
    }
    emit(adj, "witness.p5_adjacent");
    emit(via_e22, "witness.p5_to_p5p6_via_e22");
    emit(via_p3, "witness.p5_to_p4_via_p3");
    emit(to_p7, "witness.p5_to_p7_via_p3");
  }

  // P6: A4 = [[1,c],[0,0]].
  {
    WitnessTally adj("witness.p6_adjacent", "A4 x7 = 0 with x7 = [[1,0],[-1/c,0]], and P4 A4 = 0");
    WitnessTally via_e22("witness.p6_to_p5p6_via_e22", "E22 is a common neighbor of A4 and B4 in (P5 u P6) \\ {x7, A4}");
    WitnessTally via_p4("witness.p6_to_p3_via_p4", "y A4 = B4 y = 0 with y = [[0,-1/b],[0,1]] for B4 = [[0,0],[b,1]]");
    WitnessTally to_p7("witness.p6_to_p7_via_p4", "y4 A4 = B4 y4 = 0 with y4 = [[0,-b/a],[0,1]] for B4 in P7 \\ {x8}");
    for (const auto& a4 : members(C::P6)) {
      const Fq c = a4.b;
      const Mat2 x7 = family::p5(-c.inverse());
      adj.record_edge(x7, a4, zero_product(a4, x7));
      for (const auto& p4 : members(C::P4)) adj.record_edge(p4, a4, zero_product(p4, a4));
      for (C k : {C::P5, C::P6})
        for (const auto& b4 : members(k)) {
          if (b4 == x7 || b4 == a4) continue;
          via_e22.record(a4, e22, b4, either(a4, e22) && either(e22, b4));
        }
      for (const auto& b4 : members(C::P3)) {
        const Mat2 y = family::p4(-b4.c.inverse());
        via_p4.record(a4, y, b4, zero_product(y, a4) && zero_product(b4, y));
      }
      for (const auto& b4 : members(C::P7)) {
        if (b4.b == (b4.a - one) * c) continue;  // x8
        const Mat2 y4 = family::p4(-(b4.b / b4.a));
        to_p7.record(a4, y4, b4, zero_product(y4, a4) && zero_product(b4, y4));
      }
    }
    emit(adj, "witness.p6_adjacent");
    emit(via_e22, "witness.p6_to_p5p6_via_e22");
    emit(via_p4, "witness.p6_to_p3_via_p4");
    emit(to_p7, "witness.p6_to_p7_via_p4");
  }

  // Two non-adjacent P7 elements share a P7 neighbor z with w1 z = z w2 = 0.
  {
    WitnessTally t("witness.p7_common_neighbor",
                   "non-adjacent w1, w2 in P7 have z in P7 with w1 z = z w2 = 0, "
                   "a/(1-a) = (1-a2) b1 / (a1 b2), b = -a b2 / (1-a2)");
    const auto& p7 = members(C::P7);
    for (const auto& w1 : p7)
      for (const auto& w2 : p7) {
        if (w1 == w2 || either(w1, w2)) continue;
        const Fq ratio = (one - w2.a) * w1.b / (w1.a * w2.b);
        if ((one + ratio).is_zero()) {
          t.record(w1, w1, w2, false);
          continue;
        }
        const Fq a = ratio / (one + ratio);
        const Fq b = -(a * w2.b / (one - w2.a));
        if (a.is_zero() || a.is_one() || b.is_zero()) {
          t.record(w1, w1, w2, false);
          continue;
        }
        const Mat2 z = family::p7(a, b);
        t.record(w1, z, w2, zero_product(w1, z) && zero_product(z, w2));
      }
    emit(t, "witness.p7_common_neighbor");
  }

  return out;
}

/// Shortest-cycle witness: the 4-cycle E11 ~ E22 ~ A ~ B ~ E11 for q = 2, and
/// for q > 2 the triangles A1 ~ A2 ~ A3 with A1 = [[0,0],[c,1]],
/// A2 = [[a,-(1-a)/c],[-ac,1-a]], A3 = [[1,0],[a c/(1-a),0]].
inline Claim audit_girth_witness(const FieldSpec& f) {
  const auto elems = elements(f);
  if (f.order() == 2) {
    const Mat2 e11 = unit(f, 1, 1), e22 = unit(f, 2, 2);
    const Mat2 a = make_mat(f, 1, 0, 1, 0), b = make_mat(f, 0, 0, 1, 1);
    const bool ok = product_is_zero(a, e22) && product_is_zero(a, b) && product_is_zero(e11, b) &&
                    product_is_zero(e11, e22);
    return make_claim("girth.witness_cycle", "E11 ~ E22 ~ [[1,0],[1,0]] ~ [[0,0],[1,1]] ~ E11 is a 4-cycle",
                      ok ? "valid" : "invalid", "valid", ok);
  }
  std::size_t checked = 0, valid = 0;
  const Fq one = elems[1];
  for (const Fq& c : elems) {
    if (c.is_zero()) continue;
    for (const Fq& a : elems) {
      if (a.is_zero() || a.is_one()) continue;
      ++checked;
      const Mat2 a1 = family::p3(c);
      const Mat2 a2 = family::p7(a, -(one - a) / c);
      const Mat2 a3 = family::p5(a * c / (one - a));
      const bool shape = a2.c == -(a * c);
      if (shape && product_is_zero(a1, a2) && product_is_zero(a2, a3) && product_is_zero(a3, a1) &&
          a1 != a2 && a2 != a3 && a1 != a3)
        ++valid;
    }
  }
  return make_claim("girth.witness_cycle", "A1 A2 = A2 A3 = A3 A1 = 0 for every c != 0, a not in {0,1}",
                    std::to_string(valid) + "/" + std::to_string(checked) + " triangles valid",
                    std::to_string(checked) + "/" + std::to_string(checked) + " triangles valid",
                    valid == checked && checked > 0);
}

}  // namespace idemgraph
