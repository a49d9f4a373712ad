#pragma once

// The ring M2(GF(q)) of 2x2 matrices.

#include <cstdint>
#include <string>

#include "idemgraph/field.hpp"

namespace idemgraph {

using MatId = std::uint64_t;

/// The matrix [[a, b], [c, d]]. All four entries share one field.
struct Mat2 {
  Fq a, b, c, d;

  const FieldSpec& spec() const { return a.spec(); }

  /// Canonical id ((a*q + b)*q + c)*q + d, a bijection onto [0, q^4).
  MatId id() const {
    const MatId q = spec().order();
    return ((static_cast<MatId>(a.rep()) * q + b.rep()) * q + c.rep()) * q + d.rep();
  }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero() && d.is_one(); }

  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  auto operator<=>(const Mat2& o) const { return id() <=> o.id(); }
};

inline Mat2 make_mat(const FieldSpec& f, Rep a, Rep b, Rep c, Rep d) {
  return {Fq(f, a), Fq(f, b), Fq(f, c), Fq(f, d)};
}

inline Mat2 mat_from_id(const FieldSpec& f, MatId id) {
  const MatId q = f.order();
  const auto d = static_cast<Rep>(id % q);
  id /= q;
  const auto c = static_cast<Rep>(id % q);
  id /= q;
  const auto b = static_cast<Rep>(id % q);
  id /= q;
  return make_mat(f, static_cast<Rep>(id), b, c, d);
}

inline Mat2 zero(const FieldSpec& f) { return make_mat(f, 0, 0, 0, 0); }
inline Mat2 identity(const FieldSpec& f) { return make_mat(f, 1, 0, 0, 1); }

/// Matrix unit E_ij (1-based indices).
inline Mat2 unit(const FieldSpec& f, int i, int j) {
  return make_mat(f, i == 1 && j == 1, i == 1 && j == 2, i == 2 && j == 1, i == 2 && j == 2);
}

inline Mat2 mat_add(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

inline Mat2 mat_sub(const Mat2& x, const Mat2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 operator+(const Mat2& x, const Mat2& y) { return mat_add(x, y); }
inline Mat2 operator-(const Mat2& x, const Mat2& y) { return mat_sub(x, y); }
inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mat_mul(x, y); }

inline Mat2 transpose(const Mat2& x) { return {x.a, x.c, x.b, x.d}; }

inline Fq det(const Mat2& x) { return x.a * x.d - x.b * x.c; }
inline Fq trace(const Mat2& x) { return x.a + x.d; }

inline bool is_idempotent(const Mat2& x) { return x * x == x; }

inline bool product_is_zero(const Mat2& x, const Mat2& y) { return (x * y).is_zero(); }

/// "[[a,b],[c,d]]" with entry representatives as integers.
inline std::string to_string(const Mat2& x) {
  return "[[" + std::to_string(x.a.rep()) + "," + std::to_string(x.b.rep()) + "],[" +
         std::to_string(x.c.rep()) + "," + std::to_string(x.d.rep()) + "]]";
}

}  // namespace idemgraph
