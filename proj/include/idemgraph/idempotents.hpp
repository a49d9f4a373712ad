#pragma once

// Idempotents of M2(GF(q)).
//
// There are exactly q^2 + q + 2 of them, falling into eight structural
// classes:
//
//   P0  0 and 1
//   P1  E11
//   P2  E22
//   P3  [[0,0],[c,1]]                  c != 0
//   P4  [[0,b],[0,1]]                  b != 0
//   P5  [[1,0],[c,0]]                  c != 0
//   P6  [[1,b],[0,0]]                  b != 0
//   P7  [[a,b],[a(1-a)/b, 1-a]]        a not in {0,1}, b != 0
//
// Two enumerators are provided: an exhaustive scan of all q^4 matrices and a
// direct construction from the families above. They are expected to agree
// element for element.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "idemgraph/matring.hpp"

namespace idemgraph {

enum class IdempotentClass : std::uint8_t { P0, P1, P2, P3, P4, P5, P6, P7 };

inline constexpr std::array<IdempotentClass, 8> kAllClasses = {
    IdempotentClass::P0, IdempotentClass::P1, IdempotentClass::P2, IdempotentClass::P3,
    IdempotentClass::P4, IdempotentClass::P5, IdempotentClass::P6, IdempotentClass::P7};

constexpr std::string_view to_string(IdempotentClass c) {
  constexpr std::array<std::string_view, 8> names = {"P0", "P1", "P2", "P3",
                                                     "P4", "P5", "P6", "P7"};
  return names[static_cast<std::size_t>(c)];
}

inline std::optional<IdempotentClass> class_from_string(std::string_view s) {
  for (auto c : kAllClasses)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

/// |P_i| as a function of the field order.
constexpr std::uint64_t expected_class_size(IdempotentClass c, std::uint64_t q) {
  switch (c) {
    case IdempotentClass::P0: return 2;
    case IdempotentClass::P1:
    case IdempotentClass::P2: return 1;
    case IdempotentClass::P7: return (q - 2) * (q - 1);
    default: return q - 1;
  }
}

constexpr std::uint64_t expected_idempotent_count(std::uint64_t q) { return q * q + q + 2; }

// Family members. Parameters must be nonzero (and a not in {0,1} for P7);
// the caller is responsible for that.
namespace family {

inline Mat2 p3(const Fq& c) { return {c.zero(), c.zero(), c, c.one()}; }
inline Mat2 p4(const Fq& b) { return {b.zero(), b, b.zero(), b.one()}; }
inline Mat2 p5(const Fq& c) { return {c.one(), c.zero(), c, c.zero()}; }
inline Mat2 p6(const Fq& b) { return {b.one(), b, b.zero(), b.zero()}; }
inline Mat2 p7(const Fq& a, const Fq& b) {
  const Fq one = a.one();
  return {a, b, a * (one - a) / b, one - a};
}

}  // namespace family

/// Structural classification by entry pattern. NotIdempotent if E^2 != E.
inline IdempotentClass classify(const Mat2& e) {
  if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, to_string(e));
  if (e.is_zero() || e.is_identity()) return IdempotentClass::P0;
  const bool b0 = e.b.is_zero();
  const bool c0 = e.c.is_zero();
  if (b0 && c0) return e.a.is_one() ? IdempotentClass::P1 : IdempotentClass::P2;
  if (b0) return e.a.is_zero() ? IdempotentClass::P3 : IdempotentClass::P5;
  if (c0) return e.a.is_zero() ? IdempotentClass::P4 : IdempotentClass::P6;
  return IdempotentClass::P7;
}

/// 1 - E, the unique idempotent orthogonal to a nonzero idempotent E.
inline Mat2 complement(const Mat2& e) {
  if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, to_string(e));
  return identity(e.spec()) - e;
}

struct IdempotentSet {
  Field field;
  std::vector<Mat2> all;                 // ascending canonical id
  std::vector<IdempotentClass> classes;  // parallel to `all`

  std::vector<Mat2> nontrivial() const {
    std::vector<Mat2> out;
    out.reserve(all.size());
    for (const auto& m : all)
      if (!m.is_zero() && !m.is_identity()) out.push_back(m);
    return out;
  }

  std::optional<std::size_t> index_of(const Mat2& m) const {
    auto it = std::lower_bound(all.begin(), all.end(), m.id(),
                               [](const Mat2& x, MatId id) { return x.id() < id; });
    if (it == all.end() || it->id() != m.id()) return std::nullopt;
    return static_cast<std::size_t>(it - all.begin());
  }

  std::optional<IdempotentClass> class_of(const Mat2& m) const {
    if (auto i = index_of(m)) return classes[*i];
    return std::nullopt;
  }

  std::array<std::uint64_t, 8> class_sizes() const {
    std::array<std::uint64_t, 8> sizes{};
    for (auto c : classes) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
  }

  bool operator==(const IdempotentSet& o) const {
    return same_field(field.get(), o.field.get()) && all == o.all && classes == o.classes;
  }
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 100'000'000;

/// Scans all q^4 matrices. CapExceeded when q^4 > cap.
inline IdempotentSet enumerate_bruteforce(const Field& field,
                                          std::uint64_t cap = kDefaultBruteForceCap) {
  const FieldSpec& f = *field;
  const std::uint64_t q = f.order();
  const std::uint64_t total = q * q * q * q;
  if (total > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(total) + " candidates exceed cap " +
                                            std::to_string(cap));
  IdempotentSet set{field, {}, {}};
  // Raw representative arithmetic keeps the inner loop free of field checks.
  auto dot = [&f](Rep x1, Rep y1, Rep x2, Rep y2) { return f.add(f.mul(x1, y1), f.mul(x2, y2)); };
  const auto n = static_cast<Rep>(q);
  for (Rep a = 0; a < n; ++a)
    for (Rep b = 0; b < n; ++b)
      for (Rep c = 0; c < n; ++c)
        for (Rep d = 0; d < n; ++d) {
          if (dot(a, a, b, c) != a || dot(a, b, b, d) != b || dot(c, a, d, c) != c ||
              dot(c, b, d, d) != d)
            continue;
          const Mat2 m = make_mat(f, a, b, c, d);
          set.all.push_back(m);
          set.classes.push_back(classify(m));
        }
  return set;
}

/// Builds Id(R) directly from the eight families.
inline IdempotentSet enumerate_constructive(const Field& field) {
  const FieldSpec& f = *field;
  const auto elems = elements(f);
  std::vector<std::pair<Mat2, IdempotentClass>> items;
  items.reserve(expected_idempotent_count(f.order()));

  items.emplace_back(zero(f), IdempotentClass::P0);
  items.emplace_back(identity(f), IdempotentClass::P0);
  items.emplace_back(unit(f, 1, 1), IdempotentClass::P1);
  items.emplace_back(unit(f, 2, 2), IdempotentClass::P2);
  for (const Fq& t : elems) {
    if (t.is_zero()) continue;
    items.emplace_back(family::p3(t), IdempotentClass::P3);
    items.emplace_back(family::p4(t), IdempotentClass::P4);
    items.emplace_back(family::p5(t), IdempotentClass::P5);
    items.emplace_back(family::p6(t), IdempotentClass::P6);
  }
  for (const Fq& a : elems) {
    if (a.is_zero() || a.is_one()) continue;
    for (const Fq& b : elems)
      if (!b.is_zero()) items.emplace_back(family::p7(a, b), IdempotentClass::P7);
  }
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.first.id() < y.first.id(); });

  IdempotentSet set{field, {}, {}};
  set.all.reserve(items.size());
  set.classes.reserve(items.size());
  for (auto& [m, c] : items) {
    set.all.push_back(m);
    set.classes.push_back(c);
  }
  return set;
}

}  // namespace idemgraph
