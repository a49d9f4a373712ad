#pragma once

// Exact arithmetic in GF(p^k).
//
// An element is stored as its canonical representative: the coefficient
// vector (c0, ..., c_{k-1}) of the residue polynomial read as a base-p
// integer, c0 being the least significant digit. Representatives therefore
// lie in [0, q) and 0/1 encode the additive/multiplicative identities.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "idemgraph/error.hpp"

namespace idemgraph {

using Rep = std::uint32_t;

/// Largest supported field order. Keeps q^4 (the number of 2x2 matrices)
/// inside a 64-bit matrix id.
inline constexpr std::uint64_t kMaxFieldOrder = 65535;

namespace poly {

// Polynomials over Z_p as coefficient vectors, constant term first.
using Poly = std::vector<Rep>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

/// Remainder of f modulo a monic divisor g.
inline Poly remainder(Poly f, const Poly& g, Rep p) {
  const int dg = degree(g);
  for (int df = degree(f); df >= dg; df = degree(f)) {
    const Rep lead = f[df];
    const int shift = df - dg;
    for (int i = 0; i <= dg; ++i) {
      auto& coef = f[i + shift];
      coef = static_cast<Rep>((coef + static_cast<std::uint64_t>(p - lead) * g[i]) % p);
    }
  }
  trim(f);
  return f;
}

inline Rep evaluate(const Poly& f, Rep x, Rep p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return static_cast<Rep>(acc);
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `index` (c0 least significant).
inline Poly monic_from_index(std::uint64_t index, int deg, Rep p) {
  Poly f(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[i] = static_cast<Rep>(index % p);
    index /= p;
  }
  f[deg] = 1;
  return f;
}

/// Exhaustive irreducibility test for a monic polynomial: no root in Z_p
/// and no monic divisor of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, Rep p) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  for (Rep x = 0; x < p; ++x)
    if (evaluate(f, x, p) == 0) return false;
  for (int d = 2; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (remainder(f, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace poly

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Parses "c0,c1,..." (constant term first). Whitespace around entries is
/// ignored; an empty entry or a non-digit character is rejected.
inline std::vector<Rep> parse_coefficients(std::string_view text) {
  std::vector<Rep> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw Error(ErrorKind::MalformedModulus, "empty coefficient in \"" + std::string(text) + "\"");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw Error(ErrorKind::MalformedModulus, "bad coefficient \"" + item + "\"");
    out.push_back(static_cast<Rep>(std::stoul(item)));
  }
  if (out.empty()) throw Error(ErrorKind::MalformedModulus, "no coefficients");
  return out;
}

inline std::string format_coefficients(std::span<const Rep> coeffs) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs[i]);
  }
  return s;
}

/// A validated finite field GF(p^k). Immutable once built; share it through
/// the `Field` handle.
class FieldSpec {
 public:
  Rep p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  Rep order() const noexcept { return q_; }
  const std::vector<Rep>& modulus() const noexcept { return modulus_; }

  /// Same field iff (p, k, modulus) agree; no isomorphism detection.
  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  std::vector<Rep> decode(Rep rep) const {
    std::vector<Rep> digits(k_);
    for (int i = 0; i < k_; ++i) {
      digits[i] = rep % p_;
      rep /= p_;
    }
    return digits;
  }

  Rep encode(std::span<const Rep> digits) const {
    Rep rep = 0;
    for (std::size_t i = digits.size(); i-- > 0;) rep = rep * p_ + digits[i];
    return rep;
  }

  Rep add(Rep x, Rep y) const {
    if (!add_table_.empty()) return add_table_[index(x, y)];
    return add_direct(x, y);
  }

  Rep neg(Rep x) const { return neg_table_[x]; }

  Rep sub(Rep x, Rep y) const { return add(x, neg(y)); }

  Rep mul(Rep x, Rep y) const {
    if (!mul_table_.empty()) return mul_table_[index(x, y)];
    return mul_direct(x, y);
  }

  /// Multiplicative inverse; DivisionByZero for 0.
  Rep inv(Rep x) const {
    if (x == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return inv_table_[x];
  }

  /// Builds and validates a field. See make_field for the public entry point.
  static std::shared_ptr<const FieldSpec> create(std::uint64_t p, std::int64_t k,
                                                 std::optional<std::vector<Rep>> modulus) {
    if (p > kMaxFieldOrder)
      throw Error(ErrorKind::FieldTooLarge, "order exceeds " + std::to_string(kMaxFieldOrder));
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::int64_t i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxFieldOrder)
        throw Error(ErrorKind::FieldTooLarge,
                    "order exceeds " + std::to_string(kMaxFieldOrder));
    }
    const auto prime = static_cast<Rep>(p);
    const int deg = static_cast<int>(k);

    std::vector<Rep> mod;
    if (modulus) {
      mod = *modulus;
      if (mod.size() != static_cast<std::size_t>(deg) + 1)
        throw Error(ErrorKind::DegreeMismatch,
                    "modulus has " + std::to_string(mod.size()) + " coefficients, expected " +
                        std::to_string(deg + 1));
      for (Rep c : mod)
        if (c >= prime)
          throw Error(ErrorKind::MalformedModulus,
                      "coefficient " + std::to_string(c) + " not reduced mod " + std::to_string(p));
      if (mod.back() != 1) throw Error(ErrorKind::MalformedModulus, "modulus is not monic");
      if (!poly::is_irreducible(mod, prime))
        throw Error(ErrorKind::ReducibleModulus, format_coefficients(mod) + " is reducible");
    }
    if (deg == 1) {
      mod = {0, 1};
    } else if (!modulus) {
      mod = smallest_irreducible(prime, deg, q);
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec(prime, deg, static_cast<Rep>(q), std::move(mod)));
    spec->build_tables();
    return spec;
  }

  /// Lexicographically smallest monic irreducible polynomial of degree k,
  /// comparing coefficients from the constant term upward.
  static std::vector<Rep> smallest_irreducible(Rep p, int k, std::uint64_t count) {
    std::vector<Rep> f(k + 1, 0);
    f[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      // c0 is the most significant digit of idx in this enumeration.
      std::uint64_t rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        f[i] = static_cast<Rep>(rest % p);
        rest /= p;
      }
      if (poly::is_irreducible(f, p)) return f;
    }
    throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
  }

 private:
  FieldSpec(Rep p, int k, Rep q, std::vector<Rep> modulus)
      : p_(p), k_(k), q_(q), modulus_(std::move(modulus)) {}

  static constexpr Rep kTableLimit = 1024;

  std::size_t index(Rep x, Rep y) const { return static_cast<std::size_t>(x) * q_ + y; }

  Rep add_direct(Rep x, Rep y) const {
    Rep out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      out += ((x % p_ + y % p_) % p_) * scale;
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return out;
  }

  Rep neg_direct(Rep x) const {
    Rep out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      out += ((p_ - x % p_) % p_) * scale;
      x /= p_;
      scale *= p_;
    }
    return out;
  }

  Rep mul_direct(Rep x, Rep y) const {
    if (k_ == 1) return static_cast<Rep>(static_cast<std::uint64_t>(x) * y % p_);
    const auto a = decode(x);
    const auto b = decode(y);
    poly::Poly prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        prod[i + j] = static_cast<Rep>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
    auto r = poly::remainder(std::move(prod), modulus_, p_);
    r.resize(k_, 0);
    return encode(r);
  }

  Rep pow_direct(Rep x, std::uint64_t e) const {
    Rep result = 1;
    while (e) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  }

  void build_tables() {
    if (q_ <= kTableLimit) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      mul_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (Rep x = 0; x < q_; ++x)
        for (Rep y = 0; y < q_; ++y) {
          add_table_[index(x, y)] = add_direct(x, y);
          mul_table_[index(x, y)] = mul_direct(x, y);
        }
    }
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    for (Rep x = 0; x < q_; ++x) neg_table_[x] = neg_direct(x);
    // Fermat: x^(q-2) = x^-1 in a field of order q.
    for (Rep x = 1; x < q_; ++x) inv_table_[x] = pow_direct(x, q_ - 2);
  }

  Rep p_;
  int k_;
  Rep q_;
  std::vector<Rep> modulus_;
  std::vector<Rep> add_table_;
  std::vector<Rep> mul_table_;
  std::vector<Rep> neg_table_;
  std::vector<Rep> inv_table_;
};

using Field = std::shared_ptr<const FieldSpec>;

/// Constructs GF(p^k). Without an explicit modulus (and k > 1) the
/// lexicographically smallest monic irreducible of degree k is chosen so
/// element encodings are reproducible. For k = 1 the modulus is X.
inline Field make_field(std::uint64_t p, std::int64_t k,
                        std::optional<std::vector<Rep>> modulus = std::nullopt) {
  return FieldSpec::create(p, k, std::move(modulus));
}

inline bool same_field(const FieldSpec* a, const FieldSpec* b) {
  return a == b || (a && b && *a == *b);
}

/// A field element. Holds a non-owning pointer to its FieldSpec, which must
/// outlive it.
class Fq {
 public:
  Fq() = default;
  Fq(const FieldSpec& spec, Rep rep) : spec_(&spec), rep_(rep) {
    if (rep >= spec.order())
      throw std::out_of_range("representative " + std::to_string(rep) + " out of range");
  }

  Rep rep() const noexcept { return rep_; }
  const FieldSpec& spec() const noexcept { return *spec_; }
  bool is_zero() const noexcept { return rep_ == 0; }
  bool is_one() const noexcept { return rep_ == 1; }

  Fq zero() const { return Fq(*spec_, 0); }
  Fq one() const { return Fq(*spec_, 1); }

  Fq operator+(const Fq& y) const { return {*spec_, spec_->add(rep_, checked(y))}; }
  Fq operator-(const Fq& y) const { return {*spec_, spec_->sub(rep_, checked(y))}; }
  Fq operator*(const Fq& y) const { return {*spec_, spec_->mul(rep_, checked(y))}; }
  Fq operator/(const Fq& y) const { return {*spec_, spec_->mul(rep_, spec_->inv(checked(y)))}; }
  Fq operator-() const { return {*spec_, spec_->neg(rep_)}; }
  Fq inverse() const { return {*spec_, spec_->inv(rep_)}; }

  Fq& operator+=(const Fq& y) { return *this = *this + y; }
  Fq& operator-=(const Fq& y) { return *this = *this - y; }
  Fq& operator*=(const Fq& y) { return *this = *this * y; }

  /// Equality across fields is a FieldMismatch rather than false.
  bool operator==(const Fq& y) const { return rep_ == checked(y); }
  auto operator<=>(const Fq& y) const { return rep_ <=> checked(y); }

 private:
  Rep checked(const Fq& y) const {
    if (!same_field(spec_, y.spec_)) throw Error(ErrorKind::FieldMismatch, "operands from different fields");
    return y.rep_;
  }

  const FieldSpec* spec_ = nullptr;
  Rep rep_ = 0;
};

inline Fq add(const Fq& x, const Fq& y) { return x + y; }
inline Fq neg(const Fq& x) { return -x; }
inline Fq mul(const Fq& x, const Fq& y) { return x * y; }
inline Fq inv(const Fq& x) { return x.inverse(); }

/// All q elements in increasing representative order.
inline std::vector<Fq> elements(const FieldSpec& spec) {
  std::vector<Fq> out;
  out.reserve(spec.order());
  for (Rep r = 0; r < spec.order(); ++r) out.emplace_back(spec, r);
  return out;
}

inline std::string describe(const FieldSpec& spec) {
  std::string s = "GF(" + std::to_string(spec.p());
  if (spec.k() > 1) s += "^" + std::to_string(spec.k());
  s += ")";
  return s;
}

}  // namespace idemgraph
