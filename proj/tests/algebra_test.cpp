#include <gtest/gtest.h>

#include <set>

#include "idemgraph/idempotents.hpp"
#include "oracle.hpp"

using namespace idemgraph;

namespace {

const std::vector<std::pair<std::uint64_t, int>> kFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                            {2, 3}, {3, 2}, {11, 1}, {13, 1}};

oracle::RefField ref_of(const FieldSpec& f) {
  return {static_cast<int>(f.p()), oracle::Poly(f.modulus().begin(), f.modulus().end())};
}

}  // namespace

TEST(Matrix, UnitProducts) {
  auto f = make_field(3, 1);
  const Mat2 e11 = unit(*f, 1, 1), e22 = unit(*f, 2, 2), e12 = unit(*f, 1, 2);
  EXPECT_TRUE((e11 * e22).is_zero());
  EXPECT_EQ(e11 * e12, e12);
  EXPECT_TRUE((e12 * e11).is_zero());
  EXPECT_EQ(e11 + e22, identity(*f));
  EXPECT_EQ(to_string(e12), "[[0,1],[0,0]]");
}

TEST(Matrix, DeterminantIsMultiplicative) {
  auto f = make_field(2, 2);
  const auto q = f->order();
  for (MatId x = 0; x < q * q * q * q; x += 7)
    for (MatId y = 0; y < q * q * q * q; y += 11) {
      const Mat2 a = mat_from_id(*f, x), b = mat_from_id(*f, y);
      EXPECT_EQ(det(a * b), det(a) * det(b));
      EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
    }
}

TEST(Matrix, CanonicalIdIsBijective) {
  auto f = make_field(3, 1);
  std::set<MatId> seen;
  for (MatId x = 0; x < 81; ++x) {
    const Mat2 m = mat_from_id(*f, x);
    EXPECT_EQ(m.id(), x);
    seen.insert(m.id());
  }
  EXPECT_EQ(seen.size(), 81u);
  EXPECT_EQ(make_mat(*f, 1, 2, 0, 1).id(), ((1u * 3 + 2) * 3 + 0) * 3 + 1);
}

TEST(Matrix, ProductMatchesOracle) {
  auto f = make_field(3, 2);
  const auto ref = ref_of(*f);
  for (MatId x = 0; x < 6561; x += 37)
    for (MatId y = 0; y < 6561; y += 53) {
      const Mat2 a = mat_from_id(*f, x), b = mat_from_id(*f, y);
      const oracle::M ra{int(a.a.rep()), int(a.b.rep()), int(a.c.rep()), int(a.d.rep())};
      const oracle::M rb{int(b.a.rep()), int(b.b.rep()), int(b.c.rep()), int(b.d.rep())};
      EXPECT_EQ((a * b).id(), oracle::id(ref, oracle::matmul(ref, ra, rb)));
    }
}

TEST(Idempotents, CountsAndBothEnumerators) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const auto q = f->order();
    const auto brute = enumerate_bruteforce(f);
    const auto built = enumerate_constructive(f);
    EXPECT_EQ(brute.all.size(), q * q + q + 2);
    EXPECT_EQ(brute, built);
    const auto ref = oracle::idempotents(ref_of(*f));
    ASSERT_EQ(ref.size(), built.all.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(built.all[i].id(), oracle::id(ref_of(*f), ref[i]));
  }
  EXPECT_EQ(enumerate_constructive(make_field(2, 1)).all.size(), 8u);
  EXPECT_EQ(enumerate_constructive(make_field(3, 1)).all.size(), 14u);
  EXPECT_EQ(enumerate_constructive(make_field(2, 2)).all.size(), 22u);
}

TEST(Idempotents, ClassSizes) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    const auto q = f->order();
    const auto sizes = enumerate_constructive(f).class_sizes();
    const std::array<std::uint64_t, 8> want = {2, 1, 1, q - 1, q - 1, q - 1, q - 1, (q - 2) * (q - 1)};
    EXPECT_EQ(sizes, want) << "q=" << q;
  }
}

TEST(Idempotents, EveryNontrivialHasTraceOneDetZero) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    for (const auto& m : enumerate_constructive(f).nontrivial()) {
      EXPECT_TRUE(trace(m).is_one());
      EXPECT_TRUE(det(m).is_zero());
      EXPECT_EQ((m.b.is_zero() || m.c.is_zero()), classify(m) != IdempotentClass::P7);
    }
  }
}

TEST(Idempotents, Classify) {
  auto f2 = make_field(2, 1);
  EXPECT_EQ(classify(make_mat(*f2, 0, 0, 1, 1)), IdempotentClass::P3);
  EXPECT_EQ(classify(make_mat(*f2, 0, 1, 0, 1)), IdempotentClass::P4);
  EXPECT_EQ(classify(make_mat(*f2, 1, 0, 1, 0)), IdempotentClass::P5);
  EXPECT_EQ(classify(make_mat(*f2, 1, 1, 0, 0)), IdempotentClass::P6);
  EXPECT_EQ(classify(identity(*f2)), IdempotentClass::P0);
  auto f3 = make_field(3, 1);
  EXPECT_EQ(classify(make_mat(*f3, 2, 1, 1, 2)), IdempotentClass::P7);
  EXPECT_EQ(classify(make_mat(*f3, 2, 2, 2, 2)), IdempotentClass::P7);
  try {
    classify(make_mat(*f3, 1, 1, 1, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIdempotent);
  }
}

TEST(Idempotents, P7Family) {
  auto f = make_field(5, 1);
  const Fq a(*f, 2), b(*f, 3);
  const Mat2 m = family::p7(a, b);
  // c = a(1 - a)/b = 2 * 4 / 3 = 8 * 2 = 1 mod 5
  EXPECT_EQ(m, make_mat(*f, 2, 3, 1, 4));
  EXPECT_TRUE(is_idempotent(m));
}

TEST(Idempotents, ComplementIsOrthogonal) {
  for (auto [p, k] : kFields) {
    auto f = make_field(p, k);
    for (const auto& e : enumerate_constructive(f).all) {
      const Mat2 c = complement(e);
      EXPECT_TRUE(is_idempotent(c));
      EXPECT_TRUE((e * c).is_zero());
      EXPECT_TRUE((c * e).is_zero());
      EXPECT_EQ(complement(c), e);
    }
  }
  auto f3 = make_field(3, 1);
  EXPECT_EQ(complement(make_mat(*f3, 2, 1, 1, 2)), make_mat(*f3, 2, 2, 2, 2));
}

TEST(Idempotents, OrthogonalPartnerIsUnique) {
  auto f = make_field(5, 1);
  const auto set = enumerate_constructive(f);
  for (const auto& e : set.nontrivial()) {
    int partners = 0;
    for (const auto& a : set.all)
      if (!a.is_zero() && (e * a).is_zero() && (a * e).is_zero()) {
        ++partners;
        EXPECT_EQ(a, complement(e));
      }
    EXPECT_EQ(partners, 1);
  }
}

TEST(Idempotents, BruteForceCap) {
  auto f = make_field(7, 1);
  try {
    enumerate_bruteforce(f, 2400);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_EQ(enumerate_bruteforce(f, 2401).all.size(), 58u);
}

TEST(Idempotents, LargeFieldConstructiveCount) {
  auto f = make_field(2, 6);
  const auto set = enumerate_constructive(f);
  EXPECT_EQ(set.all.size(), 64u * 64 + 64 + 2);
  for (std::size_t i = 0; i < set.all.size(); i += 97) EXPECT_TRUE(is_idempotent(set.all[i]));
}
