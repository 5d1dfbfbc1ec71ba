#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ringloc/construct.hpp"
#include "ringloc/ring.hpp"

using namespace ringloc;
using fx::ids;
using fx::ring;

namespace {

RawTables zn_tables(long long n) {
  RawTables raw;
  raw.one = 1;
  raw.add.assign(n, std::vector<long long>(n));
  raw.mul.assign(n, std::vector<long long>(n));
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b) {
      raw.add[a][b] = (a + b) % n;
      raw.mul[a][b] = (a * b) % n;
    }
  return raw;
}

bool mentions(const ValidationReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST(ValidateRing, Z4TablesPass) {
  ValidationReport r = validate_ring(zn_tables(4));
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.violations.empty());
}

TEST(ValidateRing, CorruptedProductIsCaught) {
  RawTables raw = zn_tables(4);
  raw.mul[2][2] = 1;
  ValidationReport r = validate_ring(raw);
  ASSERT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "mul_associative") || mentions(r, "left_distributive") ||
              mentions(r, "right_distributive"));
  for (const auto& v : r.violations) EXPECT_FALSE(v.witness.empty());
}

TEST(ValidateRing, ZeroRingRejectedAsInput) {
  RawTables raw;
  raw.one = 0;
  raw.add = {{0}};
  raw.mul = {{0}};
  EXPECT_THROW(validate_ring(raw), InputError);
}

TEST(ValidateRing, MalformedTablesAreInputErrors) {
  RawTables raw = zn_tables(3);
  raw.add[1].pop_back();
  EXPECT_THROW(validate_ring(raw), InputError);
  raw = zn_tables(3);
  raw.mul[0][0] = 7;
  EXPECT_THROW(validate_ring(raw), InputError);
  raw = zn_tables(3);
  raw.one = 0;
  EXPECT_THROW(validate_ring(raw), InputError);
}

TEST(ValidateRing, MakeThrowsValidationError) {
  RawTables raw = zn_tables(4);
  raw.add[1][1] = 3;
  EXPECT_THROW(FiniteRing::make(raw), ValidationError);
}

TEST(Construct, FixtureOrders) {
  FiniteRing z6 = ring("Zn(6)");
  EXPECT_EQ(z6.order(), 6u);
  EXPECT_EQ(z6.one(), 1);
  EXPECT_EQ(ring("Tri(2, Zn(2))").order(), 8u);
  EXPECT_EQ(ring("Mat(2, Zn(2))").order(), 16u);
  EXPECT_EQ(ring("Prod(Zn(2),Zn(3))").order(), 6u);
  EXPECT_EQ(ring("Quot(Zn(8), [4])").order(), 4u);
  EXPECT_EQ(ring("Tri(2, Zn(2))").source(), "Tri(2, Zn(2))");
}

TEST(Construct, Errors) {
  EXPECT_THROW(construct("Zn(0)"), ParseError);
  EXPECT_THROW(construct("Quot(Zn(6), [9])"), InputError);
  EXPECT_THROW(construct("Quot(Zn(6), [1])"), InputError);
  EXPECT_THROW(construct("Mat(3, Zn(3))"), ResourceError);
  Limits small;
  small.order_cap = 8;
  EXPECT_THROW(construct("Mat(2, Zn(2))", small), ResourceError);
}

TEST(Construct, MatricesMatchDirectArithmetic) {
  struct Case {
    const char* expr;
    std::size_t k;
    long long p;
    bool tri;
  };
  for (Case c : {Case{"Tri(2, Zn(2))", 2, 2, true}, Case{"Mat(2, Zn(2))", 2, 2, false},
                 Case{"Tri(2, Zn(3))", 2, 3, true}, Case{"Mat(2, Zn(3))", 2, 3, false},
                 Case{"Tri(3, Zn(2))", 3, 2, true}}) {
    FiniteRing R = ring(c.expr);
    for (std::size_t x = 0; x < R.order(); ++x)
      for (std::size_t y = 0; y < R.order(); ++y) {
        oracle::Matrix a = oracle::decode(x, c.k, c.p, c.tri);
        oracle::Matrix b = oracle::decode(y, c.k, c.p, c.tri);
        ASSERT_EQ(oracle::decode(R.mul(Elem(x), Elem(y)), c.k, c.p, c.tri).a, (a * b).a) << c.expr;
        ASSERT_EQ(oracle::decode(R.add(Elem(x), Elem(y)), c.k, c.p, c.tri).a, (a + b).a) << c.expr;
      }
    oracle::Matrix one = oracle::decode(R.one(), c.k, c.p, c.tri);
    for (std::size_t i = 0; i < c.k; ++i)
      for (std::size_t j = 0; j < c.k; ++j) EXPECT_EQ(one.at(i, j), i == j ? 1 : 0);
  }
}

TEST(Elements, RegularElementsAndUnits) {
  EXPECT_EQ(ids(regular_elements(ring("Zn(4)"))), (std::vector<Elem>{1, 3}));
  EXPECT_EQ(ids(regular_elements(ring("Zn(6)"))), (std::vector<Elem>{1, 5}));
  EXPECT_EQ(regular_elements(ring("Mat(2, Zn(2))")).size(), 6u);
  EXPECT_EQ(ids(units(ring("Zn(6)"))), (std::vector<Elem>{1, 5}));
  EXPECT_EQ(ids(units(ring("Tri(2, Zn(2))"))), (std::vector<Elem>{fx::t2::I, fx::t2::I_e12}));
  EXPECT_EQ(ids(units(ring("Zn(2)"))), (std::vector<Elem>{1}));
}

TEST(Elements, RegularEqualsUnitsEverywhere) {
  for (const char* e : {"Zn(12)", "Tri(2, Zn(3))", "Mat(2, Zn(2))", "Prod(Zn(4), Zn(3))",
                        "Quot(Tri(2, Zn(4)), [2])", "Op(Tri(3, Zn(2)))"}) {
    FiniteRing R = ring(e);
    EXPECT_EQ(regular_elements(R), units(R)) << e;
    EXPECT_EQ(ids(units(R)), oracle::units(R)) << e;
  }
}

TEST(Elements, OppositeTwiceIsIdentity) {
  for (const char* e : {"Tri(2, Zn(2))", "Mat(2, Zn(2))", "Tri(2, Zn(3))"}) {
    FiniteRing R = ring(e);
    EXPECT_TRUE(same_tables(opposite(opposite(R)), R)) << e;
  }
  FiniteRing T = ring("Tri(2, Zn(2))");
  EXPECT_FALSE(same_tables(opposite(T), T));
}

TEST(Elements, ProductUnitsAreProducts) {
  FiniteRing A = ring("Zn(4)"), B = ring("Zn(6)");
  FiniteRing P = ring("Prod(Zn(4), Zn(6))");
  ElementSet expected(P.order());
  for (Elem a : units(A).elements())
    for (Elem b : units(B).elements()) expected.insert(Elem(a * B.order() + b));
  EXPECT_EQ(units(P), expected);
}

TEST(Elements, Characteristic) {
  EXPECT_EQ(characteristic(ring("Zn(12)")), 12u);
  EXPECT_EQ(characteristic(ring("Mat(2, Zn(3))")), 3u);
  EXPECT_EQ(characteristic(ring("Prod(Zn(2), Zn(3))")), 6u);
}

TEST(HomCheck, Examples) {
  FiniteRing z6 = ring("Zn(6)"), z4 = ring("Zn(4)"), z2 = ring("Zn(2)");
  EXPECT_TRUE(hom_check(identity_hom(z6).map, z6, z6).ok);
  EXPECT_TRUE(hom_check({0, 1, 0, 1}, z4, z2).ok);
  ValidationReport bad = hom_check({0, 0, 0, 0}, z4, z2);
  ASSERT_FALSE(bad.ok);
  EXPECT_EQ(bad.violations.front().axiom, "map(one)=one");
  EXPECT_THROW(hom_check({0, 1}, z4, z2), InputError);
  EXPECT_THROW(make_hom(z4, z2, {0, 0, 0, 0}), InvariantError);
}

TEST(HomCheck, KernelImagePreimage) {
  FiniteRing z4 = ring("Zn(4)"), z2 = ring("Zn(2)");
  RingHom f = make_hom(z4, z2, {0, 1, 0, 1});
  EXPECT_EQ(ids(f.kernel().elements), (std::vector<Elem>{0, 2}));
  EXPECT_TRUE(f.surjective());
  EXPECT_EQ(ids(f.preimage(ElementSet(2, {1}))), (std::vector<Elem>{1, 3}));
}

TEST(ElementSetTest, OrderAndOperations) {
  ElementSet a(8, {1, 3}), b(8, {0, 5, 6}), c(8, {2, 3});
  EXPECT_TRUE(a < b);  // smaller size first
  EXPECT_TRUE(a < c);  // then lexicographic
  EXPECT_EQ((a | c).elements(), (std::vector<Elem>{1, 2, 3}));
  EXPECT_EQ((a & c).elements(), (std::vector<Elem>{3}));
  EXPECT_EQ((a - c).elements(), (std::vector<Elem>{1}));
  EXPECT_EQ(a.complement().size(), 6u);
  EXPECT_THROW(a.insert(8), InputError);
}
