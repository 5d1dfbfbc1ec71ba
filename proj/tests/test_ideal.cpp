#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ringloc/ideal.hpp"

using namespace ringloc;
using fx::ids;
using fx::ring;
using fx::set;

namespace {

const char* const kSmallRings[] = {
    "Zn(2)", "Zn(4)", "Zn(6)", "Zn(8)", "Zn(9)", "Zn(12)", "Zn(16)",
    "Tri(2, Zn(2))", "Mat(2, Zn(2))", "Prod(Zn(2), Zn(2))", "Prod(Zn(2), Zn(4))",
    "Prod(Zn(4), Zn(4))", "Quot(Zn(16), [4])", "Op(Tri(2, Zn(2)))", "Quot(Tri(2, Zn(4)), [2])"};

std::vector<std::vector<Elem>> as_sets(const std::vector<Ideal>& ideals) {
  std::vector<std::vector<Elem>> out;
  for (const Ideal& I : ideals) out.push_back(I.elements.elements());
  return out;
}

}  // namespace

TEST(IdealGenerated, Examples) {
  FiniteRing z6 = ring("Zn(6)");
  EXPECT_EQ(ids(ideal_generated(z6, set(z6, {2})).elements), (std::vector<Elem>{0, 2, 4}));
  EXPECT_EQ(ids(ideal_generated(z6, ElementSet(6)).elements), (std::vector<Elem>{0}));
  FiniteRing t2 = ring("Tri(2, Zn(2))");
  EXPECT_EQ(ids(ideal_generated(t2, set(t2, {fx::t2::e12})).elements),
            (std::vector<Elem>{0, fx::t2::e12}));
}

TEST(IdealGenerated, OneSidedInT2) {
  FiniteRing t2 = ring("Tri(2, Zn(2))");
  Ideal left = ideal_generated(t2, set(t2, {fx::t2::e11}), Side::left);
  Ideal right = ideal_generated(t2, set(t2, {fx::t2::e11}), Side::right);
  // R e11 = {[[a,0],[0,0]]}, e11 R = first row.
  EXPECT_EQ(ids(left.elements), (std::vector<Elem>{0, 4}));
  EXPECT_EQ(ids(right.elements), (std::vector<Elem>{0, 2, 4, 6}));
  EXPECT_TRUE(is_ideal(t2, left.elements, Side::left));
  EXPECT_FALSE(is_ideal(t2, left.elements, Side::right));
}

TEST(Primality, Examples) {
  FiniteRing z6 = ring("Zn(6)"), z4 = ring("Zn(4)"), m2 = ring("Mat(2, Zn(2))");
  EXPECT_TRUE(is_prime(z6, Ideal{set(z6, {0, 2, 4})}));
  Witnessed w = is_prime(z4, zero_ideal(z4));
  EXPECT_FALSE(w);
  EXPECT_EQ(w.witness, (std::vector<Elem>{2, 2}));
  EXPECT_TRUE(is_prime(m2, zero_ideal(m2)));
  EXPECT_THROW(is_prime(z4, unit_ideal(z4)), InputError);
}

TEST(Semiprime, Examples) {
  FiniteRing z6 = ring("Zn(6)"), z4 = ring("Zn(4)");
  EXPECT_TRUE(is_semiprime(z6, zero_ideal(z6)));
  Witnessed w = is_semiprime(z4, zero_ideal(z4));
  EXPECT_FALSE(w);
  EXPECT_EQ(w.witness, (std::vector<Elem>{2}));
  EXPECT_TRUE(is_semiprime(z4, Ideal{set(z4, {0, 2})}));
}

TEST(MinimalPrimes, Examples) {
  using V = std::vector<std::vector<Elem>>;
  EXPECT_EQ(as_sets(minimal_primes(ring("Zn(6)"))), (V{{0, 3}, {0, 2, 4}}));
  EXPECT_EQ(as_sets(minimal_primes(ring("Zn(4)"))), (V{{0, 2}}));
  EXPECT_EQ(as_sets(minimal_primes(ring("Tri(2, Zn(2))"))), (V{{0, 1, 2, 3}, {0, 2, 4, 6}}));
}

TEST(MinimalPrimes, IdealCapOverflow) {
  Limits tiny;
  tiny.ideal_cap = 3;
  try {
    minimal_primes(ring("Prod(Zn(4), Zn(4))"), tiny);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.partial_count(), 3u);
  }
}

TEST(PrimeRadical, Examples) {
  RadicalData z4 = prime_radical(ring("Zn(4)"));
  EXPECT_EQ(ids(z4.radical.elements), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(z4.nu, 1u);

  RadicalData z8 = prime_radical(ring("Zn(8)"));
  EXPECT_EQ(ids(z8.radical.elements), (std::vector<Elem>{0, 2, 4, 6}));
  EXPECT_EQ(z8.nu, 2u);
  ASSERT_EQ(z8.powers.size(), 4u);
  EXPECT_EQ(ids(z8.powers[2].elements), (std::vector<Elem>{0, 4}));
  EXPECT_EQ(ids(z8.powers[3].elements), (std::vector<Elem>{0}));
  EXPECT_EQ(z8.degree(6), 1u);
  EXPECT_EQ(z8.degree(4), 2u);
  EXPECT_EQ(z8.degree(3), 0u);
  EXPECT_EQ(z8.degree(0), 3u);

  RadicalData m2 = prime_radical(ring("Mat(2, Zn(2))"));
  EXPECT_EQ(m2.radical.size(), 1u);
  EXPECT_EQ(m2.nu, 0u);
  EXPECT_EQ(m2.powers.size(), 2u);
}

TEST(PrimeRadical, MatchesOracles) {
  for (const char* e : kSmallRings) {
    FiniteRing R = ring(e);
    std::vector<oracle::Set> all = oracle::all_ideals(R);
    EXPECT_EQ(as_sets(enumerate_ideals(R)).size(), all.size()) << e;
    std::vector<oracle::Set> listed = as_sets(enumerate_ideals(R));
    std::sort(listed.begin(), listed.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(listed, all) << e;

    std::vector<oracle::Set> mins = oracle::minimal(oracle::prime_ideals(R, all));
    std::vector<oracle::Set> ours = as_sets(minimal_primes(R));
    std::sort(mins.begin(), mins.end());
    std::sort(ours.begin(), ours.end());
    EXPECT_EQ(ours, mins) << e;

    EXPECT_EQ(ids(prime_radical(R).radical.elements), oracle::radical(R)) << e;
  }
}

TEST(PrimeRadical, PowersDescendToZero) {
  for (const char* e : kSmallRings) {
    RadicalData d = prime_radical(ring(e));
    ASSERT_EQ(d.powers.size(), d.nu + 2) << e;
    EXPECT_EQ(d.powers.back().size(), 1u) << e;
    for (std::size_t i = 0; i + 1 < d.powers.size(); ++i)
      EXPECT_LT(d.powers[i + 1].size(), d.powers[i].size()) << e;
  }
}

TEST(QuotientRing, Examples) {
  FiniteRing z6 = ring("Zn(6)"), z4 = ring("Zn(4)");
  QuotientResult q = quotient_ring(z6, Ideal{set(z6, {0, 2, 4})});
  EXPECT_EQ(q.ring.order(), 2u);
  EXPECT_EQ(ids(q.projection.kernel().elements), (std::vector<Elem>{0, 2, 4}));
  EXPECT_EQ(quotient_ring(z4, Ideal{set(z4, {0, 2})}).ring.order(), 2u);

  QuotientResult id = quotient_ring(z6, zero_ideal(z6));
  EXPECT_TRUE(same_tables(id.ring, z6));
  for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(id.projection.map[x], Elem(x));

  FiniteRing t2 = ring("Tri(2, Zn(2))");
  Ideal left = ideal_generated(t2, set(t2, {fx::t2::e11}), Side::left);
  EXPECT_THROW(quotient_ring(t2, left), InputError);
}

TEST(QuotientRing, ModRadicalIsSemiprime) {
  for (const char* e : kSmallRings) {
    FiniteRing R = ring(e);
    QuotientResult q = quotient_ring(R, prime_radical(R).radical);
    EXPECT_TRUE(is_semiprime(q.ring, zero_ideal(q.ring))) << e;
    EXPECT_EQ(q.projection.kernel().elements, prime_radical(R).radical.elements) << e;
  }
}

TEST(Blocks, Examples) {
  BlockDecomposition z6 = block_decomposition(ring("Zn(6)"));
  EXPECT_EQ(z6.s, 2u);
  EXPECT_EQ(z6.idempotents, (std::vector<Elem>{3, 4}));
  std::vector<std::size_t> orders{z6.blocks[0].order(), z6.blocks[1].order()};
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{2, 3}));

  FiniteRing t2 = ring("Tri(2, Zn(2))");
  QuotientResult q = quotient_ring(t2, prime_radical(t2).radical);
  EXPECT_EQ(q.ring.order(), 4u);
  EXPECT_EQ(block_decomposition(q.ring).s, 2u);

  EXPECT_EQ(block_decomposition(ring("Mat(2, Zn(2))")).s, 1u);
  EXPECT_THROW(block_decomposition(ring("Zn(4)")), PreconditionError);
}

TEST(Blocks, IdempotentAxiomsAndOrders) {
  for (const char* e : kSmallRings) {
    SemisimpleQuotient sq = semisimple_quotient(ring(e));
    const FiniteRing& Rb = sq.quotient.ring;
    const BlockDecomposition& b = sq.blocks;
    Elem sum = 0;
    std::size_t product = 1;
    for (std::size_t i = 0; i < b.s; ++i) {
      Elem ei = b.idempotents[i];
      EXPECT_EQ(Rb.mul(ei, ei), ei) << e;
      EXPECT_TRUE(is_central(Rb, ei)) << e;
      for (std::size_t j = 0; j < b.s; ++j)
        if (i != j) {
          EXPECT_EQ(Rb.mul(ei, b.idempotents[j]), 0) << e;
        }
      EXPECT_TRUE(is_simple(b.blocks[i])) << e;
      sum = Rb.add(sum, ei);
      product *= b.blocks[i].order();
    }
    EXPECT_EQ(sum, Rb.one()) << e;
    EXPECT_EQ(product, Rb.order()) << e;
  }
}

TEST(PrimeRadical, MatchesJacobsonOnLargerRings) {
  for (const char* e : {"Tri(2, Zn(3))", "Tri(3, Zn(2))", "Op(Tri(3, Zn(2)))", "Mat(2, Zn(3))",
                        "Zn(27)", "Tri(2, Zn(4))", "Prod(Zn(4), Tri(2, Zn(2)))"}) {
    FiniteRing R = ring(e);
    EXPECT_EQ(ids(prime_radical(R).radical.elements), oracle::jacobson(R)) << e;
  }
}
