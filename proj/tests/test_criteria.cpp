#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ringloc/criteria.hpp"
#include "ringloc/invariants.hpp"

using namespace ringloc;
using fx::ids;
using fx::ring;

namespace {

const char* const kRings[] = {"Zn(4)", "Zn(6)", "Zn(8)", "Zn(12)", "Zn(16)",
                              "Tri(2, Zn(2))", "Tri(2, Zn(3))", "Mat(2, Zn(2))",
                              "Prod(Zn(2), Zn(4))", "Quot(Tri(2, Zn(4)), [2])",
                              "Op(Tri(3, Zn(2)))"};

std::vector<std::string> labels(const ConditionReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.conditions) out.push_back(c.label);
  return out;
}

}  // namespace

TEST(LocalizationCriteria, LabelsAndFixtures) {
  ConditionReport z4 = criteria_theorem_1_2(ring("Zn(4)"));
  EXPECT_EQ(labels(z4), (std::vector<std::string>{"1.2(a)", "1.2(b)", "1.2(c)", "1.2(d)",
                                                  "1.2(e)", "1.2(f)", "1.2(f) over Ctilde"}));
  EXPECT_TRUE(z4.overall);
  EXPECT_FALSE(z4.find("1.2(c)")->note.empty());
  EXPECT_TRUE(criteria_theorem_1_2(ring("Tri(2, Zn(2))")).overall);
  EXPECT_TRUE(criteria_theorem_1_2(ring("Mat(2, Zn(2))")).overall);
}

TEST(GradedCriteria, Fixtures) {
  for (const char* e : {"Zn(4)", "Zn(8)", "Tri(2, Zn(2))"}) {
    ConditionReport r = criteria_theorem_1_3(ring(e));
    EXPECT_TRUE(r.overall) << e;
    EXPECT_NE(r.find("1.3(den)"), nullptr);
    EXPECT_NE(r.find("1.3(gr Q)"), nullptr);
  }
}

TEST(GradedLocalization, Fixtures) {
  EXPECT_TRUE(graded_localization_check(ring("Zn(8)")).ok);
  EXPECT_TRUE(graded_localization_check(ring("Tri(2, Zn(2))")).ok);
  FiniteRing z4 = ring("Zn(4)");
  GradedRing g = gr_ring(z4);
  ElementSet deg0_units = g.degree_zero() & units(g.ring);
  EXPECT_TRUE(graded_localization_check(z4, deg0_units).ok);
  EXPECT_THROW(graded_localization_check(z4, ElementSet(3, {1})), InputError);
}

TEST(StructureAudit, Fixtures) {
  ConditionReport z4 = theorem_2_4_audit(ring("Zn(4)"));
  EXPECT_TRUE(z4.overall);
  EXPECT_EQ(z4.find("2.4(4)")->note, "|R*| = 2, |1+n| = 2, |Rbar*| = 1");
  ConditionReport t2 = theorem_2_4_audit(ring("Tri(2, Zn(2))"));
  EXPECT_TRUE(t2.overall);
  EXPECT_EQ(t2.find("2.4(4)")->note, "|R*| = 2, |1+n| = 2, |Rbar*| = 1");
  EXPECT_TRUE(theorem_2_4_audit(ring("Zn(6)")).overall);
  std::vector<std::string> expect{"2.4(1)",  "2.4(2a)", "2.4(2b)", "2.4(2c)",
                                  "2.4(2d)", "2.4(2e)", "2.4(2f)", "2.4(2f) over Cbar",
                                  "2.4(3)",  "2.4(4)",  "2.4(5)",  "2.4(6)"};
  EXPECT_EQ(labels(t2), expect);
}

TEST(StructureAudit, UnitIdentityAgainstOracle) {
  for (const char* e : kRings) {
    FiniteRing R = ring(e);
    oracle::Set n = oracle::jacobson(R);
    std::size_t one_plus_n = n.size();  // x -> 1 + x is a bijection
    QuotientResult q = quotient_ring(R, prime_radical(R).radical);
    EXPECT_EQ(oracle::units(R).size(), one_plus_n * oracle::units(q.ring).size()) << e;
    EXPECT_TRUE(theorem_2_4_audit(R).overall) << e;
  }
}

TEST(StructureEquivalence, Fixtures) {
  for (const char* e : {"Zn(4)", "Tri(2, Zn(2))", "Mat(2, Zn(2))"}) {
    ConditionReport r = corollary_2_5_check(ring(e));
    EXPECT_TRUE(r.overall) << e;
    EXPECT_EQ(r.conditions.size(), 7u);
  }
  FiniteRing t2 = ring("Tri(2, Zn(2))");
  QuotientResult q = quotient_ring(t2, prime_radical(t2).radical);
  EXPECT_EQ(c_tilde(t2).elements(), units(q.ring));
  EXPECT_EQ(c_dagger(q.ring).set, units(q.ring));
}

TEST(MinPrimeBijection, Fixtures) {
  for (const char* e : {"Zn(6)", "Zn(4)", "Tri(2, Zn(2))", "Zn(12)"})
    EXPECT_TRUE(min_prime_bijection_check(ring(e)).ok) << e;
}

TEST(SemiprimeCheck, Fixtures) {
  ConditionReport z6 = theorem_1_1_check(ring("Zn(6)"));
  EXPECT_TRUE(z6.overall);
  EXPECT_TRUE(z6.skipped.empty());
  EXPECT_EQ(z6.find("1.1(semisimple)")->note, "block orders 2 3");
  EXPECT_EQ(theorem_1_1_check(ring("Mat(2, Zn(2))")).find("1.1(semisimple)")->note,
            "block orders 16");
  EXPECT_EQ(theorem_1_1_check(ring("Prod(Zn(2), Zn(2))")).find("1.1(semisimple)")->note,
            "block orders 2 2");
  ConditionReport z4 = theorem_1_1_check(ring("Zn(4)"));
  EXPECT_FALSE(z4.skipped.empty());
  EXPECT_TRUE(z4.conditions.empty());
}

TEST(ConditionReportType, OverallTracksConditions) {
  ConditionReport r;
  EXPECT_TRUE(r.overall);
  r.add("x", true);
  r.add("y", false, {3});
  EXPECT_FALSE(r.overall);
  EXPECT_EQ(r.find("y")->witness, (std::vector<Elem>{3}));
  EXPECT_EQ(r.find("z"), nullptr);
}

TEST(Invariants, HoldOnSampleRings) {
  for (const char* e : kRings) {
    FiniteRing R = ring(e);
    MaxDenResult m = max_den(R);
    std::vector<MultSet> sat = saturated_denominator_sets(R);
    std::vector<Ideal> ideals = enumerate_ideals(R);
    EXPECT_TRUE(regular_in_maximal_check(R, m).ok) << e;
    EXPECT_TRUE(saturation_check(R, m, sat).ok) << e;
    EXPECT_TRUE(universal_property_check(R, sat, ideals).ok) << e;
    EXPECT_TRUE(kernel_torsion_check(R, sat).ok) << e;
    EXPECT_TRUE(nil_quotient_bijection_check(R, ideals, m).ok) << e;
    EXPECT_TRUE(quotient_bound_check(R, ideals, m).ok) << e;
    EXPECT_TRUE(quotient_transfer_check(R, sat, ideals).ok) << e;
    EXPECT_TRUE(factor_closure_check(R, sat).ok) << e;
  }
}

TEST(Invariants, SaturationCheckCatchesMissingSet) {
  FiniteRing z6 = ring("Zn(6)");
  MaxDenResult m = max_den(z6);
  std::vector<MultSet> sat = saturated_denominator_sets(z6);
  MaxDenResult broken = m;
  broken.sets[0] = MultSet::trusted(ElementSet(6, {1, 3}));
  EXPECT_FALSE(saturation_check(z6, broken, sat).ok);
}
