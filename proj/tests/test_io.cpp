#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ringloc/census.hpp"
#include "ringloc/expr.hpp"
#include "ringloc/report.hpp"
#include "ringloc/ringfile.hpp"

using namespace ringloc;
using fx::ring;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sample(const char* name) { return slurp(std::string(RINGLOC_SAMPLES_DIR) + "/" + name); }

}  // namespace

TEST(RingFile, ParsesSample) {
  FiniteRing R = parse_ring_file(sample("z4.ring"));
  EXPECT_EQ(R.name(), "Z4");
  EXPECT_TRUE(same_tables(R, ring("Zn(4)")));
}

TEST(RingFile, InvalidTablesRaiseValidationError) {
  try {
    parse_ring_file(sample("not_a_ring.ring"));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.report().ok);
    EXPECT_FALSE(e.report().violations.empty());
  }
}

TEST(RingFile, RoundTrip) {
  for (const char* e : {"Zn(7)", "Tri(2, Zn(3))", "Mat(2, Zn(2))", "Quot(Zn(12), [4])",
                        "Op(Tri(3, Zn(2)))", "Prod(Zn(4), Zn(6))"}) {
    FiniteRing R = ring(e);
    std::string text = serialize(R);
    FiniteRing back = parse_ring_file(text);
    EXPECT_TRUE(same_tables(back, R)) << e;
    EXPECT_EQ(serialize(back), text) << e;
  }
}

TEST(RingFile, SyntaxErrorsCarryPosition) {
  auto position = [](const std::string& text) {
    try {
      parse_ring_file(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t(0), std::size_t(0));
  };
  EXPECT_EQ(position("rng Z2\n"), std::make_pair(std::size_t(1), std::size_t(1)));
  EXPECT_EQ(position("ring Z2\norder x\n"), std::make_pair(std::size_t(2), std::size_t(7)));
  // Comment lines still count toward line numbers.
  std::string text = "ring Z2\n# note\norder 2\none 1\nadd:\n0 1\n1 9\nmul:\n0 0\n0 1\nend\n";
  EXPECT_EQ(position(text), std::make_pair(std::size_t(7), std::size_t(3)));
  EXPECT_EQ(position("ring Z2\norder 2\none 1\nadd:\n0 1\n1 0\nmul:\n0 0\n"),
            std::make_pair(std::size_t(9), std::size_t(1)));
  EXPECT_EQ(position("ring Z2\norder 2\none 1\nadd:\n0 1\n1\n"),
            std::make_pair(std::size_t(6), std::size_t(1)));
  EXPECT_EQ(position("ring Z2\norder 2\none 1\nadd:\n0 1\n1 0\nmul:\n0 0\n0 1\nend\nextra\n"),
            std::make_pair(std::size_t(11), std::size_t(1)));
}

TEST(Expressions, ParseErrors) {
  for (const char* bad : {"", "Zn(", "Zn(4", "Zq(4)", "Mat(2)", "Prod(Zn(2))", "Zn(4) x",
                          "Quot(Zn(4), 2)", "Zn(-3)", "Zn(1)"}) {
    EXPECT_THROW(parse_expr(bad), ParseError) << bad;
  }
  EXPECT_NO_THROW(parse_expr("  Prod( Zn(2) ,Tri(2, Zn(3)) ) "));
}

TEST(Expressions, ErrorColumn) {
  try {
    parse_expr("Prod(Zn(2), Zx(3))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 13u);
  }
}

TEST(Report, FingerprintKeyOrdersNumerically) {
  Fingerprint a{9, 9, 6, 1, "Zn(9)"}, b{16, 2, 8, 1, "Zn(16)"};
  EXPECT_LT(a.key(), b.key());
  json j = to_json(fingerprint(ring("Zn(6)")));
  EXPECT_EQ(j.dump(), R"j({"blocks":2,"characteristic":6,"order":6,"source":"Zn(6)","units":2})j");
}

TEST(Report, MaxDenJson) {
  json j = to_json(max_den(ring("Zn(6)")));
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["method"], "brute");
  EXPECT_EQ(j["sets"][0]["set"], json({1, 3, 5}));
  EXPECT_EQ(j["sets"][1]["ass"], json({0, 3}));
}

TEST(CensusSpecParsing, TemplatesAndCaps) {
  CensusSpec spec = parse_census_spec(
      R"j({"generators": ["Zn(2)", {"template": "Zn({n})", "from": 3, "to": 5},
                         {"template": "Tri(2, Zn({n}))", "values": [2, 3]}],
          "suites": ["axioms"], "caps": {"brute": 8}, "jobs": 3})j",
      Limits{});
  EXPECT_EQ(spec.generators, (std::vector<std::string>{"Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)",
                                                       "Tri(2, Zn(2))", "Tri(2, Zn(3))"}));
  EXPECT_EQ(spec.limits.brute_cap, 8u);
  EXPECT_EQ(spec.jobs, 3u);
  EXPECT_EQ(parse_census_spec(R"j({"generators": ["Zn(2)"]})j", Limits{}).suites, known_suites());
}

TEST(CensusSpecParsing, Rejects) {
  for (const char* bad : {"[]", "{", R"j({"generators": []})j", R"j({"generators": ["Zq(2)"]})j",
                          R"j({"generators": ["Zn(2)"], "suites": ["nope"]})j",
                          R"j({"generators": ["Zn(2)"], "jobs": 0})j",
                          R"j({"generators": [{"template": "Zn({n})", "from": 5, "to": 2}]})j",
                          R"j({"generators": ["Zn(2)"], "caps": {"brute": -1}})j"}) {
    EXPECT_THROW(parse_census_spec(bad, Limits{}), InputError) << bad;
  }
}

TEST(Census, DeterministicAcrossJobCounts) {
  CensusSpec spec = parse_census_spec(sample("quick.json"), Limits{});
  spec.jobs = 1;
  std::string one = to_json(run_census(spec)).dump(2);
  spec.jobs = 4;
  std::string four = to_json(run_census(spec)).dump(2);
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, to_json(run_census(spec)).dump(2));
}

TEST(Census, QuickSampleIsClean) {
  CensusReport r = run_census(parse_census_spec(sample("quick.json"), Limits{}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.rings.size(), 5u);
  json j = to_json(r);
  EXPECT_EQ(j["verdict"], "ok");
  for (std::size_t k = 1; k < r.rings.size(); ++k)
    EXPECT_LT(r.rings[k - 1].fingerprint->key(), r.rings[k].fingerprint->key());
}

TEST(Census, CapOverflowIsSkipNotFailure) {
  CensusSpec spec = parse_census_spec(
      R"j({"generators": ["Zn(12)", "Mat(2, Zn(3))"], "suites": ["maxden-oracle", "axioms"],
          "caps": {"brute": 8, "order": 32}})j",
      Limits{});
  CensusReport r = run_census(spec);
  EXPECT_TRUE(r.ok());
  EXPECT_GE(r.skips, 2u);
  EXPECT_EQ(to_json(r)["verdict"], "ok-with-skips");
}

TEST(Census, SuiteFailureBecomesCounterexample) {
  // A suite that throws an invariant failure is reported, not propagated.
  SuiteOutcome out = run_suite("axioms", ring("Zn(4)"), Limits{});
  EXPECT_EQ(out.status, SuiteOutcome::Status::pass);
  Limits tiny;
  tiny.ideal_cap = 2;
  SuiteOutcome skip = run_suite("radical-oracle", ring("Zn(12)"), tiny);
  EXPECT_EQ(skip.status, SuiteOutcome::Status::skip);
  EXPECT_FALSE(skip.reason.empty());
}

TEST(Census, SmallBruteCapSkipsZ6) {
  CensusReport r = run_census(parse_census_spec(
      R"j({"generators": ["Zn(6)"], "suites": ["maxden-brute"], "caps": {"brute": 4}})j", Limits{}));
  EXPECT_EQ(r.skips, 1u);
  EXPECT_EQ(to_json(r)["verdict"], "ok-with-skips");
  CensusReport full = run_census(parse_census_spec(
      R"j({"generators": ["Zn(6)", "Tri(2, Zn(2))"], "suites": ["maxden-brute"]})j", Limits{}));
  EXPECT_EQ(to_json(full)["verdict"], "ok");
}

TEST(Census, CyclicRingsUpTo16) {
  CensusReport r = run_census(parse_census_spec(
      R"j({"generators": [{"template": "Zn({n})", "from": 2, "to": 16}],
          "suites": ["thm-1.8", "radical-oracle"]})j",
      Limits{}));
  EXPECT_EQ(r.rings.size(), 15u);
  EXPECT_EQ(to_json(r)["verdict"], "ok");
}

TEST(Census, MissingHypothesisIsNotASkip) {
  SuiteOutcome na = run_suite("thm-1.1", ring("Zn(4)"), Limits{});
  EXPECT_EQ(na.status, SuiteOutcome::Status::not_applicable);
  EXPECT_EQ(std::string(to_string(na.status)), "n/a");
  CensusReport r = run_census(parse_census_spec(
      R"j({"generators": ["Zn(4)", "Tri(2, Zn(2))"], "suites": ["thm-1.1", "thm-1.8"]})j", Limits{}));
  EXPECT_EQ(r.skips, 0u);
  EXPECT_EQ(to_json(r)["verdict"], "ok");
}
