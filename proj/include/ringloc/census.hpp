#pragma once

/**
 * @file census.hpp
 * @brief Runs selected check suites over a family of rings.
 *
 * Spec file (JSON):
 *
 *   {
 *     "generators": ["Tri(2, Zn(2))", {"template": "Zn({n})", "from": 2, "to": 16}],
 *     "suites": ["axioms", "radical-oracle", "thm-1.8"],
 *     "caps": {"brute": 16, "raw": 16, "ideal": 20000, "order": 256},
 *     "jobs": 2
 *   }
 *
 * A template may list "values" instead of a from/to range. Every generated
 * ring runs every suite; a cap overflow skips that (ring, suite) pair, a suite
 * whose hypothesis the ring lacks is marked n/a, and any
 * failed check or broken internal invariant becomes a counterexample. The
 * report lists rings sorted by fingerprint whatever the job count.
 */

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ringloc/construct.hpp"
#include "ringloc/core.hpp"
#include "ringloc/criteria.hpp"
#include "ringloc/graded.hpp"
#include "ringloc/invariants.hpp"
#include "ringloc/maxden.hpp"
#include "ringloc/report.hpp"
#include "ringloc/ring.hpp"
#include "ringloc/ringfile.hpp"

namespace ringloc {

struct CensusSpec {
  std::vector<std::string> generators;  // expanded constructor expressions
  std::vector<std::string> suites;
  Limits limits;
  std::size_t jobs = 1;
};

/// Suite ids accepted in a spec, in execution order.
inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites{
      "axioms",    "radical-oracle", "maxden-oracle", "maxden-brute", "thm-1.1",
      "thm-1.2",   "thm-1.3",        "thm-1.4",       "thm-1.8",      "thm-2.4",
      "cor-2.5",   "thm-4.2",        "prop-3.5",      "prop-4.5",     "prop-4.7",
      "prop-4.8",  "ore-solve",      "gr",            "min-primes",   "saturation",
      "exact-sequence"};
  return suites;
}

namespace detail {

inline std::string expand_template(const std::string& pattern, long long n) {
  std::string out = pattern;
  const std::string hole = "{n}";
  for (std::size_t at = out.find(hole); at != std::string::npos; at = out.find(hole, at))
    out.replace(at, hole.size(), std::to_string(n));
  return out;
}

}  // namespace detail

/// Parses and checks a spec. Throws InputError on malformed specs.
inline CensusSpec parse_census_spec(const std::string& text, Limits limits = Limits::from_env()) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("census spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("census spec must be a JSON object");
  CensusSpec spec;
  spec.limits = limits;
  try {
    for (const json& g : j.at("generators")) {
      if (g.is_string()) {
        spec.generators.push_back(g.get<std::string>());
        continue;
      }
      std::string pattern = g.at("template").get<std::string>();
      std::vector<long long> values;
      if (g.contains("values")) {
        values = g.at("values").get<std::vector<long long>>();
      } else {
        long long from = g.at("from").get<long long>(), to = g.at("to").get<long long>();
        if (to < from) throw InputError("template range is empty: " + pattern);
        for (long long n = from; n <= to; ++n) values.push_back(n);
      }
      for (long long n : values) spec.generators.push_back(detail::expand_template(pattern, n));
    }
    spec.suites = j.contains("suites") ? j.at("suites").get<std::vector<std::string>>()
                                       : known_suites();
    if (j.contains("caps")) {
      const json& caps = j.at("caps");
      auto read = [&](const char* key, std::size_t& slot) {
        if (!caps.contains(key)) return;
        long long v = caps.at(key).get<long long>();
        if (v <= 0) throw InputError(std::string("cap '") + key + "' must be positive");
        slot = std::size_t(v);
      };
      read("brute", spec.limits.brute_cap);
      read("raw", spec.limits.raw_cap);
      read("ideal", spec.limits.ideal_cap);
      read("order", spec.limits.order_cap);
      spec.limits.order_cap = std::min(spec.limits.order_cap, kMaxOrder);
    }
    if (j.contains("jobs")) {
      long long jobs = j.at("jobs").get<long long>();
      if (jobs <= 0) throw InputError("jobs must be positive");
      spec.jobs = std::size_t(jobs);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed census spec: ") + e.what());
  }
  if (spec.generators.empty()) throw InputError("census spec needs at least one generator");
  for (const std::string& g : spec.generators) parse_expr(g);
  for (const std::string& s : spec.suites)
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
      throw InputError("unknown suite '" + s + "'");
  return spec;
}

/// Outcome of one suite on one ring.
struct SuiteOutcome {
  enum class Status { pass, fail, skip, not_applicable };
  Status status = Status::pass;
  std::vector<Violation> failures;  // check name and witness
  std::string reason;               // for skips and n/a
};

inline const char* to_string(SuiteOutcome::Status s) {
  switch (s) {
    case SuiteOutcome::Status::pass: return "pass";
    case SuiteOutcome::Status::fail: return "fail";
    case SuiteOutcome::Status::skip: return "skip";
    case SuiteOutcome::Status::not_applicable: return "n/a";
  }
  return "?";
}

namespace detail {

/// Accumulates failures for one suite.
struct SuiteSink {
  SuiteOutcome out;
  void fail(std::string check, std::vector<Elem> witness = {}) {
    out.status = SuiteOutcome::Status::fail;
    out.failures.push_back({std::move(check), std::move(witness)});
  }
  void expect(bool ok, const std::string& check, std::vector<Elem> witness = {}) {
    if (!ok) fail(check, std::move(witness));
  }
  void take(const ValidationReport& r, const std::string& prefix = {}) {
    for (const auto& v : r.violations) fail(prefix + v.axiom, v.witness);
  }
  void take(const ConditionReport& r) {
    for (const auto& c : r.conditions)
      if (!c.holds) fail(c.label, c.witness);
  }
  void skip(std::string reason) {
    out.status = SuiteOutcome::Status::skip;
    out.reason = std::move(reason);
  }
  /// The ring is outside the suite's hypothesis; not counted as a skip.
  void not_applicable(std::string reason) {
    out.status = SuiteOutcome::Status::not_applicable;
    out.reason = std::move(reason);
  }
};

inline bool same_families(const MaxDenResult& a, const MaxDenResult& b) { return a.sets == b.sets; }

/// Oracle for the prime radical: the intersection of the minimal primes.
inline ElementSet radical_from_primes(const FiniteRing& R, const Limits& limits) {
  ElementSet out = R.all();
  for (const Ideal& p : minimal_primes(R, limits)) out = out & p.elements;
  return out;
}

inline void run_suite(const std::string& suite, const FiniteRing& R, const Limits& limits,
                      SuiteSink& sink) {
  if (suite == "axioms") {
    sink.take(validate_ring(R.raw()));
    FiniteRing back = parse_ring_file(serialize(R));
    sink.expect(same_tables(back, R), "ring file round trip");
  } else if (suite == "radical-oracle") {
    ElementSet closure = prime_radical(R).radical.elements;
    ElementSet oracle = radical_from_primes(R, limits);
    sink.expect(closure == oracle, "semiprime closure = intersection of minimal primes",
                detail::first_difference(closure, oracle));
  } else if (suite == "maxden-oracle") {
    MaxDenResult brute = max_den_bruteforce(R, limits);
    MaxDenResult ideals = max_den_via_ideals(R, limits);
    sink.expect(same_families(brute, ideals), "brute = via ideals");
    if (is_commutative(R))
      sink.expect(same_families(brute, commutative_maxden(R, limits)), "brute = minimal prime complements");
  } else if (suite == "maxden-brute") {
    // Brute path alone: an antichain of saturated denominator sets.
    MaxDenResult brute = max_den_bruteforce(R, limits);
    sink.expect(!brute.sets.empty(), "max.Den_l is non-empty");
    for (std::size_t i = 0; i < brute.sets.size(); ++i) {
      const MultSet& S = brute.sets[i];
      sink.expect(bool(is_left_denominator(R, S)), "left denominator set", S.elements().elements());
      sink.expect(saturate(R, S) == S, "saturated", S.elements().elements());
      for (std::size_t j = 0; j < brute.sets.size(); ++j)
        if (i != j && S.elements().subset_of(brute.sets[j].elements()))
          sink.fail("maximal sets are incomparable", S.elements().elements());
    }
  } else if (suite == "thm-1.1") {
    ConditionReport r = theorem_1_1_check(R);
    if (!r.skipped.empty()) sink.not_applicable(r.skipped);
    else sink.take(r);
  } else if (suite == "thm-1.2") {
    sink.take(criteria_theorem_1_2(R));
  } else if (suite == "thm-1.3") {
    sink.take(criteria_theorem_1_3(R, limits));
    sink.take(graded_localization_check(R, std::nullopt, limits), "graded localization: ");
  } else if (suite == "thm-1.4") {
    BoundReport b = bound_check(R, limits);
    sink.expect(b.bound_holds, "|max.Den_l| <= s", {Elem(b.count), Elem(b.s)});
    sink.expect(b.matches_block_sets, "max.Den_l = maximal S'_i");
    sink.expect(b.commutative_equality, "|max.Den| = s for commutative R", {Elem(b.count), Elem(b.s)});
  } else if (suite == "thm-1.8") {
    if (!is_commutative(R)) {
      sink.not_applicable("not commutative");
      return;
    }
    sink.expect(same_families(commutative_maxden(R, limits), max_den(R, limits)),
                "max.Den = minimal prime complements");
  } else if (suite == "thm-2.4") {
    sink.take(theorem_2_4_audit(R));
  } else if (suite == "cor-2.5") {
    sink.take(corollary_2_5_check(R));
  } else if (suite == "thm-4.2") {
    PairCriterionReport t = theorem_4_2_check(R, limits);
    sink.expect(t.agree, "zero-product pairs exist iff |max.Den_l| = s", {Elem(t.count), Elem(t.s)});
    sink.expect(t.maxden_is_block_sets, "max.Den_l = {S'_i} on equality");
  } else if (suite == "prop-3.5") {
    sink.take(kernel_torsion_check(R, saturated_denominator_sets(R, limits)));
  } else if (suite == "prop-4.5") {
    if (!is_commutative(R)) {
      sink.not_applicable("not commutative");
      return;
    }
    sink.take(nil_quotient_bijection_check(R, enumerate_ideals(R, limits), max_den(R, limits), limits));
  } else if (suite == "prop-4.7") {
    std::vector<Ideal> ideals = enumerate_ideals(R, limits);
    sink.take(quotient_transfer_check(R, saturated_denominator_sets(R, limits), ideals));
    sink.take(quotient_bound_check(R, ideals, max_den(R, limits), limits));
  } else if (suite == "prop-4.8") {
    sink.take(factor_closure_check(R, saturated_denominator_sets(R, limits)));
  } else if (suite == "ore-solve") {
    OreSolver solver(R);
    ElementSet C = regular_elements(R);
    for (Elem c : C.elements()) {
      ElementSet Rc = right_multiple(R, R.all(), c);
      for (std::size_t r = 0; r < R.order(); ++r) {
        OreSolution sol = solver.solve(c, Elem(r));
        bool exists = false;
        C.for_each([&](Elem s) { exists = exists || Rc.contains(R.mul(s, Elem(r))); });
        sink.expect(exists, "a pair exists by direct search", {c, Elem(r)});
        sink.expect(R.mul(sol.c_prime, Elem(r)) == R.mul(sol.r_prime, c) && C.contains(sol.c_prime),
                    "c'r = r'c with c' regular", {c, Elem(r)});
      }
    }
  } else if (suite == "gr") {
    GradedRing G = gr_ring(R, limits);
    sink.expect(G.ring.order() == R.order(), "|gr R| = |R|");
    for (std::size_t x = 1; x < G.ring.order(); ++x)
      for (std::size_t y = 1; y < G.ring.order(); ++y) {
        if (G.degree[x] < 0 || G.degree[y] < 0) continue;
        Elem p = G.ring.mul(Elem(x), Elem(y));
        if (p != 0 && G.degree[p] != G.degree[x] + G.degree[y])
          sink.fail("deg(xy) = deg(x) + deg(y)", {Elem(x), Elem(y)});
      }
  } else if (suite == "min-primes") {
    sink.take(min_prime_bijection_check(R, limits));
  } else if (suite == "saturation") {
    MaxDenResult maxden = max_den(R, limits);
    std::vector<MultSet> saturated = saturated_denominator_sets(R, limits);
    sink.take(regular_in_maximal_check(R, maxden));
    sink.take(saturation_check(R, maxden, saturated));
    sink.take(universal_property_check(R, saturated, enumerate_ideals(R, limits)));
  } else if (suite == "exact-sequence") {
    sink.take(exact_sequence_check(R, limits));
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
}

}  // namespace detail

/// Runs one suite, turning cap overflows into skips and broken internal
/// invariants or unexpected preconditions into failures.
inline SuiteOutcome run_suite(const std::string& suite, const FiniteRing& R, const Limits& limits) {
  detail::SuiteSink sink;
  try {
    detail::run_suite(suite, R, limits, sink);
  } catch (const ResourceError& e) {
    sink.out.failures.clear();
    sink.skip(e.what());
  } catch (const InvariantError& e) {
    sink.fail(std::string("invariant: ") + e.what(), e.witness());
  } catch (const PreconditionError& e) {
    sink.fail(std::string("precondition: ") + e.what(), e.witness());
  }
  return sink.out;
}

struct CensusRing {
  std::string source;
  std::optional<Fingerprint> fingerprint;  // absent when the ring was not built
  std::string build_error;                 // cap overflow while building
  std::map<std::string, SuiteOutcome> outcomes;
};

struct CensusReport {
  std::vector<CensusRing> rings;  // sorted by fingerprint key
  std::size_t skips = 0;

  struct Counterexample {
    std::string source;
    std::string suite;
    std::string check;
    std::vector<Elem> witness;
  };
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

inline CensusRing census_ring(const std::string& source, const std::vector<std::string>& suites,
                              const Limits& limits) {
  CensusRing out;
  out.source = source;
  std::optional<FiniteRing> R;
  try {
    R = construct(source, limits);
  } catch (const ResourceError& e) {
    out.build_error = e.what();
    return out;
  }
  out.fingerprint = fingerprint(*R);
  for (const std::string& suite : suites) out.outcomes[suite] = run_suite(suite, *R, limits);
  return out;
}

inline CensusReport run_census(const CensusSpec& spec) {
  // Duplicate expressions collapse to one entry.
  std::vector<std::string> sources = spec.generators;
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  std::vector<std::string> suites;
  for (const std::string& s : known_suites())
    if (std::find(spec.suites.begin(), spec.suites.end(), s) != spec.suites.end()) suites.push_back(s);

  std::vector<CensusRing> results(sources.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < sources.size(); k = next++)
      results[k] = census_ring(sources[k], suites, spec.limits);
  };
  std::size_t jobs = std::max<std::size_t>(1, std::min(spec.jobs, sources.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  auto key = [](const CensusRing& r) {
    return r.fingerprint ? r.fingerprint->key() : "~/" + r.source;
  };
  std::stable_sort(results.begin(), results.end(),
                   [&](const CensusRing& a, const CensusRing& b) { return key(a) < key(b); });

  CensusReport report;
  for (const CensusRing& ring : results) {
    if (!ring.build_error.empty()) ++report.skips;
    for (const std::string& suite : suites) {
      auto it = ring.outcomes.find(suite);
      if (it == ring.outcomes.end()) continue;
      if (it->second.status == SuiteOutcome::Status::skip) ++report.skips;
      for (const Violation& v : it->second.failures)
        report.counterexamples.push_back({ring.source, suite, v.axiom, v.witness});
    }
  }
  report.rings = std::move(results);
  return report;
}

inline json to_json(const CensusReport& report) {
  json rings = json::array();
  for (const CensusRing& ring : report.rings) {
    json item{{"source", ring.source}};
    if (ring.fingerprint) item["fingerprint"] = to_json(*ring.fingerprint);
    if (!ring.build_error.empty()) item["skipped"] = ring.build_error;
    json results = json::object();
    for (const auto& [suite, outcome] : ring.outcomes) {
      json r{{"status", to_string(outcome.status)}};
      if (!outcome.reason.empty()) r["reason"] = outcome.reason;
      if (!outcome.failures.empty()) {
        json failures = json::array();
        for (const Violation& v : outcome.failures)
          failures.push_back(json{{"check", v.axiom}, {"witness", to_json(v.witness)}});
        r["failures"] = failures;
      }
      results[suite] = r;
    }
    item["results"] = results;
    rings.push_back(item);
  }
  json counterexamples = json::array();
  for (const auto& c : report.counterexamples)
    counterexamples.push_back(json{{"source", c.source},
                                   {"suite", c.suite},
                                   {"check", c.check},
                                   {"witness", to_json(c.witness)}});
  std::string verdict = !report.ok() ? "counterexample" : report.skips ? "ok-with-skips" : "ok";
  return json{{"ok", report.ok()},
              {"verdict", verdict},
              {"skips", report.skips},
              {"ring_count", report.rings.size()},
              {"rings", rings},
              {"counterexamples", counterexamples}};
}

}  // namespace ringloc
