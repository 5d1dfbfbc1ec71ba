#pragma once

/**
 * @file report.hpp
 * @brief JSON views of rings and check results. Keys come out sorted
 *        (nlohmann::json objects are ordered maps); element sets are sorted
 *        id arrays.
 */

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringloc/core.hpp"
#include "ringloc/criteria.hpp"
#include "ringloc/graded.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/maxden.hpp"
#include "ringloc/ore.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

using json = nlohmann::json;

inline json to_json(const ElementSet& s) {
  json out = json::array();
  s.for_each([&](Elem e) { out.push_back(e); });
  return out;
}

inline json to_json(const std::vector<Elem>& w) {
  json out = json::array();
  for (Elem e : w) out.push_back(e);
  return out;
}

/// Isomorphism-invariant summary plus the source expression.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t characteristic = 0;
  std::size_t units = 0;
  std::size_t blocks = 0;
  std::string source;

  /// Sort key: numbers zero-padded so lexicographic order is numeric order.
  std::string key() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04zu/%04zu/%04zu/%04zu/", order, characteristic, units,
                  blocks);
    return buf + source;
  }
};

inline Fingerprint fingerprint(const FiniteRing& R) {
  SemisimpleQuotient sq = semisimple_quotient(R);
  return Fingerprint{R.order(), characteristic(R), units(R).size(), sq.blocks.s,
                     R.source().empty() ? R.name() : R.source()};
}

inline json to_json(const Fingerprint& f) {
  return json{{"order", f.order},
              {"characteristic", f.characteristic},
              {"units", f.units},
              {"blocks", f.blocks},
              {"source", f.source}};
}

inline json to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(json{{"check", v.axiom}, {"witness", to_json(v.witness)}});
  return json{{"ok", r.ok}, {"violations", violations}};
}

inline json to_json(const ConditionReport& r) {
  json conditions = json::array();
  for (const auto& c : r.conditions) {
    json item{{"label", c.label}, {"holds", c.holds}, {"witness", to_json(c.witness)}};
    if (!c.note.empty()) item["note"] = c.note;
    conditions.push_back(item);
  }
  json out{{"overall", r.overall}, {"conditions", conditions}};
  if (!r.skipped.empty()) out["skipped"] = r.skipped;
  return out;
}

inline json to_json(const MaxDenResult& m) {
  json sets = json::array();
  for (std::size_t k = 0; k < m.sets.size(); ++k) {
    const LocalizationResult& loc = m.localizations[k];
    sets.push_back(json{{"set", to_json(m.sets[k].elements())},
                        {"ass", to_json(loc.kernel.elements)},
                        {"localization", to_json(fingerprint(loc.localized))}});
  }
  return json{{"method", to_string(m.method)}, {"count", m.sets.size()}, {"sets", sets}};
}

inline json to_json(const RadicalData& r) {
  json powers = json::array();
  for (const Ideal& p : r.powers) powers.push_back(to_json(p.elements));
  return json{{"radical", to_json(r.radical.elements)}, {"nu", r.nu}, {"powers", powers}};
}

inline json to_json(const BoundReport& b) {
  json sets = json::array();
  for (const MultSet& S : b.block_sets) sets.push_back(to_json(S.elements()));
  return json{{"count", b.count},
              {"s", b.s},
              {"commutative", b.commutative},
              {"bound_holds", b.bound_holds},
              {"matches_block_sets", b.matches_block_sets},
              {"commutative_equality", b.commutative_equality},
              {"holds", b.holds},
              {"block_sets", sets}};
}

inline json to_json(const PairCriterionReport& t) {
  json pairs = json::array();
  for (const PairWitness& w : t.pairs) {
    json p{{"i", w.i}, {"j", w.j}, {"found", w.found}};
    if (w.found)
      p.update(json{{"left", to_json(w.left->elements())},
                    {"right", to_json(w.right->elements())},
                    {"trace", to_json(w.trace)}});
    pairs.push_back(p);
  }
  return json{{"count", t.count},
              {"s", t.s},
              {"criterion", t.criterion},
              {"equality", t.equality},
              {"agree", t.agree},
              {"maxden_is_block_sets", t.maxden_is_block_sets},
              {"holds", t.holds()},
              {"pairs", pairs}};
}

inline json to_json(const GradedRing& G) {
  json degrees = json::array();
  for (std::size_t x = 0; x < G.degree.size(); ++x)
    if (G.degree[x] >= 0) degrees.push_back(json{{"id", x}, {"degree", G.degree[x]}});
  return json{{"fingerprint", to_json(fingerprint(G.ring))},
              {"layer_sizes", G.layer_sizes},
              {"homogeneous_degrees", degrees}};
}

}  // namespace ringloc
