#pragma once

/**
 * @file cli.hpp
 * @brief The ringloc command line. run_command() is the whole program; the
 *        tool's main() only forwards argv and the standard streams.
 *
 * Exit codes: 0 all checks passed, 1 a check failed or a counterexample was
 * found (the report is still written), 2 bad input, unknown flag or a cap
 * overflow.
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringloc/census.hpp"
#include "ringloc/construct.hpp"
#include "ringloc/core.hpp"
#include "ringloc/criteria.hpp"
#include "ringloc/expr.hpp"
#include "ringloc/graded.hpp"
#include "ringloc/maxden.hpp"
#include "ringloc/ore.hpp"
#include "ringloc/report.hpp"
#include "ringloc/ring.hpp"
#include "ringloc/ringfile.hpp"

namespace ringloc {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A ring argument: a path to a ring file when one exists, otherwise a
/// constructor expression.
inline FiniteRing load_ring(const std::string& arg, const Limits& limits) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    FiniteRing R = parse_ring_file(read_file(arg));
    if (R.order() > limits.order_cap)
      throw ResourceError("ring order exceeds cap of " + std::to_string(limits.order_cap),
                          R.order());
    return R.renamed(R.name().empty() ? arg : R.name(), arg);
  }
  return construct(arg, limits);
}

/// How element ids encode elements, for hand-checking outputs.
inline std::string encoding_note(const FiniteRing& R) {
  Expr e;
  try {
    e = parse_expr(R.source());
  } catch (const InputError&) {
    return "ids as listed in the ring file; 0 is zero, " + std::to_string(R.one()) + " is one";
  }
  switch (e.kind) {
    case Expr::Kind::zn: return "residue r has id r";
    case Expr::Kind::mat:
      return "row-major entries of the matrix as base-|B| digits, first entry most significant";
    case Expr::Kind::tri:
      return "entries on or above the diagonal, row-major, as base-|B| digits, first entry "
             "most significant";
    case Expr::Kind::prod: return "(a, b) has id a * |B| + b";
    case Expr::Kind::quot: return "cosets numbered by their smallest representative";
    case Expr::Kind::op: return "same ids as the underlying ring";
  }
  return {};
}

inline std::vector<Elem> parse_element_list(const std::string& text, std::size_t order) {
  std::vector<Elem> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw InputError("empty entry in element list '" + text + "'");
    item = item.substr(a, b - a + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
      throw InputError("'" + item + "' is not an element id");
    std::size_t v = std::stoul(item);
    if (v >= order)
      throw InputError("element " + item + " outside a ring of order " + std::to_string(order));
    out.push_back(Elem(v));
  }
  if (out.empty()) throw InputError("empty element list");
  return out;
}

inline json info_json(const FiniteRing& R) {
  RadicalData rad = prime_radical(R);
  SemisimpleQuotient sq = semisimple_quotient(R);
  return json{{"fingerprint", to_json(fingerprint(R))},
              {"order", R.order()},
              {"one", R.one()},
              {"commutative", is_commutative(R)},
              {"characteristic", characteristic(R)},
              {"units", to_json(units(R))},
              {"regular", to_json(regular_elements(R))},
              {"radical", to_json(rad.radical.elements)},
              {"nu", rad.nu},
              {"s", sq.blocks.s},
              {"encoding", encoding_note(R)}};
}

}  // namespace detail

/// Parses argv, runs one subcommand and prints JSON to `out`.
inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  CLI::App app{"Finite-ring localization checks", "ringloc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string ring_arg, method = "auto", set_text, which = "all", spec_path, out_path;
  std::size_t jobs = 0;

  auto ring_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("ring", ring_arg, "constructor expression or ring file")->required();
    return sub;
  };
  CLI::App* validate = ring_command("validate", "check the ring axioms");
  CLI::App* info = ring_command("info", "order, units, regular elements, radical, nu, blocks");
  CLI::App* radical = ring_command("radical", "prime radical, its powers and minimal primes");
  CLI::App* maxden = ring_command("maxden", "maximal left denominator sets");
  maxden->add_option("--method", method, "auto, brute or ideals")
      ->check(CLI::IsMember({"auto", "brute", "ideals"}));
  CLI::App* localize_cmd = ring_command("localize", "localize at the monoid generated by --set");
  localize_cmd->add_option("--set", set_text, "comma-separated element ids")->required();
  CLI::App* criteria = ring_command("criteria", "evaluate the localization criteria");
  criteria->add_option("--which", which, "1.1, 1.2, 1.3, 2.4, 2.5, 4.2 or all")
      ->check(CLI::IsMember({"1.1", "1.2", "1.3", "2.4", "2.5", "4.2", "all"}));
  CLI::App* gr = ring_command("gr", "associated graded ring");
  CLI::App* dump = ring_command("dump", "print the ring in ring-file format");
  CLI::App* census = app.add_subcommand("census", "run a census spec");
  census->add_option("--spec", spec_path, "census spec (JSON)")->required();
  census->add_option("--jobs", jobs, "worker threads (overrides the spec)")->check(CLI::PositiveNumber);
  census->add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "ringloc: " << e.what() << "\n";
    return 2;
  }

  const Limits limits = Limits::from_env();
  auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };
  try {
    if (*validate) {
      FiniteRing R = detail::load_ring(ring_arg, limits);
      emit(json{{"valid", true}, {"fingerprint", to_json(fingerprint(R))}});
      return 0;
    }
    if (*info) {
      emit(detail::info_json(detail::load_ring(ring_arg, limits)));
      return 0;
    }
    if (*radical) {
      FiniteRing R = detail::load_ring(ring_arg, limits);
      json j = to_json(prime_radical(R));
      json primes = json::array();
      for (const Ideal& p : minimal_primes(R, limits)) primes.push_back(to_json(p.elements));
      j["minimal_primes"] = primes;
      emit(j);
      return 0;
    }
    if (*maxden) {
      FiniteRing R = detail::load_ring(ring_arg, limits);
      MaxDenResult m = method == "brute"    ? max_den_bruteforce(R, limits)
                       : method == "ideals" ? max_den_via_ideals(R, limits)
                                            : max_den(R, limits);
      json j = to_json(m);
      j["localization_radical"] = to_json(localization_radical(R, m).elements);
      emit(j);
      return 0;
    }
    if (*localize_cmd) {
      FiniteRing R = detail::load_ring(ring_arg, limits);
      ElementSet gens(R.order());
      for (Elem e : detail::parse_element_list(set_text, R.order())) gens.insert(e);
      ClosureResult closure = monoid_closure(R, gens);
      if (auto* z = std::get_if<ZeroAbsorbed>(&closure)) {
        emit(json{{"ok", false}, {"reason", "generated monoid contains zero"},
                  {"trace", to_json(z->trace)}});
        return 1;
      }
      const MultSet& S = std::get<MultSet>(closure);
      Witnessed den = is_left_denominator(R, S);
      if (!den) {
        emit(json{{"ok", false}, {"closure", to_json(S.elements())},
                  {"reason", "not a left denominator set"}, {"witness", to_json(den.witness)}});
        return 1;
      }
      LocalizationResult loc = localize(R, S);
      emit(json{{"ok", true},
                {"closure", to_json(S.elements())},
                {"ass", to_json(loc.kernel.elements)},
                {"order", loc.localized.order()},
                {"localization", to_json(fingerprint(loc.localized))},
                {"sigma", loc.sigma.map},
                {"saturation", to_json(saturate(R, S).elements())}});
      return 0;
    }
    if (*criteria) {
      FiniteRing R = detail::load_ring(ring_arg, limits);
      json j = json::object();
      bool ok = true;
      auto want = [&](const char* id) { return which == "all" || which == id; };
      auto take = [&](const char* id, const ConditionReport& r) {
        j[id] = to_json(r);
        ok = ok && r.overall;
      };
      if (want("1.1")) take("1.1", theorem_1_1_check(R));
      if (want("1.2")) take("1.2", criteria_theorem_1_2(R));
      if (want("1.3")) take("1.3", criteria_theorem_1_3(R, limits));
      if (want("2.4")) take("2.4", theorem_2_4_audit(R));
      if (want("2.5")) take("2.5", corollary_2_5_check(R));
      if (want("4.2")) {
        PairCriterionReport t = theorem_4_2_check(R, limits);
        j["4.2"] = to_json(t);
        ok = ok && t.holds();
      }
      j["ok"] = ok;
      emit(j);
      return ok ? 0 : 1;
    }
    if (*gr) {
      FiniteRing R = detail::load_ring(ring_arg, limits);
      GradedRing G = gr_ring(R, limits);
      json j = to_json(G);
      j["tables"] = serialize(G.ring);
      emit(j);
      return 0;
    }
    if (*dump) {
      out << serialize(detail::load_ring(ring_arg, limits));
      return 0;
    }
    if (*census) {
      CensusSpec spec = parse_census_spec(detail::read_file(spec_path), limits);
      if (jobs > 0) spec.jobs = jobs;
      CensusReport report = run_census(spec);
      std::string text = to_json(report).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw InputError("cannot write " + out_path);
        file << text;
        out << json{{"ok", report.ok()}, {"report", out_path}}.dump() << "\n";
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const ValidationError& e) {
    emit(json{{"valid", false}, {"report", to_json(e.report())}});
    return 1;
  } catch (const InputError& e) {
    err << "ringloc: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "ringloc: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "ringloc: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "ringloc: internal invariant failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ringloc
