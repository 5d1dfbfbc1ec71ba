#pragma once

/**
 * @file maxden.hpp
 * @brief Maximal left denominator sets, the left localization radical, the
 *        block projections p_i and the sets S'_i, and the checks built on
 *        them (finiteness bound, the commutative description, the equality
 *        criterion).
 *
 * Two independent enumerations of max.Den_l(R):
 *  - brute: every multiplicative set of R is scanned (order <= raw_cap); between
 *    raw_cap and brute_cap the candidates {r : r + a is a unit mod a} are
 *    formed directly in R for every ideal a, without building quotients.
 *  - ideals: for every ideal a, the preimage of the unit group of R/a is kept
 *    when it is a denominator set with ass = a (these are exactly the
 *    saturated denominator sets).
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ringloc/core.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/ore.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

enum class MaxDenMethod { brute, ideals };

inline const char* to_string(MaxDenMethod m) {
  return m == MaxDenMethod::brute ? "brute" : "ideals";
}

struct MaxDenResult {
  std::vector<MultSet> sets;  // sorted by (size, lexicographic)
  MaxDenMethod method = MaxDenMethod::brute;
  std::vector<LocalizationResult> localizations;  // aligned with sets
};

namespace detail {

/// Inclusion-maximal members, sorted.
inline std::vector<MultSet> maximal_sets(std::vector<MultSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<MultSet> out;
  for (const MultSet& S : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [&](const MultSet& T) {
      return T != S && S.elements().subset_of(T.elements());
    });
    if (!dominated) out.push_back(S);
  }
  return out;
}

inline MaxDenResult finish(const FiniteRing& R, std::vector<MultSet> sets,
                           MaxDenMethod method) {
  MaxDenResult result;
  result.method = method;
  result.sets = maximal_sets(std::move(sets));
  for (const MultSet& S : result.sets) result.localizations.push_back(localize(R, S));
  return result;
}

/// {r : rv - 1 and vr - 1 lie in a for some v}, computed in R.
inline ElementSet units_modulo(const FiniteRing& R, const ElementSet& a) {
  ElementSet out(R.order());
  for (std::size_t r = 0; r < R.order(); ++r)
    for (std::size_t v = 0; v < R.order(); ++v)
      if (a.contains(R.sub(R.mul(Elem(r), Elem(v)), R.one())) &&
          a.contains(R.sub(R.mul(Elem(v), Elem(r)), R.one()))) {
        out.insert(Elem(r));
        break;
      }
  return out;
}

}  // namespace detail

/// Oracle enumeration of max.Den_l(R). Throws ResourceError past brute_cap.
inline MaxDenResult max_den_bruteforce(const FiniteRing& R, const Limits& limits = {}) {
  if (R.order() > limits.brute_cap)
    throw ResourceError("max_den_bruteforce needs order <= " +
                            std::to_string(limits.brute_cap),
                        0);
  std::vector<MultSet> denominators;
  if (R.order() <= limits.raw_cap) {
    for (MultSet& S : enumerate_mult_sets(R, limits))
      if (is_left_denominator(R, S)) denominators.push_back(std::move(S));
  } else {
    for (const Ideal& a : enumerate_ideals(R, limits)) {
      if (a.size() == R.order()) continue;
      MultSet S = MultSet::trusted(detail::units_modulo(R, a.elements));
      if (is_left_denominator(R, S)) denominators.push_back(std::move(S));
    }
  }
  return detail::finish(R, std::move(denominators), MaxDenMethod::brute);
}

/// Every saturated left denominator set: for each proper ideal a, the
/// preimage of units(R/a), kept when it is a denominator set with ass = a.
inline std::vector<MultSet> saturated_denominator_sets(const FiniteRing& R,
                                                       const Limits& limits = {}) {
  std::vector<MultSet> out;
  for (const Ideal& a : enumerate_ideals(R, limits)) {
    if (a.size() == R.order()) continue;
    QuotientResult q = quotient_ring(R, a);
    MultSet S = MultSet::trusted(q.projection.preimage(units(q.ring)));
    if (is_left_denominator(R, S) && annihilated_by(R, S.elements()) == a.elements)
      out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline MaxDenResult max_den_via_ideals(const FiniteRing& R, const Limits& limits = {}) {
  return detail::finish(R, saturated_denominator_sets(R, limits), MaxDenMethod::ideals);
}

/// brute when order <= brute_cap, otherwise ideals.
inline MaxDenResult max_den(const FiniteRing& R, const Limits& limits = {}) {
  return R.order() <= limits.brute_cap ? max_den_bruteforce(R, limits)
                                       : max_den_via_ideals(R, limits);
}

/// Intersection of ass(S) over the maximal left denominator sets.
inline Ideal localization_radical(const FiniteRing& R, const MaxDenResult& maxden) {
  ElementSet out = R.all();
  for (const auto& loc : maxden.localizations) out = out & loc.kernel.elements;
  return Ideal{out, Side::two_sided};
}

inline Ideal localization_radical(const FiniteRing& R, const Limits& limits = {}) {
  return localization_radical(R, max_den(R, limits));
}

/// 0 -> l_R -> R -> prod S^{-1}R: each sigma_S is a homomorphism and the
/// common kernel, read off the maps element by element, is l_R.
inline ValidationReport exact_sequence_check(const FiniteRing& R, const Limits& limits = {}) {
  MaxDenResult maxden = max_den(R, limits);
  ValidationReport report;
  for (std::size_t k = 0; k < maxden.localizations.size(); ++k) {
    const RingHom& sigma = maxden.localizations[k].sigma;
    ValidationReport hom = hom_check(sigma.map, R, sigma.codomain);
    for (const auto& v : hom.violations) report.fail("sigma_" + std::to_string(k) + ":" + v.axiom, v.witness);
  }
  Ideal radical = localization_radical(R, maxden);
  for (std::size_t r = 0; r < R.order(); ++r) {
    bool in_kernel = std::all_of(maxden.localizations.begin(), maxden.localizations.end(),
                                 [&](const LocalizationResult& loc) { return loc.sigma(Elem(r)) == 0; });
    if (in_kernel != radical.contains(Elem(r))) {
      report.fail("ker(sigma)=l_R", {Elem(r)});
      break;
    }
  }
  return report;
}

/// { R \ p : p minimal prime } for a commutative ring.
inline MaxDenResult commutative_maxden(const FiniteRing& R, const Limits& limits = {}) {
  if (!is_commutative(R))
    throw PreconditionError("commutative_maxden: ring is not commutative");
  std::vector<MultSet> sets;
  for (const Ideal& p : minimal_primes(R, limits)) {
    MultSet S = MultSet::from(R, p.elements.complement());
    ensure(bool(is_left_denominator(R, S)), "complement of a minimal prime is not a denominator set");
    ensure(saturate(R, S) == S, "complement of a minimal prime is not saturated");
    sets.push_back(std::move(S));
  }
  std::sort(sets.begin(), sets.end());
  MaxDenResult result;
  result.method = MaxDenMethod::ideals;
  result.sets = sets;
  for (const MultSet& S : result.sets) result.localizations.push_back(localize(R, S));
  return result;
}

// ---------------------------------------------------------------------------
// Block projections
// ---------------------------------------------------------------------------

struct BlockProjection {
  std::size_t index = 0;
  RingHom hom;                // p_i : R -> Qbar_i
  ElementSet unit_preimage;   // p_i^{-1}(units of Qbar_i)
};

/// p_i = (r -> e_i r) composed with R -> R/n, one per block.
inline std::vector<BlockProjection> block_projections(const FiniteRing& R) {
  SemisimpleQuotient sq = semisimple_quotient(R);
  std::vector<BlockProjection> out;
  for (std::size_t i = 0; i < sq.blocks.s; ++i) {
    RingHom p = compose(sq.blocks.projections[i], sq.quotient.projection);
    ValidationReport check = hom_check(p.map, p.domain, p.codomain);
    ensure(check.ok, "block projection is not a homomorphism");
    ensure(sq.radical.radical.elements.subset_of(p.kernel().elements),
           "block projection does not kill the prime radical");
    ElementSet pre = p.preimage(units(p.codomain));
    out.push_back(BlockProjection{i, std::move(p), std::move(pre)});
  }
  return out;
}

/// Members of D_i: candidate denominator sets whose p_i-image consists of units.
inline std::vector<MultSet> block_members(const BlockProjection& p,
                                          const std::vector<MultSet>& candidates) {
  std::vector<MultSet> out;
  for (const MultSet& S : candidates)
    if (S.elements().subset_of(p.unit_preimage)) out.push_back(S);
  return out;
}

/// S'_i: the monoid generated by the union of all saturated denominator sets
/// in D_i. Asserted to be a denominator set in D_i containing every member.
/// Saturated members suffice: p_i(S) inside the units forces ass(S) into
/// ker p_i, so p_i factors through R/ass(S) and the saturation stays in D_i.
inline MultSet largest_block_denominator(const FiniteRing& R, std::size_t i,
                                         const Limits& limits = {}) {
  std::vector<BlockProjection> projections = block_projections(R);
  if (i >= projections.size())
    throw InputError("block index " + std::to_string(i) + " out of range (s = " +
                     std::to_string(projections.size()) + ")");
  std::vector<MultSet> members =
      block_members(projections[i], saturated_denominator_sets(R, limits));
  ElementSet all_members(R.order());
  all_members.insert(R.one());
  for (const MultSet& S : members) all_members = all_members | S.elements();
  ClosureResult closure = monoid_closure(R, all_members);
  ensure(!absorbed(closure), "union of D_i generates zero");
  MultSet largest = std::get<MultSet>(closure);
  ensure(bool(is_left_denominator(R, largest)), "S'_i is not a denominator set");
  ensure(largest.elements().subset_of(projections[i].unit_preimage), "S'_i leaves D_i");
  for (const MultSet& S : members)
    ensure(S.elements().subset_of(largest.elements()), "S'_i misses a member of D_i");
  return largest;
}

// ---------------------------------------------------------------------------
// Finiteness bound and the equality criterion
// ---------------------------------------------------------------------------

struct BoundReport {
  std::size_t count = 0;  // |max.Den_l(R)|
  std::size_t s = 0;      // number of blocks of R/n
  bool commutative = false;
  bool bound_holds = false;          // count <= s
  bool matches_block_sets = false;   // max.Den_l = maximal elements of {S'_i}
  bool commutative_equality = true;  // count == s when commutative
  bool holds = false;
  std::vector<MultSet> block_sets;   // S'_1, ..., S'_s
};

inline BoundReport bound_check(const FiniteRing& R, const Limits& limits = {}) {
  BoundReport report;
  MaxDenResult maxden = max_den(R, limits);
  report.count = maxden.sets.size();
  report.s = block_projections(R).size();
  report.commutative = is_commutative(R);
  for (std::size_t i = 0; i < report.s; ++i)
    report.block_sets.push_back(largest_block_denominator(R, i, limits));
  report.bound_holds = report.count <= report.s;
  report.matches_block_sets = detail::maximal_sets(report.block_sets) == maxden.sets;
  if (report.commutative) report.commutative_equality = report.count == report.s;
  report.holds = report.bound_holds && report.matches_block_sets && report.commutative_equality;
  return report;
}

struct PairWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  bool found = false;
  std::optional<MultSet> left;   // S_i in D_i
  std::optional<MultSet> right;  // S_j in D_j
  std::vector<Elem> trace;       // word with product zero
};

struct PairCriterionReport {
  std::size_t count = 0;
  std::size_t s = 0;
  bool criterion = true;         // a zero-product pair exists for every i != j
  bool equality = false;         // count == s
  bool agree = false;            // criterion <=> equality
  bool maxden_is_block_sets = true;  // checked when equality holds
  std::vector<PairWitness> pairs;
  bool holds() const { return agree && maxden_is_block_sets; }
};

/// For each i < j, searches S_i in D_i and S_j in D_j with 0 in S_i S_j.
/// D_i ranges over all denominator sets when order <= raw_cap, otherwise over
/// the saturated ones. The reported pair minimizes |S_i| + |S_j|, then
/// (S_i, S_j) in report order.
inline PairCriterionReport theorem_4_2_check(const FiniteRing& R, const Limits& limits = {}) {
  PairCriterionReport report;
  MaxDenResult maxden = max_den(R, limits);
  std::vector<BlockProjection> projections = block_projections(R);
  report.count = maxden.sets.size();
  report.s = projections.size();

  std::vector<MultSet> candidates;
  if (R.order() <= limits.raw_cap) {
    for (MultSet& S : enumerate_mult_sets(R, limits))
      if (is_left_denominator(R, S)) candidates.push_back(std::move(S));
  } else {
    candidates = saturated_denominator_sets(R, limits);
  }
  std::vector<std::vector<MultSet>> members;
  for (const auto& p : projections) members.push_back(block_members(p, candidates));

  for (std::size_t i = 0; i < report.s; ++i)
    for (std::size_t j = i + 1; j < report.s; ++j) {
      PairWitness w;
      w.i = i;
      w.j = j;
      std::size_t best = SIZE_MAX;
      for (const MultSet& A : members[i])
        for (const MultSet& B : members[j]) {
          std::size_t weight = A.size() + B.size();
          if (weight >= best) continue;
          ClosureResult prod = monoid_closure(R, A.elements() | B.elements());
          if (auto* z = std::get_if<ZeroAbsorbed>(&prod)) {
            best = weight;
            w.found = true;
            w.left = A;
            w.right = B;
            w.trace = z->trace;
          }
        }
      report.criterion = report.criterion && w.found;
      report.pairs.push_back(std::move(w));
    }
  report.equality = report.count == report.s;
  report.agree = report.criterion == report.equality;
  if (report.equality) {
    std::vector<MultSet> block_sets;
    for (std::size_t i = 0; i < report.s; ++i)
      block_sets.push_back(largest_block_denominator(R, i, limits));
    std::sort(block_sets.begin(), block_sets.end());
    report.maxden_is_block_sets = block_sets == maxden.sets;
  }
  return report;
}

}  // namespace ringloc
