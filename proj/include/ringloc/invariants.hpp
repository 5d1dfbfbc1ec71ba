#pragma once

/**
 * @file invariants.hpp
 * @brief Structural properties of denominator sets checked exhaustively on a
 *        single ring. Each returns a ValidationReport whose violations carry
 *        the offending elements (or set / ideal indices).
 */

#include <string>
#include <vector>

#include "ringloc/core.hpp"
#include "ringloc/graded.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/maxden.hpp"
#include "ringloc/ore.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

/// C lies in every maximal left denominator set, and either max.Den_l(R) is
/// {C} or C is not maximal.
inline ValidationReport regular_in_maximal_check(const FiniteRing& R, const MaxDenResult& maxden) {
  ValidationReport report;
  ElementSet C = regular_elements(R);
  bool c_listed = false;
  for (std::size_t k = 0; k < maxden.sets.size(); ++k) {
    if (!C.subset_of(maxden.sets[k].elements()))
      report.fail("C inside every maximal set", {Elem(k)});
    c_listed = c_listed || maxden.sets[k].elements() == C;
  }
  if (c_listed && maxden.sets.size() != 1)
    report.fail("C maximal forces max.Den_l = {C}", {Elem(maxden.sets.size())});
  return report;
}

/// Every maximal set is saturated, and saturation is idempotent on every
/// saturated denominator set.
inline ValidationReport saturation_check(const FiniteRing& R, const MaxDenResult& maxden,
                                         const std::vector<MultSet>& saturated) {
  ValidationReport report;
  for (std::size_t k = 0; k < maxden.sets.size(); ++k)
    if (saturate(R, maxden.sets[k]) != maxden.sets[k])
      report.fail("maximal set is saturated", {Elem(k)});
  for (std::size_t k = 0; k < saturated.size(); ++k) {
    MultSet once = saturate(R, saturated[k]);
    if (once != saturated[k] || saturate(R, once) != once)
      report.fail("saturation is idempotent", {Elem(k)});
  }
  return report;
}

/// For every saturated denominator set S and ideal b with pi_b(S) inside the
/// units of R/b, ass(S) lies in b: sigma_S is initial among such maps.
inline ValidationReport universal_property_check(const FiniteRing& R,
                                                 const std::vector<MultSet>& saturated,
                                                 const std::vector<Ideal>& ideals) {
  ValidationReport report;
  for (std::size_t k = 0; k < saturated.size(); ++k) {
    ElementSet ass = annihilated_by(R, saturated[k].elements());
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      if (ideals[b].size() == R.order()) continue;
      QuotientResult q = quotient_ring(R, ideals[b]);
      if (!q.projection.image(saturated[k].elements()).subset_of(units(q.ring))) continue;
      if (!ass.subset_of(ideals[b].elements))
        report.fail("ass(S) inside b when S maps to units of R/b", {Elem(k), Elem(b)});
    }
  }
  return report;
}

/// For every saturated denominator set S: the maximal kernels of s acting on
/// R reduce to tor_S(R). The same on each layer N_i over R/n for C~.
inline ValidationReport kernel_torsion_check(const FiniteRing& R,
                                             const std::vector<MultSet>& saturated) {
  ValidationReport report;
  FiniteModule M = regular_module(R);
  for (std::size_t k = 0; k < saturated.size(); ++k) {
    ValidationReport one = max_ker_check(saturated[k], M);
    for (const auto& v : one.violations) {
      std::vector<Elem> w{Elem(k)};
      w.insert(w.end(), v.witness.begin(), v.witness.end());
      report.fail(v.axiom, w);
    }
  }
  Filtration f = radical_filtration(R);
  QuotientResult pi = quotient_ring(R, f.radical.radical);
  MultSet ct = c_tilde(R, pi);
  for (std::size_t i = 1; i < f.layers.size(); ++i) {
    ValidationReport one = max_ker_check(ct, layer_as_module(f.layers[i], pi));
    for (const auto& v : one.violations) report.fail("layer " + std::to_string(i) + ": " + v.axiom, v.witness);
  }
  return report;
}

/// Commutative R and a nil ideal I (any ideal inside n): S -> pi_I(S) maps
/// max.Den(R) bijectively onto max.Den(R/I) with inverse the preimage.
/// Skipped (empty report) for non-commutative rings.
inline ValidationReport nil_quotient_bijection_check(const FiniteRing& R,
                                                     const std::vector<Ideal>& ideals,
                                                     const MaxDenResult& maxden,
                                                     const Limits& limits = {}) {
  ValidationReport report;
  if (!is_commutative(R)) return report;
  RadicalData rad = prime_radical(R);
  for (std::size_t b = 0; b < ideals.size(); ++b) {
    const Ideal& I = ideals[b];
    if (!I.elements.subset_of(rad.radical.elements)) continue;
    QuotientResult q = quotient_ring(R, I);
    MaxDenResult down = max_den(q.ring, limits);
    auto listed = [](const std::vector<MultSet>& sets, const ElementSet& s) {
      for (const MultSet& T : sets)
        if (T.elements() == s) return true;
      return false;
    };
    if (down.sets.size() != maxden.sets.size())
      report.fail("|max.Den(R)| = |max.Den(R/I)|", {Elem(b)});
    for (std::size_t k = 0; k < maxden.sets.size(); ++k) {
      ElementSet image = q.projection.image(maxden.sets[k].elements());
      if (!listed(down.sets, image)) report.fail("pi_I(S) is maximal in R/I", {Elem(b), Elem(k)});
      if (q.projection.preimage(image) != maxden.sets[k].elements())
        report.fail("preimage of pi_I(S) is S", {Elem(b), Elem(k)});
    }
    for (std::size_t k = 0; k < down.sets.size(); ++k) {
      ElementSet up = q.projection.preimage(down.sets[k].elements());
      if (!listed(maxden.sets, up)) report.fail("preimage of T is maximal in R", {Elem(b), Elem(k)});
    }
  }
  return report;
}

/// For every ideal I with S + I inside S for all maximal S:
/// |max.Den_l(R)| <= |max.Den_l(R/I)|.
inline ValidationReport quotient_bound_check(const FiniteRing& R,
                                             const std::vector<Ideal>& ideals,
                                             const MaxDenResult& maxden,
                                             const Limits& limits = {}) {
  ValidationReport report;
  for (std::size_t b = 0; b < ideals.size(); ++b) {
    const Ideal& I = ideals[b];
    if (I.size() == R.order()) continue;
    bool stable = true;
    for (const MultSet& S : maxden.sets)
      S.elements().for_each([&](Elem s) {
        I.elements.for_each([&](Elem x) { stable = stable && S.contains(R.add(s, x)); });
      });
    if (!stable) continue;
    QuotientResult q = quotient_ring(R, I);
    std::size_t below = max_den(q.ring, limits).sets.size();
    if (maxden.sets.size() > below)
      report.fail("|max.Den_l(R)| <= |max.Den_l(R/I)|",
                  {Elem(b), Elem(maxden.sets.size()), Elem(below)});
  }
  return report;
}

/// For every denominator set S in `sets` and ideal I missing S: pi_I(S) is a
/// left denominator set of R/I and ass(S) + I lies in the preimage of its ass.
inline ValidationReport quotient_transfer_check(const FiniteRing& R,
                                                const std::vector<MultSet>& sets,
                                                const std::vector<Ideal>& ideals) {
  ValidationReport report;
  for (std::size_t b = 0; b < ideals.size(); ++b) {
    const Ideal& I = ideals[b];
    if (I.size() == R.order() || I.size() == 1) continue;
    QuotientResult q = quotient_ring(R, I);
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (sets[k].elements().intersects(I.elements)) continue;
      MultSet image = MultSet::from(q.ring, q.projection.image(sets[k].elements()));
      if (Witnessed den = is_left_denominator(q.ring, image); !den) {
        report.fail("pi_I(S) is a left denominator set", {Elem(b), Elem(k)});
        continue;
      }
      ElementSet lifted = q.projection.preimage(annihilated_by(q.ring, image.elements()));
      ElementSet a_plus_i = ideal_sum(R, Ideal{annihilated_by(R, sets[k].elements())}, I).elements;
      if (!a_plus_i.subset_of(lifted))
        report.fail("ass(S) + I inside the preimage of ass(pi_I(S))", {Elem(b), Elem(k)});
    }
  }
  return report;
}

/// yz in S forces y, z in S, for C and for every saturated S with ass = 0.
/// Also checked on every saturated S, where it holds since S is a unit preimage.
inline ValidationReport factor_closure_check(const FiniteRing& R,
                                             const std::vector<MultSet>& saturated) {
  ValidationReport report;
  std::vector<ElementSet> targets{regular_elements(R)};
  for (const MultSet& S : saturated) targets.push_back(S.elements());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    bool found = false;
    for (std::size_t y = 0; y < R.order() && !found; ++y)
      for (std::size_t z = 0; z < R.order() && !found; ++z)
        if (targets[k].contains(R.mul(Elem(y), Elem(z))) &&
            !(targets[k].contains(Elem(y)) && targets[k].contains(Elem(z)))) {
          report.fail(k == 0 ? "yz in C forces y, z in C" : "yz in S forces y, z in S",
                      {Elem(k), Elem(y), Elem(z)});
          found = true;
        }
  }
  return report;
}

}  // namespace ringloc
