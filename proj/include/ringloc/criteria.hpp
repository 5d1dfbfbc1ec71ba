#pragma once

/**
 * @file criteria.hpp
 * @brief Checkers that evaluate the localization criteria on a finite ring and
 *        report every condition with its label and witness.
 *
 * On a finite ring every regular element is a unit, so the classical left
 * quotient ring Q is R itself, Q/n_Q is R/n and C~^{-1}(R/n) is R/n. The
 * checkers evaluate each condition directly on the tables anyway; the
 * conditions that are constant on finite rings (finiteness and chain
 * conditions) are recorded as constants with a note.
 */

#include <optional>
#include <string>
#include <vector>

#include "ringloc/core.hpp"
#include "ringloc/graded.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/ore.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

namespace detail {

inline constexpr const char* kFiniteNoetherian =
    "finite ring: every chain of left ideals is finite";
inline constexpr const char* kFiniteModules = "finite modules are finitely generated";
inline constexpr const char* kFiniteArtinian = "finite ring: left Artinian";

/// First element of `a` outside `b`, if any.
inline std::vector<Elem> escape(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> out;
  a.for_each([&](Elem x) {
    if (out.empty() && !b.contains(x)) out.push_back(x);
  });
  return out;
}

inline std::vector<Elem> first_difference(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> w = escape(a, b);
  return w.empty() ? escape(b, a) : w;
}

}  // namespace detail

/// The regular elements of Q~ = R/n (for a finite ring, its unit group).
struct CDagger {
  ElementSet set;
};

inline CDagger c_dagger(const FiniteRing& Rbar) {
  CDagger out{regular_elements(Rbar)};
  ensure(out.set == units(Rbar), "regular elements of R/n differ from its units");
  return out;
}

/// Conditions (a) to (f) for R/n, C~ and the layers N_i. Condition (f) is
/// reported twice: over the regular elements of R/n, then over C~.
inline ConditionReport criteria_theorem_1_2(const FiniteRing& R) {
  RadicalData rad = prime_radical(R);
  QuotientResult pi = quotient_ring(R, rad.radical);
  MultSet ct = c_tilde(R, pi);
  ElementSet cbar = regular_elements(pi.ring);
  ConditionReport report;

  report.add("1.2(a)", ct.elements().subset_of(cbar), detail::escape(ct.elements(), cbar));
  Witnessed ore = is_left_ore(pi.ring, ct);
  report.add("1.2(b)", ore.holds, ore.witness);
  report.add("1.2(c)", true, {}, detail::kFiniteNoetherian);
  bool nilpotent = rad.powers.back().size() == 1;
  report.add("1.2(d)", nilpotent, {},
             "n^" + std::to_string(rad.nu + 1) + " = 0 with nu = " + std::to_string(rad.nu));
  report.add("1.2(e)", true, {}, detail::kFiniteModules);
  ConditionReport f = condition_f_check(R);
  const Condition* over_cbar = f.find(kConditionFOverCbar);
  const Condition* over_ct = f.find(kConditionFOverCtilde);
  report.add("1.2(f)", over_cbar->holds, over_cbar->witness, over_cbar->note);
  report.add("1.2(f) over Ctilde", over_ct->holds, over_ct->witness, over_ct->note);
  return report;
}

/// C~ is a left denominator set of gr R sitting in degree 0, C~ consists of
/// regular elements of R/n, and localizing gr R at C~ changes nothing.
inline ConditionReport criteria_theorem_1_3(const FiniteRing& R, const Limits& limits = {}) {
  RadicalData rad = prime_radical(R);
  QuotientResult pi = quotient_ring(R, rad.radical);
  MultSet ct = c_tilde(R, pi);
  GradedRing G = gr_ring(R, limits);
  ConditionReport report;

  ElementSet in_gr(G.ring.order());
  ct.elements().for_each([&](Elem c) { in_gr.insert(G.embed(c)); });
  MultSet S = MultSet::from(G.ring, in_gr);
  Witnessed den = is_left_denominator(G.ring, S);
  report.add("1.3(den)", den.holds, den.witness);
  ElementSet cbar = regular_elements(pi.ring);
  report.add("1.3(reg)", ct.elements().subset_of(cbar), detail::escape(ct.elements(), cbar));
  report.add("1.3(noetherian)", true, {}, detail::kFiniteNoetherian);
  report.add("1.3(nilpotent)", rad.powers.back().size() == 1);
  if (den) {
    LocalizationResult loc = localize(G.ring, S);
    bool same = loc.kernel.size() == 1 && loc.localized.order() == G.ring.order() &&
                same_tables(loc.localized, G.ring);
    report.add("1.3(gr Q)", same, detail::escape(loc.kernel.elements, ElementSet(G.ring.order(), {0})),
               "gr Q = gr R and C~^{-1} gr R computed as gr R / ass(C~)");
  } else {
    report.add("1.3(gr Q)", false, den.witness, "C~ is not a denominator set of gr R");
  }
  return report;
}

/// The localization of gr R at S (default C~, placed in degree 0) is graded:
/// ass(S) is spanned by its homogeneous components and the quotient is the
/// direct sum of the images of the components.
inline ValidationReport graded_localization_check(const FiniteRing& R,
                                                  std::optional<ElementSet> S = std::nullopt,
                                                  const Limits& limits = {}) {
  GradedRing G = gr_ring(R, limits);
  ValidationReport report;
  if (!S) {
    QuotientResult pi = quotient_ring(R, prime_radical(R).radical);
    S = ElementSet(G.ring.order());
    c_tilde(R, pi).elements().for_each([&](Elem c) { S->insert(G.embed(c)); });
  }
  if (S->order() != G.ring.order()) throw InputError("set does not belong to gr R");
  if (std::vector<Elem> w = detail::escape(*S, G.degree_zero()); !w.empty()) {
    report.fail("S inside degree 0", w);
    return report;
  }
  MultSet T = MultSet::from(G.ring, *S);
  if (Witnessed den = is_left_denominator(G.ring, T); !den) {
    report.fail("S is a left denominator set of gr R", den.witness);
    return report;
  }
  LocalizationResult loc = localize(G.ring, T);
  const std::size_t layers = G.layer_sizes.size();
  loc.kernel.elements.for_each([&](Elem x) {
    for (std::size_t i = 0; i < layers; ++i)
      if (!loc.kernel.contains(G.homogeneous(i, G.component(x, i)))) {
        report.fail("ass(S) is a graded ideal", {x, Elem(i)});
        return;
      }
  });
  std::size_t product = 1;
  for (std::size_t i = 0; i < layers; ++i) {
    ElementSet piece(G.ring.order());
    for (std::size_t c = 0; c < G.layer_sizes[i]; ++c) piece.insert(G.homogeneous(i, Elem(c)));
    product *= loc.sigma.image(piece).size();
  }
  if (product != loc.localized.order())
    report.fail("localization is the direct sum of its homogeneous pieces",
                {Elem(product), Elem(loc.localized.order())});
  return report;
}

/// Statements (1) to (6) at Q = R. Statement (2f) is evaluated over C~ as
/// written there, and separately over the regular elements of R/n.
inline ConditionReport theorem_2_4_audit(const FiniteRing& R) {
  RadicalData rad = prime_radical(R);
  QuotientResult pi = quotient_ring(R, rad.radical);
  const FiniteRing& Rbar = pi.ring;
  MultSet ct = c_tilde(R, pi);
  ElementSet C = regular_elements(R);
  ElementSet cbar = regular_elements(Rbar);
  ConditionReport report;

  {
    // Q = R: localizing at C is the identity, so n_Q is n; then the powers.
    LocalizationResult q = localize(R, MultSet::trusted(C));
    bool ok = q.kernel.size() == 1 && same_tables(q.localized, R);
    std::vector<Elem> w;
    for (std::size_t i = 1; ok && i + 1 < rad.powers.size(); ++i) {
      Ideal next = ideal_product(R, rad.powers[i], rad.radical);
      if (next.elements != rad.powers[i + 1].elements) {
        ok = false;
        w = {Elem(i)};
      }
    }
    ok = ok && rad.powers.back().size() == 1 &&
         (rad.nu == 0 || rad.powers[rad.nu].size() > 1);
    report.add("2.4(1)", ok, w, "nu = " + std::to_string(rad.nu));
  }
  {
    std::vector<Elem> w;
    C.for_each([&](Elem c) {
      rad.radical.elements.for_each([&](Elem x) {
        if (w.empty() && !C.contains(R.add(c, x))) w = {c, x};
      });
    });
    report.add("2.4(2a)", w.empty(), w);
  }
  {
    Witnessed den = is_left_denominator(Rbar, ct);
    bool ok = den.holds && annihilated_by(Rbar, ct.elements()).size() == 1;
    report.add("2.4(2b)", ok, den.witness);
  }
  {
    bool ok = false;
    if (is_left_denominator(Rbar, ct)) {
      LocalizationResult qt = localize(Rbar, ct);
      ok = same_tables(qt.localized, Rbar) &&
           is_semiprime(qt.localized, zero_ideal(qt.localized)).holds;
    }
    report.add("2.4(2c)", ok);
  }
  report.add("2.4(2d)", rad.powers.back().size() == 1);
  report.add("2.4(2e)", true, {}, detail::kFiniteModules);
  {
    ConditionReport f = condition_f_check(R);
    const Condition* over_ct = f.find(kConditionFOverCtilde);
    const Condition* over_cbar = f.find(kConditionFOverCbar);
    report.add("2.4(2f)", over_ct->holds, over_ct->witness, over_ct->note);
    report.add("2.4(2f) over Cbar", over_cbar->holds, over_cbar->witness, over_cbar->note);
  }
  {
    bool ok = is_semiprime(Rbar, zero_ideal(Rbar)).holds;
    std::string note;
    try {
      BlockDecomposition blocks = block_decomposition(Rbar);
      note = "s = " + std::to_string(blocks.s);
    } catch (const PreconditionError&) {
      ok = false;
    }
    report.add("2.4(3)", ok, {}, note);
  }
  {
    ElementSet ur = units(R), ubar = units(Rbar);
    ElementSet one_plus_n(R.order());
    rad.radical.elements.for_each([&](Elem x) { one_plus_n.insert(R.add(R.one(), x)); });
    std::vector<Elem> w = detail::first_difference(pi.projection.image(ur), ubar);
    bool ok = w.empty() && ur.size() == one_plus_n.size() * ubar.size();
    ur.for_each([&](Elem u) {
      if ((pi.projection(u) == pi.ring.one()) != one_plus_n.contains(u)) {
        ok = false;
        if (w.empty()) w = {u};
      }
    });
    report.add("2.4(4)", ok, w,
               "|R*| = " + std::to_string(ur.size()) + ", |1+n| = " +
                   std::to_string(one_plus_n.size()) + ", |Rbar*| = " +
                   std::to_string(ubar.size()));
  }
  {
    ElementSet pre = pi.projection.preimage(cbar);
    report.add("2.4(5)", pre == C, detail::first_difference(pre, C));
  }
  {
    CDagger dagger = c_dagger(Rbar);
    // sigma~ : R/n -> Q~ is the identity map here.
    ElementSet pre = identity_hom(Rbar).preimage(dagger.set);
    bool ok = dagger.set == units(Rbar) && pre == cbar;
    report.add("2.4(6)", ok, detail::first_difference(pre, cbar));
  }
  return report;
}

/// Statements (1) to (6), each computed on its own, plus a condition that
/// they agree (the statements are equivalent).
inline ConditionReport corollary_2_5_check(const FiniteRing& R) {
  RadicalData rad = prime_radical(R);
  QuotientResult pi = quotient_ring(R, rad.radical);
  const FiniteRing& Rbar = pi.ring;
  MultSet ct = c_tilde(R, pi);
  ElementSet cbar = regular_elements(Rbar);
  ConditionReport report;

  bool s1 = true;
  std::string note1;
  try {
    BlockDecomposition blocks = block_decomposition(Rbar);
    for (const FiniteRing& b : blocks.blocks) s1 = s1 && is_simple(b);
    note1 = "s = " + std::to_string(blocks.s);
  } catch (const PreconditionError&) {
    s1 = false;
  }
  report.add("2.5(1)", s1, {}, note1);

  MultSet reg = largest_regular_ore(Rbar);
  LocalizationResult self = localize(Rbar, reg);
  bool s2 = self.kernel.size() == 1 && same_tables(self.localized, Rbar);
  report.add("2.5(2)", s2);

  ElementSet pre_units = identity_hom(Rbar).preimage(units(Rbar));
  bool s3 = cbar == pre_units;
  report.add("2.5(3)", s3, detail::first_difference(cbar, pre_units));

  ElementSet C = regular_elements(R);
  ElementSet pre = pi.projection.preimage(cbar);
  bool s4 = C == pre;
  report.add("2.5(4)", s4, detail::first_difference(C, pre));

  bool s5 = ct.elements() == cbar;
  report.add("2.5(5)", s5, detail::first_difference(ct.elements(), cbar));

  report.add("2.5(6)", true, {}, detail::kFiniteArtinian);

  bool agree = s1 == s2 && s2 == s3 && s3 == s4 && s4 == s5 && s5 == true;
  report.add("2.5 equivalent", agree);
  return report;
}

/// p -> p/n between the minimal primes of R and of R/n, with inverse the
/// preimage; Min(R) -> Min(Q) is the identity since Q = R.
inline ValidationReport min_prime_bijection_check(const FiniteRing& R, const Limits& limits = {}) {
  RadicalData rad = prime_radical(R);
  QuotientResult pi = quotient_ring(R, rad.radical);
  std::vector<Ideal> minR = minimal_primes(R, limits);
  std::vector<Ideal> minBar = minimal_primes(pi.ring, limits);
  ValidationReport report;
  auto listed = [](const std::vector<Ideal>& list, const ElementSet& s) {
    for (const Ideal& I : list)
      if (I.elements == s) return true;
    return false;
  };
  if (minR.size() != minBar.size())
    report.fail("|Min(R)| = |Min(R/n)|", {Elem(minR.size()), Elem(minBar.size())});
  for (std::size_t k = 0; k < minR.size(); ++k) {
    ElementSet down = pi.projection.image(minR[k].elements);
    if (!listed(minBar, down)) report.fail("p/n is a minimal prime of R/n", {Elem(k)});
    if (pi.projection.preimage(down) != minR[k].elements)
      report.fail("preimage of p/n is p", {Elem(k)});
  }
  for (std::size_t k = 0; k < minBar.size(); ++k) {
    ElementSet up = pi.projection.preimage(minBar[k].elements);
    if (!listed(minR, up)) report.fail("preimage of a minimal prime of R/n is minimal", {Elem(k)});
    if (pi.projection.image(up) != minBar[k].elements)
      report.fail("image of the preimage is the prime", {Elem(k)});
  }
  return report;
}

/// For semiprime R: R is semisimple (a product of simple blocks), the largest
/// regular left Ore set is C and Q = R.
inline ConditionReport theorem_1_1_check(const FiniteRing& R) {
  ConditionReport report;
  if (Witnessed semi = is_semiprime(R, zero_ideal(R)); !semi) {
    report.skipped = "ring is not semiprime, witness " + describe_witness(semi.witness);
    return report;
  }
  bool simple = true;
  std::string note;
  try {
    BlockDecomposition blocks = block_decomposition(R);
    for (const FiniteRing& b : blocks.blocks) simple = simple && is_simple(b);
    note = "block orders";
    for (const FiniteRing& b : blocks.blocks) note += " " + std::to_string(b.order());
  } catch (const PreconditionError&) {
    simple = false;
  }
  report.add("1.1(semisimple)", simple, {}, note);
  ElementSet C = regular_elements(R);
  MultSet largest = largest_regular_ore(R);
  report.add("1.1(S_l = C)", largest.elements() == C,
             detail::first_difference(largest.elements(), C));
  LocalizationResult q = localize(R, largest);
  report.add("1.1(Q = R)", q.kernel.size() == 1 && same_tables(q.localized, R));
  return report;
}

}  // namespace ringloc
