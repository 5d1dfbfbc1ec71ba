#pragma once

/**
 * @file ore.hpp
 * @brief Multiplicative sets, the left Ore and left denominator conditions,
 *        ass(S), localization and saturation.
 *
 * On a finite ring the left localization at a denominator set S is the
 * quotient R/ass(S): the images of S are regular in the quotient, hence
 * units. localize() computes the quotient and enforces exactly that.
 */

#include <algorithm>
#include <deque>
#include <string>
#include <variant>
#include <vector>

#include "ringloc/core.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

/// Contains one, excludes zero, closed under multiplication.
class MultSet {
 public:
  /// Throws InputError naming the violated invariant.
  static MultSet from(const FiniteRing& R, ElementSet set) {
    if (set.order() != R.order()) throw InputError("set belongs to a different ring");
    if (!set.contains(R.one())) throw InputError("multiplicative set must contain one");
    if (set.contains(0)) throw InputError("multiplicative set must not contain zero");
    std::vector<Elem> xs = set.elements();
    for (Elem a : xs)
      for (Elem b : xs)
        if (!set.contains(R.mul(a, b)))
          throw InputError("set is not multiplicatively closed: " + std::to_string(a) +
                           "*" + std::to_string(b));
    return MultSet(std::move(set));
  }

  /// Caller guarantees the invariants.
  static MultSet trusted(ElementSet set) { return MultSet(std::move(set)); }

  const ElementSet& elements() const { return set_; }
  std::size_t size() const { return set_.size(); }
  bool contains(Elem e) const { return set_.contains(e); }

  friend bool operator==(const MultSet&, const MultSet&) = default;
  friend auto operator<=>(const MultSet& a, const MultSet& b) { return a.set_ <=> b.set_; }

 private:
  explicit MultSet(ElementSet set) : set_(std::move(set)) {}
  ElementSet set_;
};

/// The generated monoid reached zero. `trace` is a shortest word of
/// generators whose product is zero.
struct ZeroAbsorbed {
  std::vector<Elem> trace;
};

using ClosureResult = std::variant<MultSet, ZeroAbsorbed>;

/// Smallest multiplicatively closed set containing gens and one, explored
/// breadth-first over words in the generators (generators in id order).
inline ClosureResult monoid_closure(const FiniteRing& R, const ElementSet& gens) {
  std::vector<Elem> generators;
  gens.for_each([&](Elem g) {
    if (g != R.one()) generators.push_back(g);
  });
  for (Elem g : generators)
    if (g == 0) return ZeroAbsorbed{{0}};

  ElementSet seen(R.order());
  std::vector<int> parent(R.order(), -1);
  std::vector<Elem> via(R.order(), 0);
  std::deque<Elem> queue;
  seen.insert(R.one());
  queue.push_back(R.one());
  auto trace_of = [&](Elem x) {
    std::vector<Elem> word;
    while (x != R.one()) {
      word.push_back(via[x]);
      x = Elem(parent[x]);
    }
    std::reverse(word.begin(), word.end());
    return word;
  };
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem g : generators) {
      Elem y = R.mul(x, g);
      if (seen.contains(y)) continue;
      parent[y] = x;
      via[y] = g;
      if (y == 0) return ZeroAbsorbed{trace_of(y)};
      seen.insert(y);
      queue.push_back(y);
    }
  }
  return MultSet::trusted(seen);
}

inline bool absorbed(const ClosureResult& r) {
  return std::holds_alternative<ZeroAbsorbed>(r);
}

// ---------------------------------------------------------------------------
// Ore and denominator conditions
// ---------------------------------------------------------------------------

/// For every r in R and s in S, Sr meets Rs. Witness: first failing (r, s).
inline Witnessed is_left_ore(const FiniteRing& R, const MultSet& S) {
  std::vector<Elem> ss = S.elements().elements();
  std::vector<ElementSet> Rs;
  Rs.reserve(ss.size());
  for (Elem s : ss) Rs.push_back(right_multiple(R, R.all(), s));
  for (std::size_t r = 0; r < R.order(); ++r) {
    ElementSet Sr = right_multiple(R, S.elements(), Elem(r));
    for (std::size_t k = 0; k < ss.size(); ++k)
      if (!Sr.intersects(Rs[k])) return Witnessed::no({Elem(r), ss[k]});
  }
  return Witnessed::yes();
}

/// Right Ore condition, evaluated as the left condition in the opposite ring.
inline Witnessed is_right_ore(const FiniteRing& R, const MultSet& S) {
  return is_left_ore(opposite(R), S);
}

/// {r : sr = 0 for some s in S}, as a raw set.
inline ElementSet annihilated_by(const FiniteRing& R, const ElementSet& S) {
  ElementSet out(R.order());
  for (std::size_t r = 0; r < R.order(); ++r)
    S.for_each([&](Elem s) {
      if (R.mul(s, Elem(r)) == 0) out.insert(Elem(r));
    });
  return out;
}

/// Left Ore plus left reversibility (rs = 0 with s in S forces tr = 0 for
/// some t in S). Witness: the Ore witness, or the first (r, s) with rs = 0
/// and r outside ass(S).
inline Witnessed is_left_denominator(const FiniteRing& R, const MultSet& S) {
  if (Witnessed ore = is_left_ore(R, S); !ore) return ore;
  ElementSet ass = annihilated_by(R, S.elements());
  for (std::size_t r = 0; r < R.order(); ++r) {
    if (ass.contains(Elem(r))) continue;
    for (Elem s : S.elements().elements())
      if (R.mul(Elem(r), s) == 0) return Witnessed::no({Elem(r), s});
  }
  return Witnessed::yes();
}

/// ass(S). When S is left Ore the set is certified a two-sided ideal and
/// tagged so; otherwise it is returned with Side::unverified.
inline Ideal ass_ideal(const FiniteRing& R, const MultSet& S) {
  ElementSet set = annihilated_by(R, S.elements());
  if (is_left_ore(R, S)) {
    ensure(is_ideal(R, set, Side::two_sided), "ass(S) of a left Ore set is not an ideal");
    return Ideal{set, Side::two_sided};
  }
  return Ideal{set, Side::unverified};
}

// ---------------------------------------------------------------------------
// Localization
// ---------------------------------------------------------------------------

struct LocalizationResult {
  FiniteRing localized;
  RingHom sigma;
  Ideal kernel;
  ElementSet inverted_image;
};

inline std::string describe_witness(const std::vector<Elem>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + std::to_string(w[i]);
  return out + ")";
}

/// S^{-1}R = R/ass(S). Throws PreconditionError with the denominator witness
/// when S is not a left denominator set.
inline LocalizationResult localize(const FiniteRing& R, const MultSet& S) {
  if (Witnessed den = is_left_denominator(R, S); !den)
    throw PreconditionError("not a left denominator set, witness (r, s) = " +
                                describe_witness(den.witness),
                            den.witness);
  Ideal kernel = ass_ideal(R, S);
  QuotientResult q = quotient_ring(R, kernel);
  ElementSet image = q.projection.image(S.elements());
  ElementSet units_q = units(q.ring);
  ensure(image.subset_of(units_q), "image of S is not inside the units of R/ass(S)");
  ensure(q.projection.kernel().elements == kernel.elements, "sigma kernel differs from ass(S)");
  return LocalizationResult{q.ring, q.projection, kernel, image};
}

/// sigma^{-1}(units of S^{-1}R).
inline MultSet saturate(const FiniteRing& R, const MultSet& S) {
  LocalizationResult loc = localize(R, S);
  MultSet sat = MultSet::trusted(loc.sigma.preimage(units(loc.localized)));
  ensure(S.elements().subset_of(sat.elements()), "saturation does not contain S");
  ensure(bool(is_left_denominator(R, sat)), "saturation is not a denominator set");
  ensure(annihilated_by(R, sat.elements()) == loc.kernel.elements,
         "saturation changed ass(S)");
  return sat;
}

/// The submonoid generated by S and T. When both are left denominator sets
/// and the result avoids zero, the result is itself a denominator set.
inline ClosureResult product_set(const FiniteRing& R, const MultSet& S, const MultSet& T) {
  ClosureResult out = monoid_closure(R, S.elements() | T.elements());
  if (auto* st = std::get_if<MultSet>(&out)) {
    if (is_left_denominator(R, S) && is_left_denominator(R, T))
      ensure(bool(is_left_denominator(R, *st)),
             "product of denominator sets avoiding zero is not a denominator set");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Raw enumeration
// ---------------------------------------------------------------------------

/// Every multiplicative set of R, by scanning all subsets of R \ {0, 1}.
/// Requires order <= limits.raw_cap (and at most 26 to keep 2^(n-2) sane).
inline std::vector<MultSet> enumerate_mult_sets(const FiniteRing& R,
                                                const Limits& limits = {}) {
  const std::size_t n = R.order();
  if (n > limits.raw_cap || n > 26)
    throw ResourceError("raw submonoid enumeration needs order <= " +
                            std::to_string(std::min<std::size_t>(limits.raw_cap, 26)),
                        0);
  std::vector<Elem> free;
  for (std::size_t x = 1; x < n; ++x)
    if (Elem(x) != R.one()) free.push_back(Elem(x));
  std::vector<MultSet> out;
  const std::uint64_t total = std::uint64_t(1) << free.size();
  std::vector<Elem> members;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet set(n);
    set.insert(R.one());
    members.assign(1, R.one());
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask >> k & 1) {
        set.insert(free[k]);
        members.push_back(free[k]);
      }
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i)
      for (std::size_t j = 0; j < members.size() && closed; ++j)
        closed = set.contains(R.mul(members[i], members[j]));
    if (closed) out.push_back(MultSet::trusted(std::move(set)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The largest left Ore set of regular elements. On a finite ring regular
/// elements are units, so this is the unit group and Q_l(R) = R.
inline MultSet largest_regular_ore(const FiniteRing& R, const Limits& limits = {}) {
  ElementSet u = units(R);
  ensure(u == regular_elements(R), "regular elements differ from units");
  MultSet S = MultSet::trusted(u);
  ensure(bool(is_left_ore(R, S)), "unit group is not left Ore");
  ensure(bool(is_right_ore(R, S)), "unit group is not right Ore");
  if (R.order() <= limits.raw_cap) {
    for (const MultSet& T : enumerate_mult_sets(R, limits))
      if (T.elements().subset_of(u) && is_left_ore(R, T))
        ensure(T.elements().subset_of(S.elements()),
               "a regular left Ore set escapes the unit group");
  }
  return S;
}

}  // namespace ringloc
