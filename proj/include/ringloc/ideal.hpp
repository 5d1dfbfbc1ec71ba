#pragma once

/**
 * @file ideal.hpp
 * @brief Ideal lattice of a finite ring: generated ideals, primality,
 *        minimal primes, the prime radical with its powers, quotient rings
 *        and the block decomposition of a semiprime ring.
 */

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "ringloc/core.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

/// Smallest ideal of the given side containing `gens`.
inline Ideal ideal_generated(const FiniteRing& R, const ElementSet& gens,
                             Side side = Side::two_sided) {
  const bool left = side == Side::left || side == Side::two_sided;
  const bool right = side == Side::right || side == Side::two_sided;
  ElementSet in(R.order());
  std::vector<Elem> members;
  std::deque<Elem> queue;
  auto push = [&](Elem x) {
    if (!in.contains(x)) {
      in.insert(x);
      members.push_back(x);
      queue.push_back(x);
    }
  };
  push(0);
  gens.for_each(push);
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    push(R.neg(x));
    for (std::size_t i = 0; i < members.size(); ++i) push(R.add(x, members[i]));
    for (std::size_t r = 0; r < R.order(); ++r) {
      if (left) push(R.mul(Elem(r), x));
      if (right) push(R.mul(x, Elem(r)));
    }
  }
  return Ideal{in, side == Side::unverified ? Side::two_sided : side};
}

inline Ideal zero_ideal(const FiniteRing& R) {
  return Ideal{ElementSet(R.order(), {0}), Side::two_sided};
}

inline Ideal unit_ideal(const FiniteRing& R) {
  return Ideal{R.all(), Side::two_sided};
}

/// Checks the ideal axioms for the requested side on a raw set.
inline bool is_ideal(const FiniteRing& R, const ElementSet& I, Side side) {
  if (!I.contains(0)) return false;
  std::vector<Elem> xs = I.elements();
  for (Elem x : xs) {
    if (!I.contains(R.neg(x))) return false;
    for (Elem y : xs)
      if (!I.contains(R.add(x, y))) return false;
    for (std::size_t r = 0; r < R.order(); ++r) {
      if ((side == Side::left || side == Side::two_sided) &&
          !I.contains(R.mul(Elem(r), x)))
        return false;
      if ((side == Side::right || side == Side::two_sided) &&
          !I.contains(R.mul(x, Elem(r))))
        return false;
    }
  }
  return true;
}

/// I + J for two-sided ideals.
inline Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  ElementSet out(R.order());
  std::vector<Elem> js = J.elements.elements();
  I.elements.for_each([&](Elem i) {
    for (Elem j : js) out.insert(R.add(i, j));
  });
  return Ideal{out, Side::two_sided};
}

/// I * J: additive span of all products ij.
inline Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  ElementSet products(R.order());
  std::vector<Elem> js = J.elements.elements();
  I.elements.for_each([&](Elem i) {
    for (Elem j : js) products.insert(R.mul(i, j));
  });
  return ideal_generated(R, products, Side::two_sided);
}

inline Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  return Ideal{I.elements & J.elements, Side::two_sided};
}

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

/// For all a, b outside P there is r with a r b outside P. Witness (a, b).
inline Witnessed is_prime(const FiniteRing& R, const Ideal& P) {
  if (P.elements.size() == R.order())
    throw InputError("is_prime: ideal is the whole ring");
  if (P.side != Side::two_sided)
    throw InputError("is_prime: ideal must be two-sided");
  std::vector<Elem> outside = P.elements.complement().elements();
  for (Elem a : outside)
    for (Elem b : outside) {
      bool found = false;
      for (std::size_t r = 0; r < R.order() && !found; ++r)
        found = !P.contains(R.mul(R.mul(a, Elem(r)), b));
      if (!found) return Witnessed::no({a, b});
    }
  return Witnessed::yes();
}

/// aRa inside I forces a in I. Witness: the first a violating it.
inline Witnessed is_semiprime(const FiniteRing& R, const Ideal& I) {
  for (std::size_t a = 0; a < R.order(); ++a) {
    if (I.contains(Elem(a))) continue;
    bool inside = true;
    for (std::size_t r = 0; r < R.order() && inside; ++r)
      inside = I.contains(R.mul(R.mul(Elem(a), Elem(r)), Elem(a)));
    if (inside) return Witnessed::no({Elem(a)});
  }
  return Witnessed::yes();
}

// ---------------------------------------------------------------------------
// Ideal enumeration
// ---------------------------------------------------------------------------

/// All two-sided ideals, sorted by (size, lexicographic). Principal ideals
/// are closed under pairwise sums until nothing new appears. Throws
/// ResourceError past limits.ideal_cap distinct ideals.
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& R,
                                           const Limits& limits = {}) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Ideal> all;
  auto admit = [&](Ideal I) {
    if (!seen.insert(I.elements).second) return false;
    if (seen.size() > limits.ideal_cap)
      throw ResourceError("ideal enumeration exceeded cap of " +
                              std::to_string(limits.ideal_cap),
                          seen.size() - 1);
    all.push_back(std::move(I));
    return true;
  };
  for (std::size_t x = 0; x < R.order(); ++x)
    admit(ideal_generated(R, ElementSet(R.order(), {Elem(x)})));
  std::size_t principal = all.size();
  // Every ideal is a sum of principal ones; adding one principal ideal at a
  // time to every known ideal reaches all of them.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t p = 0; p < principal; ++p) {
      Ideal sum = ideal_sum(R, all[i], all[p]);
      admit(std::move(sum));
    }
  std::sort(all.begin(), all.end(),
            [](const Ideal& a, const Ideal& b) { return a.elements < b.elements; });
  return all;
}

/// Inclusion-minimal prime ideals, sorted by (size, lexicographic).
inline std::vector<Ideal> minimal_primes(const FiniteRing& R,
                                         const Limits& limits = {}) {
  std::vector<Ideal> primes;
  for (const Ideal& I : enumerate_ideals(R, limits))
    if (I.size() < R.order() && is_prime(R, I)) primes.push_back(I);
  std::vector<Ideal> minimal;
  for (const Ideal& P : primes) {
    bool is_min = std::none_of(primes.begin(), primes.end(), [&](const Ideal& Q) {
      return Q.elements != P.elements && Q.elements.subset_of(P.elements);
    });
    if (is_min) minimal.push_back(P);
  }
  return minimal;
}

// ---------------------------------------------------------------------------
// Prime radical
// ---------------------------------------------------------------------------

/// The prime radical n with its powers R = n^0 > n > ... > n^nu > n^(nu+1) = 0.
/// nu is 0 exactly when n = 0; on a finite ring n is always nilpotent.
struct RadicalData {
  Ideal radical;
  std::size_t nu = 0;
  std::vector<Ideal> powers;  // size nu + 2

  /// max{i : x in n^i}, or nu + 1 for x = 0.
  std::size_t degree(Elem x) const {
    std::size_t d = 0;
    while (d + 1 < powers.size() && powers[d + 1].contains(x)) ++d;
    return d;
  }
};

/// Semiprime closure: starting from 0, repeatedly adjoin every a with aRa
/// inside the current ideal. The fixpoint is the smallest semiprime ideal.
inline RadicalData prime_radical(const FiniteRing& R) {
  Ideal current = zero_ideal(R);
  for (;;) {
    ElementSet adjoin = current.elements;
    for (std::size_t a = 0; a < R.order(); ++a) {
      if (current.contains(Elem(a))) continue;
      bool inside = true;
      for (std::size_t r = 0; r < R.order() && inside; ++r)
        inside = current.contains(R.mul(R.mul(Elem(a), Elem(r)), Elem(a)));
      if (inside) adjoin.insert(Elem(a));
    }
    if (adjoin == current.elements) break;
    current = ideal_generated(R, adjoin);
  }

  RadicalData data;
  data.radical = current;
  data.powers.push_back(unit_ideal(R));
  data.powers.push_back(current);
  // Strictly descending chain in a finite set: at most order steps.
  while (data.powers.back().size() > 1) {
    ensure(data.powers.size() <= R.order() + 1, "prime radical is not nilpotent");
    Ideal next = ideal_product(R, data.powers.back(), current);
    ensure(next.elements != data.powers.back().elements,
           "prime radical is not nilpotent");
    data.powers.push_back(next);
  }
  data.nu = data.powers.size() - 2;
  return data;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

struct QuotientResult {
  FiniteRing ring;
  RingHom projection;
  std::vector<Elem> representatives;  // smallest id in each coset
};

/// R/I with cosets numbered by their smallest representative; the zero coset
/// is id 0. Throws InputError when I is not a proper two-sided ideal.
inline QuotientResult quotient_ring(const FiniteRing& R, const Ideal& I) {
  if (I.side != Side::two_sided || !is_ideal(R, I.elements, Side::two_sided))
    throw InputError("quotient_ring: not a two-sided ideal");
  if (I.size() == R.order()) throw InputError("quotient_ring: ideal is the whole ring");

  const std::size_t n = R.order();
  std::vector<int> coset(n, -1);
  std::vector<Elem> reps;
  std::vector<Elem> members = I.elements.elements();
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(Elem(x));
    for (Elem i : members) coset[R.add(Elem(x), i)] = id;
  }
  const std::size_t m = reps.size();
  RawTables raw;
  raw.one = coset[R.one()];
  raw.add.assign(m, std::vector<long long>(m));
  raw.mul.assign(m, std::vector<long long>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      raw.add[a][b] = coset[R.add(reps[a], reps[b])];
      raw.mul[a][b] = coset[R.mul(reps[a], reps[b])];
    }
  std::string source;
  if (!R.source().empty()) {
    source = "Quot(" + R.source() + ", [";
    for (std::size_t k = 0; k < members.size(); ++k)
      source += (k ? ", " : "") + std::to_string(members[k]);
    source += "])";
  }
  FiniteRing Q = FiniteRing::make(raw, R.name().empty() ? "" : R.name() + "/I", source);
  std::vector<Elem> map(n);
  for (std::size_t x = 0; x < n; ++x) map[x] = Elem(coset[x]);
  RingHom pi = make_hom(R, Q, std::move(map));
  ensure(pi.kernel().elements == I.elements, "quotient kernel differs from ideal");
  return QuotientResult{Q, std::move(pi), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Block decomposition
// ---------------------------------------------------------------------------

struct BlockDecomposition {
  std::vector<Elem> idempotents;     // central primitive, sorted by id
  std::vector<FiniteRing> blocks;    // e_i * R with identity e_i
  std::vector<RingHom> projections;  // r -> e_i r
  std::size_t s = 0;
};

inline bool is_central(const FiniteRing& R, Elem x) {
  for (std::size_t r = 0; r < R.order(); ++r)
    if (R.mul(x, Elem(r)) != R.mul(Elem(r), x)) return false;
  return true;
}

inline std::vector<Elem> central_idempotents(const FiniteRing& R) {
  std::vector<Elem> out;
  for (std::size_t e = 0; e < R.order(); ++e)
    if (R.mul(Elem(e), Elem(e)) == Elem(e) && is_central(R, Elem(e)))
      out.push_back(Elem(e));
  return out;
}

/// Simple: every nonzero element generates the whole ring as a two-sided ideal.
inline bool is_simple(const FiniteRing& R) {
  for (std::size_t x = 1; x < R.order(); ++x)
    if (ideal_generated(R, ElementSet(R.order(), {Elem(x)})).size() != R.order())
      return false;
  return true;
}

/// Splits a semiprime finite ring into simple blocks along its central
/// primitive idempotents. e is primitive iff no central idempotent f outside
/// {0, e} satisfies ef = f.
inline BlockDecomposition block_decomposition(const FiniteRing& Rbar) {
  if (!is_semiprime(Rbar, zero_ideal(Rbar)))
    throw PreconditionError("block_decomposition: ring is not semiprime");
  std::vector<Elem> central = central_idempotents(Rbar);
  BlockDecomposition out;
  for (Elem e : central) {
    if (e == 0) continue;
    bool primitive = std::none_of(central.begin(), central.end(), [&](Elem f) {
      return f != 0 && f != e && Rbar.mul(e, f) == f;
    });
    if (primitive) out.idempotents.push_back(e);
  }
  Elem sum = 0;
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    Elem e = out.idempotents[i];
    sum = Rbar.add(sum, e);
    for (std::size_t j = i + 1; j < out.idempotents.size(); ++j)
      ensure(Rbar.mul(e, out.idempotents[j]) == 0, "block idempotents not orthogonal",
             {e, out.idempotents[j]});
  }
  ensure(sum == Rbar.one(), "block idempotents do not sum to one");

  std::size_t product = 1;
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    Elem e = out.idempotents[i];
    ElementSet carrier = left_multiple(Rbar, e, Rbar.all());
    std::vector<Elem> elems = carrier.elements();
    std::vector<int> index(Rbar.order(), -1);
    for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = int(k);
    RawTables raw;
    raw.one = index[e];
    const std::size_t m = elems.size();
    raw.add.assign(m, std::vector<long long>(m));
    raw.mul.assign(m, std::vector<long long>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        raw.add[a][b] = index[Rbar.add(elems[a], elems[b])];
        raw.mul[a][b] = index[Rbar.mul(elems[a], elems[b])];
      }
    FiniteRing block = FiniteRing::make(raw, "block" + std::to_string(i + 1));
    ensure(is_simple(block), "block is not simple", {e});
    std::vector<Elem> map(Rbar.order());
    for (std::size_t r = 0; r < Rbar.order(); ++r)
      map[r] = Elem(index[Rbar.mul(e, Elem(r))]);
    out.projections.push_back(make_hom(Rbar, block, std::move(map)));
    out.blocks.push_back(std::move(block));
    product *= m;
  }
  ensure(product == Rbar.order(), "block orders do not multiply to the ring order");
  out.s = out.blocks.size();
  return out;
}

/// R -> R/n together with the block decomposition of R/n.
struct SemisimpleQuotient {
  RadicalData radical;
  QuotientResult quotient;  // R -> Rbar
  BlockDecomposition blocks;
};

inline SemisimpleQuotient semisimple_quotient(const FiniteRing& R) {
  RadicalData radical = prime_radical(R);
  QuotientResult q = quotient_ring(R, radical.radical);
  BlockDecomposition blocks = block_decomposition(q.ring);
  return SemisimpleQuotient{std::move(radical), std::move(q), std::move(blocks)};
}

}  // namespace ringloc
