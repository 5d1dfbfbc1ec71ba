#pragma once

/**
 * @file graded.hpp
 * @brief The radical filtration R > n > n^2 > ... > 0, its layers
 *        N_i = n^i / n^(i+1), the associated graded ring gr R, the image C~
 *        of the regular elements in R/n, torsion in finite modules and the
 *        Ore solver that works down the filtration.
 *
 * gr R encoding: an element is a tuple (c_0, ..., c_nu) of coset ids, one per
 * layer, with id c_0 + |N_0| (c_1 + |N_1| (c_2 + ...)). Degree 0 is the least
 * significant digit, so the ids 0..|R/n|-1 are exactly R/n inside gr R.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ringloc/core.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/ore.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

// ---------------------------------------------------------------------------
// Layers
// ---------------------------------------------------------------------------

/// N_i = n^i / n^(i+1) with the actions of R on both sides.
struct LayerModule {
  std::size_t index = 0;
  std::vector<Elem> carrier;        // smallest representative of each coset
  std::vector<int> coset_of;        // R element -> coset id, -1 outside n^i
  std::vector<Elem> add;            // (a, b) -> a + b, indexed a * size + b
  std::vector<Elem> left_action;    // (r, c) -> r c, indexed r * size + c
  std::vector<Elem> right_action;   // (r, c) -> c r, indexed r * size + c
  Elem zero = 0;

  std::size_t size() const { return carrier.size(); }
  Elem plus(Elem a, Elem b) const { return add[a * size() + b]; }
  Elem left(Elem r, Elem c) const { return left_action[r * size() + c]; }
  Elem right(Elem r, Elem c) const { return right_action[r * size() + c]; }
  Elem coset(Elem x) const { return Elem(coset_of[x]); }
};

namespace detail {

/// Layer i for 0 <= i <= nu; layer 0 is R/n with the quotient numbering.
inline LayerModule build_layer(const FiniteRing& R, const RadicalData& rad, std::size_t i) {
  const ElementSet& top = rad.powers[i].elements;
  const ElementSet& below = rad.powers[i + 1].elements;
  std::vector<Elem> below_members = below.elements();
  LayerModule L;
  L.index = i;
  L.coset_of.assign(R.order(), -1);
  top.for_each([&](Elem x) {
    if (L.coset_of[x] >= 0) return;
    int id = int(L.carrier.size());
    L.carrier.push_back(x);
    for (Elem y : below_members) L.coset_of[R.add(x, y)] = id;
  });
  const std::size_t m = L.size();
  ensure(m * below.size() == top.size(), "layer cosets do not partition n^i");
  L.add.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      L.add[a * m + b] = L.coset(R.add(L.carrier[a], L.carrier[b]));
  L.left_action.resize(R.order() * m);
  L.right_action.resize(R.order() * m);
  for (std::size_t r = 0; r < R.order(); ++r)
    for (std::size_t c = 0; c < m; ++c) {
      L.left_action[r * m + c] = L.coset(R.mul(Elem(r), L.carrier[c]));
      L.right_action[r * m + c] = L.coset(R.mul(L.carrier[c], Elem(r)));
    }
  // Well defined on cosets, and killed by n on both sides.
  top.for_each([&](Elem x) {
    for (std::size_t r = 0; r < R.order(); ++r) {
      ensure(L.coset(R.mul(Elem(r), x)) == L.left(Elem(r), L.coset(x)),
             "left action on N_i depends on the representative", {Elem(r), x});
      ensure(L.coset(R.mul(x, Elem(r))) == L.right(Elem(r), L.coset(x)),
             "right action on N_i depends on the representative", {Elem(r), x});
    }
  });
  if (i > 0)
    rad.radical.elements.for_each([&](Elem r) {
      for (std::size_t c = 0; c < m; ++c)
        ensure(L.left(r, Elem(c)) == 0 && L.right(r, Elem(c)) == 0,
               "n does not annihilate N_i", {r, Elem(c)});
    });
  return L;
}

}  // namespace detail

/// N_i for 1 <= i <= nu.
inline LayerModule layer_module(const FiniteRing& R, std::size_t i) {
  RadicalData rad = prime_radical(R);
  if (i < 1 || i > rad.nu)
    throw InputError("layer index " + std::to_string(i) + " outside 1.." +
                     std::to_string(rad.nu));
  return detail::build_layer(R, rad, i);
}

/// The powers of n together with every layer N_0 = R/n, N_1, ..., N_nu.
struct Filtration {
  RadicalData radical;
  std::vector<LayerModule> layers;  // index 0..nu
};

inline Filtration radical_filtration(const FiniteRing& R) {
  Filtration f;
  f.radical = prime_radical(R);
  for (std::size_t i = 0; i <= f.radical.nu; ++i)
    f.layers.push_back(detail::build_layer(R, f.radical, i));
  return f;
}

// ---------------------------------------------------------------------------
// gr R
// ---------------------------------------------------------------------------

struct GradedRing {
  FiniteRing ring;
  std::vector<std::size_t> layer_sizes;  // |N_0|, ..., |N_nu|
  std::vector<std::size_t> weights;      // place value of each layer digit
  std::vector<int> degree;               // -1 for zero and inhomogeneous ids

  /// The homogeneous element of degree i with coset id c.
  Elem homogeneous(std::size_t i, Elem c) const { return Elem(c * weights[i]); }
  Elem component(Elem x, std::size_t i) const {
    return Elem(x / weights[i] % layer_sizes[i]);
  }
  /// R/n sits in gr R as the degree-0 digit, with the same ids.
  Elem embed(Elem rbar) const { return rbar; }
  ElementSet degree_zero() const {
    ElementSet out(ring.order());
    for (std::size_t c = 0; c < layer_sizes[0]; ++c) out.insert(Elem(c));
    return out;
  }
};

/// gr R = R/n + n/n^2 + ... with products of homogeneous pieces taken on
/// representatives and read in the layer of the summed degree.
inline GradedRing gr_ring(const FiniteRing& R, const Limits& limits = {}) {
  Filtration f = radical_filtration(R);
  const std::size_t nu = f.radical.nu;
  std::vector<std::size_t> weights, layer_sizes;
  std::size_t order = 1;
  for (const LayerModule& L : f.layers) {
    weights.push_back(order);
    layer_sizes.push_back(L.size());
    order *= L.size();
    if (order > limits.order_cap)
      throw ResourceError("gr R exceeds the order cap of " + std::to_string(limits.order_cap),
                          order);
  }
  ensure(order == R.order(), "|gr R| differs from |R|");

  // prod[i][j][a * |N_j| + b] = coset in N_(i+j) of rep_i(a) rep_j(b).
  std::vector<std::vector<std::vector<Elem>>> prod(nu + 1, std::vector<std::vector<Elem>>(nu + 1));
  for (std::size_t i = 0; i <= nu; ++i)
    for (std::size_t j = 0; i + j <= nu; ++j) {
      const LayerModule &A = f.layers[i], &B = f.layers[j], &C = f.layers[i + j];
      auto& table = prod[i][j];
      table.resize(A.size() * B.size());
      for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b)
          table[a * B.size() + b] = C.coset(R.mul(A.carrier[a], B.carrier[b]));
      f.radical.powers[i].elements.for_each([&](Elem x) {
        f.radical.powers[j].elements.for_each([&](Elem y) {
          ensure(C.coset(R.mul(x, y)) == table[A.coset(x) * B.size() + B.coset(y)],
                 "layer product depends on the representatives", {x, y});
        });
      });
    }

  auto digits = [&](std::size_t id) {
    std::vector<Elem> d(nu + 1);
    for (std::size_t i = 0; i <= nu; ++i) d[i] = Elem(id / weights[i] % layer_sizes[i]);
    return d;
  };
  auto id_of = [&](const std::vector<Elem>& d) {
    std::size_t id = 0;
    for (std::size_t i = 0; i <= nu; ++i) id += d[i] * weights[i];
    return id;
  };
  std::vector<std::vector<Elem>> dig(order);
  for (std::size_t x = 0; x < order; ++x) dig[x] = digits(x);

  RawTables raw;
  raw.add.assign(order, std::vector<long long>(order));
  raw.mul.assign(order, std::vector<long long>(order));
  std::vector<Elem> out(nu + 1);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t k = 0; k <= nu; ++k) out[k] = f.layers[k].plus(dig[x][k], dig[y][k]);
      raw.add[x][y] = (long long)id_of(out);
      for (std::size_t k = 0; k <= nu; ++k) {
        Elem acc = 0;
        for (std::size_t i = 0; i <= k; ++i)
          acc = f.layers[k].plus(acc, prod[i][k - i][dig[x][i] * layer_sizes[k - i] + dig[y][k - i]]);
        out[k] = acc;
      }
      raw.mul[x][y] = (long long)id_of(out);
    }
  std::vector<Elem> one(nu + 1, 0);
  one[0] = f.layers[0].coset(R.one());
  raw.one = (long long)id_of(one);
  std::string name = "gr " + (R.name().empty() ? std::string("R") : R.name());
  GradedRing G{FiniteRing::make(raw, name, name), layer_sizes, weights, {}};

  G.degree.assign(order, -1);
  for (std::size_t x = 1; x < order; ++x) {
    int deg = -1, nonzero = 0;
    for (std::size_t i = 0; i <= nu; ++i)
      if (dig[x][i] != 0) {
        ++nonzero;
        deg = int(i);
      }
    if (nonzero == 1) G.degree[x] = deg;
  }
  return G;
}

// ---------------------------------------------------------------------------
// C~ and torsion
// ---------------------------------------------------------------------------

/// C~ = pi(C) inside R/n, where C is the set of regular elements of R.
inline MultSet c_tilde(const FiniteRing& R, const QuotientResult& pi) {
  ElementSet image = pi.projection.image(regular_elements(R));
  MultSet S = MultSet::from(pi.ring, image);
  ensure(image.subset_of(regular_elements(pi.ring)), "C~ is not inside the regular elements of R/n");
  return S;
}

inline MultSet c_tilde(const FiniteRing& R) {
  return c_tilde(R, quotient_ring(R, prime_radical(R).radical));
}

/// A finite left module over `ring`, given by tables.
struct FiniteModule {
  FiniteRing ring;
  std::size_t size = 0;
  std::vector<Elem> add;     // (a, b) -> a + b, indexed a * size + b
  std::vector<Elem> action;  // (r, m) -> r m, indexed r * size + m

  Elem plus(Elem a, Elem b) const { return add[a * size + b]; }
  Elem act(Elem r, Elem m) const { return action[r * size + m]; }

  bool is_submodule(const ElementSet& K) const {
    if (!K.contains(0)) return false;
    std::vector<Elem> ks = K.elements();
    for (Elem a : ks) {
      for (Elem b : ks)
        if (!K.contains(plus(a, b))) return false;
      for (std::size_t r = 0; r < ring.order(); ++r)
        if (!K.contains(act(Elem(r), a))) return false;
    }
    return true;
  }
};

/// R acting on itself from the left.
inline FiniteModule regular_module(const FiniteRing& R) {
  FiniteModule M{R, R.order(), {}, {}};
  M.add.resize(R.order() * R.order());
  M.action.resize(R.order() * R.order());
  for (std::size_t a = 0; a < R.order(); ++a)
    for (std::size_t b = 0; b < R.order(); ++b) {
      M.add[a * R.order() + b] = R.add(Elem(a), Elem(b));
      M.action[a * R.order() + b] = R.mul(Elem(a), Elem(b));
    }
  return M;
}

/// M/K for a submodule K; cosets numbered by smallest representative.
inline FiniteModule quotient_module(const FiniteModule& M, const ElementSet& K) {
  if (!M.is_submodule(K)) throw InputError("quotient_module: not a submodule");
  std::vector<int> coset(M.size, -1);
  std::vector<Elem> reps;
  std::vector<Elem> ks = K.elements();
  for (std::size_t x = 0; x < M.size; ++x) {
    if (coset[x] >= 0) continue;
    for (Elem k : ks) coset[M.plus(Elem(x), k)] = int(reps.size());
    reps.push_back(Elem(x));
  }
  const std::size_t m = reps.size();
  FiniteModule Q{M.ring, m, std::vector<Elem>(m * m), std::vector<Elem>(M.ring.order() * m)};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) Q.add[a * m + b] = Elem(coset[M.plus(reps[a], reps[b])]);
  for (std::size_t r = 0; r < M.ring.order(); ++r)
    for (std::size_t a = 0; a < m; ++a) Q.action[r * m + a] = Elem(coset[M.act(Elem(r), reps[a])]);
  return Q;
}

/// R/I for a left ideal I.
inline FiniteModule quotient_module(const FiniteRing& R, const Ideal& I) {
  if (!is_ideal(R, I.elements, Side::left)) throw InputError("quotient_module: not a left ideal");
  return quotient_module(regular_module(R), I.elements);
}

/// N_i as a left module over R/n, acting through representatives.
inline FiniteModule layer_as_module(const LayerModule& L, const QuotientResult& pi) {
  const std::size_t m = L.size();
  FiniteModule M{pi.ring, m, L.add, std::vector<Elem>(pi.ring.order() * m)};
  for (std::size_t rb = 0; rb < pi.ring.order(); ++rb)
    for (std::size_t c = 0; c < m; ++c)
      M.action[rb * m + c] = L.left(pi.representatives[rb], Elem(c));
  return M;
}

/// N_i / N_i cbar as a left module over R/n.
inline FiniteModule layer_quotient(const LayerModule& L, const QuotientResult& pi, Elem cbar) {
  ElementSet image(L.size());
  for (std::size_t c = 0; c < L.size(); ++c)
    image.insert(L.right(pi.representatives[cbar], Elem(c)));
  return quotient_module(layer_as_module(L, pi), image);
}

/// {m : s m = 0 for some s in S}. A submodule whenever S is left Ore.
inline ElementSet tor_submodule(const MultSet& S, const FiniteModule& M) {
  ElementSet out(M.size);
  for (std::size_t m = 0; m < M.size; ++m)
    S.elements().for_each([&](Elem s) {
      if (M.act(s, Elem(m)) == 0) out.insert(Elem(m));
    });
  if (is_left_ore(M.ring, S)) ensure(M.is_submodule(out), "tor_S(M) is not a submodule");
  return out;
}

/// The inclusion-maximal kernels of m -> s m (s in S) reduce to tor_S(M).
inline ValidationReport max_ker_check(const MultSet& S, const FiniteModule& M) {
  ValidationReport report;
  std::vector<ElementSet> kernels;
  S.elements().for_each([&](Elem s) {
    ElementSet k(M.size);
    for (std::size_t m = 0; m < M.size; ++m)
      if (M.act(s, Elem(m)) == 0) k.insert(Elem(m));
    kernels.push_back(k);
  });
  std::vector<ElementSet> maximal;
  for (const ElementSet& k : kernels) {
    bool dominated = std::any_of(kernels.begin(), kernels.end(), [&](const ElementSet& o) {
      return o != k && k.subset_of(o);
    });
    if (!dominated && std::find(maximal.begin(), maximal.end(), k) == maximal.end())
      maximal.push_back(k);
  }
  if (maximal.size() != 1) {
    report.fail("max ker(S, M) is a single kernel", {Elem(maximal.size())});
    return report;
  }
  ElementSet tor = tor_submodule(S, M);
  if (maximal.front() != tor) {
    std::vector<Elem> diff = (tor - maximal.front()).elements();
    report.fail("max ker(S, M) = tor_S(M)", diff);
  }
  return report;
}

/// Labels used by condition_f_check.
inline constexpr const char* kConditionFOverCbar = "f over Cbar";
inline constexpr const char* kConditionFOverCtilde = "f over Ctilde";

/// N_i / N_i cbar is C~-torsion for i = 1..nu, evaluated separately for
/// cbar ranging over the regular elements of R/n and over C~.
/// Witness on failure: (i, cbar, coset).
inline ConditionReport condition_f_check(const FiniteRing& R) {
  RadicalData rad = prime_radical(R);
  QuotientResult pi = quotient_ring(R, rad.radical);
  MultSet ct = c_tilde(R, pi);
  ElementSet cbar_set = regular_elements(pi.ring);
  ConditionReport report;
  auto evaluate = [&](const ElementSet& quantifier) -> std::vector<Elem> {
    for (std::size_t i = 1; i <= rad.nu; ++i) {
      LayerModule L = detail::build_layer(R, rad, i);
      for (Elem cbar : quantifier.elements()) {
        FiniteModule Q = layer_quotient(L, pi, cbar);
        ElementSet tor = tor_submodule(ct, Q);
        for (std::size_t m = 0; m < Q.size; ++m)
          if (!tor.contains(Elem(m))) return {Elem(i), cbar, Elem(m)};
      }
    }
    return {};
  };
  std::string note = rad.nu == 0 ? "nu = 0, no layers" : "";
  std::vector<Elem> w = evaluate(cbar_set);
  report.add(kConditionFOverCbar, w.empty(), w, note);
  w = evaluate(ct.elements());
  report.add(kConditionFOverCtilde, w.empty(), w, note);
  return report;
}

// ---------------------------------------------------------------------------
// Ore solver
// ---------------------------------------------------------------------------

struct OreSolution {
  Elem c_prime = 0;  // regular
  Elem r_prime = 0;  // c' r = r' c
  std::size_t depth = 0;
};

/// Finds c' in C and r' with c' r = r' c by downward induction on deg(r):
///  - deg(r) = nu: s r = x c in n^nu from the torsion of N_nu / N_nu cbar;
///  - deg(r) = 0: an Ore step in R/n, lifted, leaves a = c1 r - r1 c in n;
///  - 0 < deg(r) < nu: s r = x c + y with y in n^(i+1).
/// The correction term has strictly larger degree, so the recursion ends.
class OreSolver {
 public:
  explicit OreSolver(const FiniteRing& R)
      : R_(R), rad_(prime_radical(R)), pi_(quotient_ring(R, rad_.radical)),
        regular_(regular_elements(R)), lookups_(R.order()), bar_lookups_(pi_.ring.order()) {
    regular_list_ = regular_.elements();
    ct_list_ = c_tilde(R, pi_).elements().elements();
    lift_.assign(pi_.ring.order(), -1);
    for (Elem c : regular_list_)
      if (lift_[pi_.projection(c)] < 0) lift_[pi_.projection(c)] = c;
  }

  const RadicalData& radical() const { return rad_; }

  OreSolution solve(Elem c, Elem r) {
    if (c >= R_.order() || r >= R_.order()) throw InputError("ore_solve: element out of range");
    if (!regular_.contains(c))
      throw PreconditionError("ore_solve: c is not a regular element", {c});
    OreSolution out = step(c, r, 0);
    ensure(R_.mul(out.c_prime, r) == R_.mul(out.r_prime, c), "ore_solve: c'r != r'c", {c, r});
    ensure(regular_.contains(out.c_prime), "ore_solve: c' is not regular", {c, r});
    return out;
  }

 private:
  /// lookup[e] = smallest x in n^i with e - x c in n^(i+1), or -1.
  const std::vector<int>& level(Elem c, std::size_t i) {
    auto& per_c = lookups_[c];
    if (per_c.empty()) per_c.resize(rad_.nu + 1);
    auto& table = per_c[i];
    if (table.empty()) {
      table.assign(R_.order(), -1);
      std::vector<Elem> below = rad_.powers[i + 1].elements.elements();
      rad_.powers[i].elements.for_each([&](Elem x) {
        Elem v = R_.mul(x, c);
        for (Elem y : below) {
          Elem e = R_.add(v, y);
          if (table[e] < 0) table[e] = x;
        }
      });
    }
    return table;
  }

  /// lookup[e] = smallest rbar1 with rbar1 cbar = e, or -1.
  const std::vector<int>& bar_level(Elem cbar) {
    auto& table = bar_lookups_[cbar];
    if (table.empty()) {
      table.assign(pi_.ring.order(), -1);
      for (std::size_t x = 0; x < pi_.ring.order(); ++x) {
        Elem e = pi_.ring.mul(Elem(x), cbar);
        if (table[e] < 0) table[e] = int(x);
      }
    }
    return table;
  }

  /// s in C, x in n^i with s r - x c in n^(i+1).
  std::pair<Elem, Elem> torsion_step(Elem c, Elem r, std::size_t i) {
    const std::vector<int>& table = level(c, i);
    for (Elem s : regular_list_) {
      int x = table[R_.mul(s, r)];
      if (x >= 0) return {s, Elem(x)};
    }
    throw InvariantError("no torsion step in layer " + std::to_string(i), {c, r});
  }

  OreSolution step(Elem c, Elem r, std::size_t depth) {
    ensure(depth <= rad_.nu + 1, "ore_solve: recursion deeper than nu + 1", {c, r});
    if (r == 0) return {R_.one(), 0, depth};
    const std::size_t i = rad_.degree(r);

    if (i == rad_.nu) {
      auto [s, x] = torsion_step(c, r, i);
      ensure(R_.mul(s, r) == R_.mul(x, c), "base case leaves a remainder", {c, r});
      return {s, x, depth};
    }

    Elem first = 0, second = 0, correction = 0;
    if (i == 0) {
      Elem rbar = pi_.projection(r), cbar = pi_.projection(c);
      const std::vector<int>& table = bar_level(cbar);
      bool found = false;
      for (Elem c1bar : ct_list_) {
        int r1bar = table[pi_.ring.mul(c1bar, rbar)];
        if (r1bar < 0) continue;
        first = Elem(lift_[c1bar]);
        second = pi_.representatives[r1bar];
        found = true;
        break;
      }
      ensure(found, "C~ is not left Ore in R/n", {c, r});
    } else {
      std::tie(first, second) = torsion_step(c, r, i);
    }
    correction = R_.sub(R_.mul(first, r), R_.mul(second, c));
    ensure(correction == 0 || rad_.degree(correction) > i,
           "correction term does not rise in degree", {c, r});

    OreSolution rest = step(c, correction, depth + 1);
    // rest.c (first r - second c) = rest.r c, so
    // (rest.c first) r = (rest.c second + rest.r) c.
    return {R_.mul(rest.c_prime, first),
            R_.add(R_.mul(rest.c_prime, second), rest.r_prime), rest.depth};
  }

  FiniteRing R_;
  RadicalData rad_;
  QuotientResult pi_;
  ElementSet regular_;
  std::vector<Elem> regular_list_;
  std::vector<Elem> ct_list_;
  std::vector<int> lift_;
  std::vector<std::vector<std::vector<int>>> lookups_;
  std::vector<std::vector<int>> bar_lookups_;
};

inline OreSolution ore_solve(const FiniteRing& R, Elem c, Elem r) {
  return OreSolver(R).solve(c, r);
}

}  // namespace ringloc
