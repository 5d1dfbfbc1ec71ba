#pragma once

/**
 * @file construct.hpp
 * @brief Builds FiniteRing tables from constructor expressions.
 *
 * Element encodings (part of the external format):
 *  - Zn(n): the residue r has id r.
 *  - Mat(k, B): a matrix is the base-|B| number whose digits are the entry
 *    ids in row-major order, first entry most significant.
 *  - Tri(k, B): as Mat, using only the entries on or above the diagonal.
 *  - Prod(A, B): (a, b) has id a * |B| + b.
 *  - Quot(R, gens): cosets of the two-sided ideal generated by gens, numbered
 *    by their smallest representative.
 *  - Op(R): same ids as R.
 */

#include <string>
#include <utility>
#include <vector>

#include "ringloc/expr.hpp"
#include "ringloc/ideal.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

/// Matrix positions used by Mat (all) or Tri (i <= j), row-major.
inline std::vector<std::pair<std::size_t, std::size_t>> matrix_positions(
    std::size_t k, bool triangular) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = triangular ? i : 0; j < k; ++j) out.emplace_back(i, j);
  return out;
}

/// Entry ids (row-major over `positions`) of the matrix with the given id.
inline std::vector<Elem> matrix_digits(std::size_t base, std::size_t digits,
                                       std::size_t id) {
  std::vector<Elem> out(digits);
  for (std::size_t d = digits; d-- > 0;) {
    out[d] = Elem(id % base);
    id /= base;
  }
  return out;
}

inline std::size_t matrix_id(std::size_t base, const std::vector<Elem>& digits) {
  std::size_t id = 0;
  for (Elem d : digits) id = id * base + d;
  return id;
}

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exp,
                                 std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > cap)
      throw ResourceError("ring order exceeds cap of " + std::to_string(cap), out);
  }
  return out;
}

inline FiniteRing build_zn(long long n) {
  RawTables raw;
  raw.one = 1;
  std::size_t m = std::size_t(n);
  raw.add.assign(m, std::vector<long long>(m));
  raw.mul.assign(m, std::vector<long long>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      raw.add[a][b] = (a + b) % m;
      raw.mul[a][b] = (a * b) % m;
    }
  return FiniteRing::make(raw, "Z" + std::to_string(n));
}

inline FiniteRing build_matrix(const FiniteRing& B, std::size_t k, bool triangular,
                               const Limits& limits) {
  auto positions = matrix_positions(k, triangular);
  const std::size_t q = B.order();
  const std::size_t order = checked_power(q, positions.size(), limits.order_cap);
  std::vector<std::vector<int>> slot(k, std::vector<int>(k, -1));
  for (std::size_t p = 0; p < positions.size(); ++p)
    slot[positions[p].first][positions[p].second] = int(p);

  std::vector<std::vector<Elem>> digits(order);
  for (std::size_t id = 0; id < order; ++id)
    digits[id] = matrix_digits(q, positions.size(), id);
  auto entry = [&](const std::vector<Elem>& m, std::size_t i, std::size_t j) -> Elem {
    int s = slot[i][j];
    return s < 0 ? Elem(0) : m[std::size_t(s)];
  };

  RawTables raw;
  raw.add.assign(order, std::vector<long long>(order));
  raw.mul.assign(order, std::vector<long long>(order));
  std::vector<Elem> out(positions.size());
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t p = 0; p < positions.size(); ++p)
        out[p] = B.add(digits[a][p], digits[b][p]);
      raw.add[a][b] = (long long)matrix_id(q, out);
      for (std::size_t p = 0; p < positions.size(); ++p) {
        auto [i, j] = positions[p];
        Elem acc = 0;
        for (std::size_t t = 0; t < k; ++t)
          acc = B.add(acc, B.mul(entry(digits[a], i, t), entry(digits[b], t, j)));
        out[p] = acc;
      }
      raw.mul[a][b] = (long long)matrix_id(q, out);
    }
  for (std::size_t p = 0; p < positions.size(); ++p)
    out[p] = positions[p].first == positions[p].second ? B.one() : Elem(0);
  raw.one = (long long)matrix_id(q, out);
  return FiniteRing::make(raw);
}

inline FiniteRing build_product(const FiniteRing& A, const FiniteRing& B,
                                const Limits& limits) {
  const std::size_t nb = B.order();
  const std::size_t order = A.order() * nb;
  if (order > limits.order_cap)
    throw ResourceError("ring order exceeds cap of " + std::to_string(limits.order_cap),
                        order);
  RawTables raw;
  raw.one = (long long)(A.one() * nb + B.one());
  raw.add.assign(order, std::vector<long long>(order));
  raw.mul.assign(order, std::vector<long long>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      Elem xa = Elem(x / nb), xb = Elem(x % nb), ya = Elem(y / nb), yb = Elem(y % nb);
      raw.add[x][y] = (long long)(A.add(xa, ya) * nb + B.add(xb, yb));
      raw.mul[x][y] = (long long)(A.mul(xa, ya) * nb + B.mul(xb, yb));
    }
  return FiniteRing::make(raw);
}

inline FiniteRing build(const Expr& e, const Limits& limits) {
  switch (e.kind) {
    case Expr::Kind::zn:
      if (std::size_t(e.n) > limits.order_cap)
        throw ResourceError("ring order exceeds cap of " +
                                std::to_string(limits.order_cap),
                            std::size_t(e.n));
      return build_zn(e.n);
    case Expr::Kind::mat:
    case Expr::Kind::tri:
      return build_matrix(build(e.children[0], limits), std::size_t(e.n),
                          e.kind == Expr::Kind::tri, limits);
    case Expr::Kind::prod:
      return build_product(build(e.children[0], limits), build(e.children[1], limits),
                           limits);
    case Expr::Kind::op:
      return opposite(build(e.children[0], limits));
    case Expr::Kind::quot: {
      FiniteRing R = build(e.children[0], limits);
      ElementSet gens(R.order());
      for (long long g : e.gens) {
        if (g < 0 || std::size_t(g) >= R.order())
          throw InputError("Quot generator " + std::to_string(g) +
                           " is not an element of a ring of order " +
                           std::to_string(R.order()));
        gens.insert(Elem(g));
      }
      Ideal I = ideal_generated(R, gens);
      if (I.size() == R.order())
        throw InputError("Quot generators span the whole ring (zero ring excluded)");
      return quotient_ring(R, I).ring;
    }
  }
  throw InputError("unknown constructor");
}

}  // namespace detail

/// Builds and validates the ring described by `e`. Throws ResourceError when
/// an intermediate or final order exceeds limits.order_cap.
inline FiniteRing construct(const Expr& e, const Limits& limits = {}) {
  std::string text = e.text();
  return detail::build(e, limits).renamed(text, text);
}

inline FiniteRing construct(std::string_view text, const Limits& limits = {}) {
  return construct(parse_expr(text), limits);
}

}  // namespace ringloc
