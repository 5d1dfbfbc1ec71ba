#pragma once

/**
 * @file ring.hpp
 * @brief Finite rings given by explicit addition and multiplication tables.
 *
 * A FiniteRing is an immutable handle; copies share the tables. Rings are only
 * created through FiniteRing::make, which runs the full axiom scan, so every
 * FiniteRing in circulation is a ring with 1 != 0.
 */

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringloc/core.hpp"

namespace ringloc {

/// Unvalidated tables as read from a file or produced by a constructor.
/// Entries are wide integers so that out-of-range values can be reported.
struct RawTables {
  long long one = 1;
  std::vector<std::vector<long long>> add;
  std::vector<std::vector<long long>> mul;
};

class FiniteRing;
ValidationReport validate_ring(const RawTables& raw);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error(describe(report)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& report) {
    std::string out = "ring axioms violated:";
    for (const auto& v : report.violations) {
      out += " " + v.axiom + "(";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        out += (i ? "," : "") + std::to_string(v.witness[i]);
      out += ")";
    }
    return out;
  }
  ValidationReport report_;
};

class FiniteRing {
 public:
  /// Validates and freezes the tables. Throws InputError for malformed tables
  /// and ValidationError for axiom violations.
  static FiniteRing make(const RawTables& raw, std::string name = {},
                         std::string source = {}) {
    ValidationReport report = validate_ring(raw);
    if (!report.ok) throw ValidationError(std::move(report));
    return from_trusted(raw, std::move(name), std::move(source));
  }

  std::size_t order() const { return data_->order; }
  Elem zero() const { return 0; }
  Elem one() const { return data_->one; }
  const std::string& name() const { return data_->name; }
  const std::string& source() const { return data_->source; }

  Elem add(Elem a, Elem b) const { return data_->add[a * data_->order + b]; }
  Elem mul(Elem a, Elem b) const { return data_->mul[a * data_->order + b]; }
  Elem neg(Elem a) const { return data_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  ElementSet all() const { return ElementSet::full(order()); }
  ElementSet empty_set() const { return ElementSet(order()); }

  FiniteRing renamed(std::string name, std::string source) const {
    FiniteRing copy = *this;
    auto data = std::make_shared<Data>(*data_);
    data->name = std::move(name);
    data->source = std::move(source);
    copy.data_ = std::move(data);
    return copy;
  }

  RawTables raw() const {
    RawTables raw;
    raw.one = one();
    std::size_t n = order();
    raw.add.assign(n, std::vector<long long>(n));
    raw.mul.assign(n, std::vector<long long>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        raw.add[a][b] = add(Elem(a), Elem(b));
        raw.mul[a][b] = mul(Elem(a), Elem(b));
      }
    return raw;
  }

  /// Identical tables (names and sources are ignored).
  friend bool same_tables(const FiniteRing& a, const FiniteRing& b) {
    return a.data_->order == b.data_->order && a.data_->one == b.data_->one &&
           a.data_->add == b.data_->add && a.data_->mul == b.data_->mul;
  }

 private:
  struct Data {
    std::size_t order = 0;
    Elem one = 0;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::string name;
    std::string source;
  };

  static FiniteRing from_trusted(const RawTables& raw, std::string name,
                                 std::string source) {
    auto data = std::make_shared<Data>();
    std::size_t n = raw.add.size();
    data->order = n;
    data->one = static_cast<Elem>(raw.one);
    data->add.resize(n * n);
    data->mul.resize(n * n);
    data->neg.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        data->add[a * n + b] = static_cast<Elem>(raw.add[a][b]);
        data->mul[a * n + b] = static_cast<Elem>(raw.mul[a][b]);
        if (raw.add[a][b] == 0) data->neg[a] = static_cast<Elem>(b);
      }
    data->name = std::move(name);
    data->source = std::move(source);
    FiniteRing ring;
    ring.data_ = std::move(data);
    return ring;
  }

  FiniteRing() = default;
  std::shared_ptr<const Data> data_;
};

// ---------------------------------------------------------------------------
// Axiom scan
// ---------------------------------------------------------------------------

/// Checks every ring axiom exhaustively. Malformed tables (non-square, ragged,
/// out-of-range entries, order < 2, one out of range, one == zero) raise
/// InputError; axiom failures are reported with the lexicographically first
/// witness per axiom.
inline ValidationReport validate_ring(const RawTables& raw) {
  const std::size_t n = raw.add.size();
  if (n < 2) throw InputError("ring order must be at least 2 (zero ring excluded)");
  if (n > kMaxOrder)
    throw InputError("ring order " + std::to_string(n) + " exceeds 256");
  if (raw.mul.size() != n)
    throw InputError("addition and multiplication tables differ in size");
  for (std::size_t a = 0; a < n; ++a) {
    if (raw.add[a].size() != n || raw.mul[a].size() != n)
      throw InputError("table row " + std::to_string(a) + " is not of length " +
                       std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (raw.add[a][b] < 0 || raw.add[a][b] >= static_cast<long long>(n))
        throw InputError("addition entry (" + std::to_string(a) + "," +
                         std::to_string(b) + ") out of range");
      if (raw.mul[a][b] < 0 || raw.mul[a][b] >= static_cast<long long>(n))
        throw InputError("multiplication entry (" + std::to_string(a) + "," +
                         std::to_string(b) + ") out of range");
    }
  }
  if (raw.one < 0 || raw.one >= static_cast<long long>(n))
    throw InputError("identity id out of range");
  if (raw.one == 0) throw InputError("one equals zero (zero ring excluded)");

  ValidationReport report;
  auto A = [&](std::size_t a, std::size_t b) { return std::size_t(raw.add[a][b]); };
  auto M = [&](std::size_t a, std::size_t b) { return std::size_t(raw.mul[a][b]); };
  auto E = [](auto... xs) { return std::vector<Elem>{static_cast<Elem>(xs)...}; };
  const std::size_t one = std::size_t(raw.one);

  auto first_pair = [&](const char* axiom, auto&& bad) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (bad(a, b)) {
          report.fail(axiom, E(a, b));
          return;
        }
  };
  auto first_triple = [&](const char* axiom, auto&& bad) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (bad(a, b, c)) {
            report.fail(axiom, E(a, b, c));
            return;
          }
  };

  for (std::size_t a = 0; a < n; ++a)
    if (A(a, 0) != a || A(0, a) != a) {
      report.fail("add_identity", E(a));
      break;
    }
  first_pair("add_commutative", [&](auto a, auto b) { return A(a, b) != A(b, a); });
  first_triple("add_associative",
               [&](auto a, auto b, auto c) { return A(A(a, b), c) != A(a, A(b, c)); });
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = A(a, b) == 0;
    if (!found) {
      report.fail("add_inverse", E(a));
      break;
    }
  }
  first_triple("mul_associative",
               [&](auto a, auto b, auto c) { return M(M(a, b), c) != M(a, M(b, c)); });
  first_triple("left_distributive", [&](auto a, auto b, auto c) {
    return M(a, A(b, c)) != A(M(a, b), M(a, c));
  });
  first_triple("right_distributive", [&](auto a, auto b, auto c) {
    return M(A(a, b), c) != A(M(a, c), M(b, c));
  });
  for (std::size_t a = 0; a < n; ++a)
    if (M(one, a) != a || M(a, one) != a) {
      report.fail("mul_identity", E(a));
      break;
    }
  for (std::size_t a = 0; a < n; ++a)
    if (M(0, a) != 0 || M(a, 0) != 0) {
      report.fail("zero_absorbing", E(a));
      break;
    }
  return report;
}

// ---------------------------------------------------------------------------
// Element-level queries
// ---------------------------------------------------------------------------

inline bool is_commutative(const FiniteRing& R) {
  for (std::size_t a = 0; a < R.order(); ++a)
    for (std::size_t b = a + 1; b < R.order(); ++b)
      if (R.mul(Elem(a), Elem(b)) != R.mul(Elem(b), Elem(a))) return false;
  return true;
}

/// Additive order of one.
inline std::size_t characteristic(const FiniteRing& R) {
  std::size_t k = 1;
  for (Elem x = R.one(); x != 0; x = R.add(x, R.one())) ++k;
  return k;
}

/// {u : uv = vu = 1 for some v}.
inline ElementSet units(const FiniteRing& R) {
  ElementSet out(R.order());
  for (std::size_t u = 0; u < R.order(); ++u)
    for (std::size_t v = 0; v < R.order(); ++v)
      if (R.mul(Elem(u), Elem(v)) == R.one() && R.mul(Elem(v), Elem(u)) == R.one()) {
        out.insert(Elem(u));
        break;
      }
  return out;
}

/// Non-zero-divisors: left and right multiplication by c are injective. On a
/// finite ring injective means bijective, so this set is always units(R).
inline ElementSet regular_elements(const FiniteRing& R) {
  ElementSet out(R.order());
  for (std::size_t c = 0; c < R.order(); ++c) {
    bool regular = true;
    for (std::size_t r = 1; r < R.order() && regular; ++r)
      regular = R.mul(Elem(c), Elem(r)) != 0 && R.mul(Elem(r), Elem(c)) != 0;
    if (regular) out.insert(Elem(c));
  }
  return out;
}

inline std::optional<Elem> inverse(const FiniteRing& R, Elem u) {
  for (std::size_t v = 0; v < R.order(); ++v)
    if (R.mul(u, Elem(v)) == R.one() && R.mul(Elem(v), u) == R.one())
      return Elem(v);
  return std::nullopt;
}

/// Opposite ring: same elements, multiplication reversed.
inline FiniteRing opposite(const FiniteRing& R) {
  RawTables raw = R.raw();
  for (std::size_t a = 0; a < R.order(); ++a)
    for (std::size_t b = 0; b < R.order(); ++b)
      raw.mul[a][b] = R.mul(Elem(b), Elem(a));
  std::string src = R.source().empty() ? std::string{} : "Op(" + R.source() + ")";
  return FiniteRing::make(raw, R.name().empty() ? "" : R.name() + "^op", src);
}

/// Image of a set under left multiplication by x, i.e. {x*s : s in S}.
inline ElementSet left_multiple(const FiniteRing& R, Elem x, const ElementSet& S) {
  ElementSet out(R.order());
  S.for_each([&](Elem s) { out.insert(R.mul(x, s)); });
  return out;
}

/// {s*x : s in S}.
inline ElementSet right_multiple(const FiniteRing& R, const ElementSet& S, Elem x) {
  ElementSet out(R.order());
  S.for_each([&](Elem s) { out.insert(R.mul(s, x)); });
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

/// A map between finite rings preserving +, * and 1.
struct RingHom {
  FiniteRing domain;
  FiniteRing codomain;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }

  Ideal kernel() const {
    Ideal k{ElementSet(domain.order()), Side::two_sided};
    for (std::size_t a = 0; a < map.size(); ++a)
      if (map[a] == 0) k.elements.insert(Elem(a));
    return k;
  }

  ElementSet image(const ElementSet& S) const {
    ElementSet out(codomain.order());
    S.for_each([&](Elem a) { out.insert(map[a]); });
    return out;
  }

  ElementSet preimage(const ElementSet& T) const {
    ElementSet out(domain.order());
    for (std::size_t a = 0; a < map.size(); ++a)
      if (T.contains(map[a])) out.insert(Elem(a));
    return out;
  }

  bool surjective() const {
    return image(domain.all()).size() == codomain.order();
  }
};

/// Exhaustively checks that `map` is a unital ring homomorphism A -> B.
/// Throws InputError when the map is not total on A or leaves B.
inline ValidationReport hom_check(const std::vector<Elem>& map,
                                  const FiniteRing& A, const FiniteRing& B) {
  if (map.size() != A.order())
    throw InputError("map has " + std::to_string(map.size()) +
                     " entries, domain has order " + std::to_string(A.order()));
  for (Elem v : map)
    if (v >= B.order()) throw InputError("map value outside codomain");
  ValidationReport report;
  if (map[A.one()] != B.one()) report.fail("map(one)=one", {A.one()});
  auto first = [&](const char* axiom, auto&& bad) {
    for (std::size_t a = 0; a < A.order(); ++a)
      for (std::size_t b = 0; b < A.order(); ++b)
        if (bad(Elem(a), Elem(b))) {
          report.fail(axiom, {Elem(a), Elem(b)});
          return;
        }
  };
  first("map(a+b)=map(a)+map(b)",
        [&](Elem a, Elem b) { return map[A.add(a, b)] != B.add(map[a], map[b]); });
  first("map(ab)=map(a)map(b)",
        [&](Elem a, Elem b) { return map[A.mul(a, b)] != B.mul(map[a], map[b]); });
  return report;
}

inline RingHom make_hom(const FiniteRing& A, const FiniteRing& B,
                        std::vector<Elem> map) {
  ValidationReport report = hom_check(map, A, B);
  if (!report.ok)
    throw InvariantError("not a ring homomorphism: " + report.violations.front().axiom,
                         report.violations.front().witness);
  return RingHom{A, B, std::move(map)};
}

inline RingHom compose(const RingHom& g, const RingHom& f) {
  std::vector<Elem> map(f.domain.order());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = g.map[f.map[a]];
  return RingHom{f.domain, g.codomain, std::move(map)};
}

inline RingHom identity_hom(const FiniteRing& R) {
  std::vector<Elem> map(R.order());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = Elem(a);
  return RingHom{R, R, std::move(map)};
}

}  // namespace ringloc
