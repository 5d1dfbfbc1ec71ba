#pragma once

/**
 * @file core.hpp
 * @brief Element ids, element sets, error types and resource limits.
 *
 * Every finite ring in this library is a set of element ids 0..order-1 with
 * explicit tables. Id 0 is always the additive identity. Sets of elements are
 * fixed-width bitsets, so a ring can have at most kMaxOrder elements.
 */

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringloc {

using Elem = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 256;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Malformed input: bad tables, bad expressions, out-of-range ids.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based line/column.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured cap was exceeded. partial_count is how far enumeration got.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// An operation was called outside its domain (e.g. localizing at a set that
/// is not a left denominator set). Carries the certificate of failure.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::vector<Elem> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  std::vector<Elem> witness_;
};

/// An asserted postcondition failed. On a correct implementation this never
/// fires; census runs turn it into a counterexample.
class InvariantError : public std::logic_error {
 public:
  InvariantError(const std::string& what, std::vector<Elem> witness = {})
      : std::logic_error(what), witness_(std::move(witness)) {}
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  std::vector<Elem> witness_;
};

inline void ensure(bool condition, const std::string& what,
                   std::vector<Elem> witness = {}) {
  if (!condition) throw InvariantError(what, std::move(witness));
}

// ---------------------------------------------------------------------------
// Limits
// ---------------------------------------------------------------------------

struct Limits {
  std::size_t order_cap = kMaxOrder;  // largest ring that may be built
  std::size_t brute_cap = 16;         // max_den_bruteforce
  std::size_t raw_cap = 16;           // raw submonoid enumeration
  std::size_t ideal_cap = 20000;      // distinct two-sided ideals

  /// Defaults overridden by RINGLOC_ORDER_CAP, RINGLOC_BRUTE_CAP,
  /// RINGLOC_RAW_CAP and RINGLOC_IDEAL_CAP when set.
  static Limits from_env() {
    Limits limits;
    auto read = [](const char* name, std::size_t& slot) {
      if (const char* value = std::getenv(name)) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(value, &end, 10);
        if (end != value && *end == '\0' && parsed > 0) slot = parsed;
      }
    };
    read("RINGLOC_ORDER_CAP", limits.order_cap);
    read("RINGLOC_BRUTE_CAP", limits.brute_cap);
    read("RINGLOC_RAW_CAP", limits.raw_cap);
    read("RINGLOC_IDEAL_CAP", limits.ideal_cap);
    if (limits.order_cap > kMaxOrder) limits.order_cap = kMaxOrder;
    return limits;
  }
};

// ---------------------------------------------------------------------------
// ElementSet
// ---------------------------------------------------------------------------

/// A subset of {0, ..., order-1}.
class ElementSet {
 public:
  using Bits = std::bitset<kMaxOrder>;

  ElementSet() = default;
  explicit ElementSet(std::size_t order) : order_(order) {
    if (order > kMaxOrder) throw InputError("element set order exceeds 256");
  }
  ElementSet(std::size_t order, std::initializer_list<Elem> elems)
      : ElementSet(order) {
    for (Elem e : elems) insert(e);
  }
  ElementSet(std::size_t order, const std::vector<Elem>& elems)
      : ElementSet(order) {
    for (Elem e : elems) insert(e);
  }

  static ElementSet full(std::size_t order) {
    ElementSet s(order);
    for (std::size_t i = 0; i < order; ++i) s.bits_.set(i);
    return s;
  }

  std::size_t order() const { return order_; }
  const Bits& bits() const { return bits_; }

  bool contains(Elem e) const { return e < order_ && bits_.test(e); }
  void insert(Elem e) {
    if (e >= order_) throw InputError("element id " + std::to_string(e) +
                                      " out of range for order " +
                                      std::to_string(order_));
    bits_.set(e);
  }
  void erase(Elem e) {
    if (e < order_) bits_.reset(e);
  }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::size_t i = 0; i < order_; ++i)
      if (bits_.test(i)) out.push_back(static_cast<Elem>(i));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < order_; ++i)
      if (bits_.test(i)) f(static_cast<Elem>(i));
  }

  bool subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_).none();
  }
  bool intersects(const ElementSet& other) const {
    return (bits_ & other.bits_).any();
  }

  ElementSet complement() const {
    ElementSet out(order_);
    out.bits_ = ~bits_ & full(order_).bits_;
    return out;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    a.bits_ &= b.bits_;
    return a;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    a.bits_ &= ~b.bits_;
    return a;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

  /// Report order: by size, then lexicographically by sorted element list.
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    Bits diff = a.bits_ ^ b.bits_;
    if (diff.none()) return std::strong_ordering::equal;
    std::size_t first = 0;
    while (!diff.test(first)) ++first;
    return a.bits_.test(first) ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }

 private:
  std::size_t order_ = 0;
  Bits bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    return std::hash<ElementSet::Bits>{}(s.bits()) ^ (s.order() * 0x9e3779b9u);
  }
};

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

enum class Side { left, right, two_sided, unverified };

inline const char* to_string(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
    case Side::unverified: return "unverified";
  }
  return "?";
}

/// An additive subgroup closed under the multiplications its side requires.
/// Side::unverified marks a raw set that has not been certified an ideal.
struct Ideal {
  ElementSet elements;
  Side side = Side::two_sided;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem e) const { return elements.contains(e); }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Result of a decision procedure, with the lexicographically first
/// counterexample tuple when it fails.
struct Witnessed {
  bool holds = true;
  std::vector<Elem> witness;

  explicit operator bool() const { return holds; }
  static Witnessed yes() { return {}; }
  static Witnessed no(std::vector<Elem> w) { return {false, std::move(w)}; }
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void fail(std::string axiom, std::vector<Elem> witness) {
    ok = false;
    violations.push_back({std::move(axiom), std::move(witness)});
  }
};

/// One labelled condition of a theorem checker. `note` carries the rationale
/// for conditions that are constant on finite rings.
struct Condition {
  std::string label;
  bool holds = true;
  std::vector<Elem> witness;
  std::string note;
};

struct ConditionReport {
  std::vector<Condition> conditions;
  bool overall = true;
  std::string skipped;  // non-empty when the checker's hypotheses do not apply

  void add(std::string label, bool holds, std::vector<Elem> witness = {},
           std::string note = {}) {
    overall = overall && holds;
    conditions.push_back(
        {std::move(label), holds, std::move(witness), std::move(note)});
  }

  const Condition* find(const std::string& label) const {
    for (const auto& c : conditions)
      if (c.label == label) return &c;
    return nullptr;
  }
};

}  // namespace ringloc
