#pragma once

/**
 * @file expr.hpp
 * @brief Constructor expressions for finite rings.
 *
 *   expr := "Zn(" int ")"
 *         | "Mat(" int "," expr ")"     k x k matrices
 *         | "Tri(" int "," expr ")"     k x k upper triangular matrices
 *         | "Prod(" expr "," expr ")"
 *         | "Quot(" expr "," "[" elem-list "]" ")"
 *         | "Op(" expr ")"
 *
 * Whitespace is ignored between tokens; integers are decimal.
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ringloc/core.hpp"

namespace ringloc {

struct Expr {
  enum class Kind { zn, mat, tri, prod, quot, op };

  Kind kind = Kind::zn;
  long long n = 0;                // modulus for zn, size k for mat/tri
  std::vector<Expr> children;     // operands
  std::vector<long long> gens;    // quot generators

  /// Canonical text, e.g. "Tri(2, Zn(2))".
  std::string text() const {
    switch (kind) {
      case Kind::zn: return "Zn(" + std::to_string(n) + ")";
      case Kind::mat: return "Mat(" + std::to_string(n) + ", " + children[0].text() + ")";
      case Kind::tri: return "Tri(" + std::to_string(n) + ", " + children[0].text() + ")";
      case Kind::prod: return "Prod(" + children[0].text() + ", " + children[1].text() + ")";
      case Kind::op: return "Op(" + children[0].text() + ")";
      case Kind::quot: {
        std::string out = "Quot(" + children[0].text() + ", [";
        for (std::size_t i = 0; i < gens.size(); ++i)
          out += (i ? ", " : "") + std::to_string(gens[i]);
        return out + "])";
      }
    }
    return {};
  }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail_at("expected integer", start);
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail_at("integer too large", start);
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr expr() {
    skip_ws();
    std::size_t start = pos_;
    std::string head = word();
    Expr e;
    if (head == "Zn") {
      e.kind = Expr::Kind::zn;
      expect('(');
      std::size_t at = pos_;
      e.n = integer();
      if (e.n < 2) fail_at("Zn order must be >= 2", at);
      expect(')');
    } else if (head == "Mat" || head == "Tri") {
      e.kind = head == "Mat" ? Expr::Kind::mat : Expr::Kind::tri;
      expect('(');
      std::size_t at = pos_;
      e.n = integer();
      if (e.n < 1) fail_at("matrix size must be >= 1", at);
      expect(',');
      e.children.push_back(expr());
      expect(')');
    } else if (head == "Prod") {
      e.kind = Expr::Kind::prod;
      expect('(');
      e.children.push_back(expr());
      expect(',');
      e.children.push_back(expr());
      expect(')');
    } else if (head == "Quot") {
      e.kind = Expr::Kind::quot;
      expect('(');
      e.children.push_back(expr());
      expect(',');
      expect('[');
      if (!peek(']')) {
        do {
          std::size_t at = pos_;
          long long g = integer();
          if (g < 0) fail_at("element id must be non-negative", at);
          e.gens.push_back(g);
        } while (peek(',') && (expect(','), true));
      }
      expect(']');
      expect(')');
    } else if (head == "Op") {
      e.kind = Expr::Kind::op;
      expect('(');
      e.children.push_back(expr());
      expect(')');
    } else {
      fail_at(head.empty() ? "expected constructor name"
                           : "unknown constructor '" + head + "'",
              start);
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a constructor expression. Throws ParseError with line/column.
inline Expr parse_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

}  // namespace ringloc
