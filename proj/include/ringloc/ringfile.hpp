#pragma once

/**
 * @file ringfile.hpp
 * @brief The ring-file text format.
 *
 *   ring <name>
 *   order <n>
 *   one <id>
 *   add:
 *   <n rows of n space-separated ids>
 *   mul:
 *   <n rows>
 *   end
 *
 * Lines starting with '#' (after optional blanks) and blank lines are
 * ignored. Element 0 is always the zero.
 */

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ringloc/core.hpp"
#include "ringloc/ring.hpp"

namespace ringloc {

namespace detail {

struct RingFileLine {
  std::size_t number = 0;
  std::string text;
};

inline std::vector<RingFileLine> significant_lines(std::string_view text) {
  std::vector<RingFileLine> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

/// Whitespace-separated tokens with their 1-based columns.
inline std::vector<std::pair<std::string, std::size_t>> tokens(const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start), start + 1);
  }
  return out;
}

inline long long parse_id(const std::string& token, std::size_t line, std::size_t col) {
  if (token.empty() || token.size() > 9 ||
      token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer, got '" + token + "'", line, col);
  return std::stoll(token);
}

}  // namespace detail

/// Parses and validates a ring file. Syntax errors carry line/column;
/// axiom failures raise ValidationError.
inline FiniteRing parse_ring_file(std::string_view text) {
  std::vector<detail::RingFileLine> lines = detail::significant_lines(text);
  std::size_t at = 0;
  std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  auto next = [&](const char* what) -> const detail::RingFileLine& {
    if (at >= lines.size())
      throw ParseError(std::string("unexpected end of file, expected ") + what, last_line + 1, 1);
    return lines[at++];
  };
  auto keyword_value = [&](const char* keyword) {
    const auto& line = next(keyword);
    auto toks = detail::tokens(line.text);
    if (toks.empty() || toks[0].first != keyword)
      throw ParseError(std::string("expected '") + keyword + "'", line.number,
                       toks.empty() ? 1 : toks[0].second);
    return std::make_pair(line, toks);
  };

  auto [ring_line, ring_toks] = keyword_value("ring");
  std::string name;
  if (ring_toks.size() > 1) name = ring_line.text.substr(ring_toks[1].second - 1);
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();

  auto [order_line, order_toks] = keyword_value("order");
  if (order_toks.size() != 2)
    throw ParseError("expected 'order <n>'", order_line.number, 1);
  long long n = detail::parse_id(order_toks[1].first, order_line.number, order_toks[1].second);
  if (n < 2 || n > static_cast<long long>(kMaxOrder))
    throw ParseError("order must be between 2 and " + std::to_string(kMaxOrder),
                     order_line.number, order_toks[1].second);

  auto [one_line, one_toks] = keyword_value("one");
  if (one_toks.size() != 2) throw ParseError("expected 'one <id>'", one_line.number, 1);
  RawTables raw;
  raw.one = detail::parse_id(one_toks[1].first, one_line.number, one_toks[1].second);

  auto table = [&, n = n](const char* header, std::vector<std::vector<long long>>& out) {
    const auto& head = next(header);
    auto toks = detail::tokens(head.text);
    if (toks.size() != 1 || toks[0].first != header)
      throw ParseError(std::string("expected '") + header + "'", head.number,
                       toks.empty() ? 1 : toks[0].second);
    out.assign(std::size_t(n), {});
    for (long long row = 0; row < n; ++row) {
      const auto& line = next("a table row");
      auto cells = detail::tokens(line.text);
      if (cells.size() != std::size_t(n))
        throw ParseError("row has " + std::to_string(cells.size()) + " entries, expected " +
                             std::to_string(n),
                         line.number, cells.empty() ? 1 : cells.back().second);
      for (const auto& [tok, col] : cells) {
        long long v = detail::parse_id(tok, line.number, col);
        if (v >= n)
          throw ParseError("entry " + tok + " is not an element id", line.number, col);
        out[std::size_t(row)].push_back(v);
      }
    }
  };
  table("add:", raw.add);
  table("mul:", raw.mul);

  const auto& end_line = next("'end'");
  auto end_toks = detail::tokens(end_line.text);
  if (end_toks.size() != 1 || end_toks[0].first != "end")
    throw ParseError("expected 'end'", end_line.number, end_toks.empty() ? 1 : end_toks[0].second);
  if (at != lines.size())
    throw ParseError("trailing content after 'end'", lines[at].number, 1);
  if (raw.one >= n) throw ParseError("one is not an element id", one_line.number, one_toks[1].second);

  return FiniteRing::make(raw, name, name);
}

/// Inverse of parse_ring_file.
inline std::string serialize(const FiniteRing& R) {
  std::ostringstream out;
  out << "ring " << (R.name().empty() ? "R" : R.name()) << "\n";
  out << "order " << R.order() << "\n";
  out << "one " << R.one() << "\n";
  auto table = [&](const char* header, auto op) {
    out << header << "\n";
    for (std::size_t a = 0; a < R.order(); ++a) {
      for (std::size_t b = 0; b < R.order(); ++b) out << (b ? " " : "") << op(Elem(a), Elem(b));
      out << "\n";
    }
  };
  table("add:", [&](Elem a, Elem b) { return R.add(a, b); });
  table("mul:", [&](Elem a, Elem b) { return R.mul(a, b); });
  out << "end\n";
  return out.str();
}

}  // namespace ringloc
