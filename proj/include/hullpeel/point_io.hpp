#pragma once

// CSV point files: one "x,y" pair per line, optional "x,y" header, ids by
// row order. Decimals are read exactly: every coordinate is scaled by
// 10^d, where d is the largest number of fractional digits in the file.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hullpeel/geometry.hpp"

namespace hullpeel {

inline constexpr int kMaxDecimals = 12;

struct PointFile {
  std::vector<Point> points;  // integer coordinates in units of 10^-decimals
  int decimals = 0;

  double unit() const {
    double u = 1.0;
    for (int i = 0; i < decimals; ++i) u /= 10.0;
    return u;
  }
  double real_x(const Point& p) const { return static_cast<double>(p.x) * unit(); }
  double real_y(const Point& p) const { return static_cast<double>(p.y) * unit(); }
};

namespace detail {

struct Decimal {
  bool negative = false;
  std::string whole;
  std::string frac;
};

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Decimal parse_decimal(std::string_view text, std::size_t line) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError(line, "missing coordinate");
  Decimal d;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    d.negative = s[0] == '-';
    ++i;
  }
  bool dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.' && !dot) {
      dot = true;
    } else if (c >= '0' && c <= '9') {
      (dot ? d.frac : d.whole).push_back(c);
    } else {
      throw ParseError(line, "not a decimal number: '" + std::string(s) + "'");
    }
  }
  if (d.whole.empty() && d.frac.empty()) throw ParseError(line, "not a decimal number: '" + std::string(s) + "'");
  if (d.frac.size() > static_cast<std::size_t>(kMaxDecimals)) {
    throw ParseError(line, "more than " + std::to_string(kMaxDecimals) + " fractional digits: '" + std::string(s) + "'");
  }
  return d;
}

inline std::int64_t scale_decimal(const Decimal& d, int decimals, std::size_t line) {
  Wide v = 0;
  const Wide cap = Wide{kCoordinateLimit};
  auto push_digit = [&](char c) {
    v = v * 10 + (c - '0');
    if (v >= cap) throw ParseError(line, "coordinate out of range");
  };
  for (char c : d.whole) push_digit(c);
  for (int i = 0; i < decimals; ++i) push_digit(i < static_cast<int>(d.frac.size()) ? d.frac[i] : '0');
  return static_cast<std::int64_t>(d.negative ? -v : v);
}

inline std::string format_scaled(std::int64_t value, int decimals) {
  const bool negative = value < 0;
  std::string digits = std::to_string(negative ? -value : value);
  if (decimals > 0) {
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
      digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - decimals, 1, '.');
  }
  return negative ? "-" + digits : digits;
}

}  // namespace detail

inline PointFile parse_points(std::istream& in) {
  struct Row {
    detail::Decimal x, y;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::string text;
  std::size_t line = 0;
  bool seen_content = false;
  int decimals = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view s = detail::trim(text);
    if (s.empty()) continue;
    if (!seen_content) {
      seen_content = true;
      if (s == "x,y") continue;
    }
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError(line, "expected 'x,y'");
    if (s.find(',', comma + 1) != std::string_view::npos) throw ParseError(line, "too many fields");
    Row r{detail::parse_decimal(s.substr(0, comma), line), detail::parse_decimal(s.substr(comma + 1), line), line};
    decimals = std::max({decimals, static_cast<int>(r.x.frac.size()), static_cast<int>(r.y.frac.size())});
    rows.push_back(std::move(r));
  }
  PointFile out;
  out.decimals = decimals;
  out.points.reserve(rows.size());
  for (const Row& r : rows) {
    out.points.push_back(Point{detail::scale_decimal(r.x, decimals, r.line), detail::scale_decimal(r.y, decimals, r.line),
                               static_cast<PointId>(out.points.size())});
  }
  return out;
}

inline PointFile parse_points(const std::string& text) {
  std::istringstream in(text);
  return parse_points(in);
}

// Points are written in id order; ids must be 0..n-1 for a faithful round trip.
inline std::string serialize_points(const PointFile& file) {
  std::string out = "x,y\n";
  for (const Point& p : file.points) {
    out += detail::format_scaled(p.x, file.decimals);
    out += ',';
    out += detail::format_scaled(p.y, file.decimals);
    out += '\n';
  }
  return out;
}

}  // namespace hullpeel
