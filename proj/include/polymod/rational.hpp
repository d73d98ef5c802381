#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polymod/error.hpp"

namespace polymod {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Integer floor(const Rational& q) {
  const Integer& num = boost::multiprecision::numerator(q);
  const Integer& den = boost::multiprecision::denominator(q);
  Integer quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline int sign(const Rational& q) { return q.sign(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Integer parse_integer(std::string_view s, std::string_view context) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty integer in '" + std::string(context) + "'");
  Integer value = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(context) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p", "p/q" (no decimals: wall logic is equality-sensitive).
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s, text));
  Integer num = detail::parse_integer(s.substr(0, slash), text);
  Integer den = detail::parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Comma-separated rationals; an entry "p/q×m" (also "p/qxm", "p/q*m")
/// expands to m copies.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = detail::trim(text.substr(pos, comma - pos));
    if (item.empty()) throw Error(ErrorKind::ParseError, "empty entry in '" + std::string(text) + "'");

    std::size_t mult_pos = std::string_view::npos;
    std::size_t mult_len = 0;
    if (auto p = item.find("\xC3\x97"); p != std::string_view::npos) {  // U+00D7
      mult_pos = p;
      mult_len = 2;
    } else if (auto p2 = item.find_first_of("x*"); p2 != std::string_view::npos) {
      mult_pos = p2;
      mult_len = 1;
    }
    if (mult_pos != std::string_view::npos) {
      Rational value = parse_rational(item.substr(0, mult_pos));
      Integer count = detail::parse_integer(item.substr(mult_pos + mult_len), item);
      if (count <= 0 || count > 1000)
        throw Error(ErrorKind::ParseError, "bad repeat count in '" + std::string(item) + "'");
      for (int i = 0; i < count.convert_to<int>(); ++i) out.push_back(value);
    } else {
      out.push_back(parse_rational(item));
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace polymod
