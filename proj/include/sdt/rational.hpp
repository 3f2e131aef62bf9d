#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdt {

// All values in this library are exact rationals. Every theorem the library
// checks is sign-sensitive (a slack of exactly zero means something different
// from a slack of 1e-17), so there is no floating point and no epsilon
// anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p", "p/q" or an exact decimal such as "-3.25". No rounding:
/// "0.1" becomes exactly 1/10. Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("sign with no digits in rational literal");

  const auto bad = [&text] {
    return std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  };

  Integer num;
  Integer den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) throw bad();
    num = Integer(std::string(p));
    den = Integer(std::string(q));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    if (!whole.empty() && !detail::all_digits(whole)) throw bad();
    if (!frac.empty() && !detail::all_digits(frac)) throw bad();
    num = whole.empty() ? Integer(0) : Integer(std::string(whole));
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!detail::all_digits(s)) throw bad();
    num = Integer(std::string(s));
  }
  if (negative) num = -num;
  return Rational(num, den);
}

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q)=1.
inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace sdt
