#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "harbourne/error.hpp"

namespace harbourne {

using Integer = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  // cpp_rational rejects negative denominators.
  if (den < 0) return Rational(Integer(-num), Integer(-den));
  return Rational(num, den);
}

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline std::string to_string(const Integer& z) { return z.str(); }

/// "p/q" in lowest terms, or the bare integer when q = 1.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!detail::all_digits(body)) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  const Integer value{std::string(body)};
  return negative ? Integer(-value) : value;
}

/// Parses "p", "-p", "p/q" (q > 0 after the sign of p is applied).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!detail::all_digits(den_text)) {
    throw InputError("bad denominator in rational: '" + std::string(text) + "'");
  }
  const Integer den(std::string{den_text});
  if (den == 0) throw InputError("zero denominator in rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

inline Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

/// base^exponent for a possibly negative exponent.
inline Rational rational_pow(const Integer& base, std::int64_t exponent) {
  if (exponent >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(exponent)));
  if (base == 0) throw PreconditionError("zero raised to a negative power");
  return make_rational(Integer(1), ipow(base, static_cast<std::uint64_t>(-exponent)));
}

/// r choose 2.
inline Integer choose2(const Integer& r) { return r * (r - 1) / 2; }

}  // namespace harbourne
