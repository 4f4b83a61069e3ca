#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstring>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>

#include "t2conv/error.hpp"

namespace t2conv {

/// Exact arithmetic scalar used by truth values.
using Rational = mpq_class;

/// p/q in lowest terms.  mpq_class(p, q) alone is not canonical, and gmp
/// comparisons assume canonical operands.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Exact: every finite double is a dyadic rational.
inline Rational to_rational(double x) { return Rational(x); }

/// Round to the nearest double (ties to even mantissa).
inline double to_double(const Rational& q) {
  double d = q.get_d();  // truncates toward zero
  if (Rational(d) == q) return d;
  double other = std::nextafter(d, q > 0 ? HUGE_VAL : -HUGE_VAL);
  Rational ed = abs(q - Rational(d));
  Rational eo = abs(Rational(other) - q);
  if (eo < ed) return other;
  if (ed < eo) return d;
  // tie: prefer the even significand
  long long bits_d;
  static_assert(sizeof(double) == sizeof(long long));
  std::memcpy(&bits_d, &d, sizeof d);
  return (bits_d & 1) ? other : d;
}

template <class T>
T scalar_cast(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>)
    return q;
  else
    return static_cast<T>(to_double(q));
}

template <class T>
T scalar_cast(double x) {
  if constexpr (std::is_same_v<T, Rational>)
    return Rational(x);
  else
    return static_cast<T>(x);
}

template <class T>
double as_double(const T& x) {
  if constexpr (std::is_same_v<T, Rational>)
    return to_double(x);
  else
    return static_cast<double>(x);
}

// std::min/std::max do not deduce through gmp expression templates.
template <class T>
T smin(const T& a, const T& b) {
  return b < a ? T(b) : T(a);
}
template <class T>
T smax(const T& a, const T& b) {
  return a < b ? T(b) : T(a);
}

/// Parses "p/q", an integer, or a plain decimal such as "0.3" (exactly 3/10).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational { throw ParseError("not a rational number: '" + s + "'"); };
  if (s.empty()) return fail();
  if (s.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) return fail();
    if (q.get_den() == 0) return fail();
    q.canonicalize();
    return q;
  }
  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '-' || s[pos] == '+') negative = s[pos++] == '-';
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

/// "p/q" form, or just "p" for integers.
inline std::string format_rational(const Rational& q) { return q.get_str(10); }

/// True when the rational is exactly a finite double.
inline bool is_double_exact(const Rational& q) { return Rational(to_double(q)) == q; }

}  // namespace t2conv
