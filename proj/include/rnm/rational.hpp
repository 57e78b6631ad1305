#ifndef RNM_RATIONAL_HPP
#define RNM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdio>
#include <string>

namespace rnm {

// Exact rational scalar. Arithmetic never rounds; canonical form is
// maintained by GMP (gcd 1, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

// Formats a value with 6 significant figures in the style used by the
// interval printer: trailing zeros stripped, integers keep a trailing dot
// ("1.", "0.582145", "1.00001").
inline std::string format_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".";
  }
  return s;
}

inline std::string format_sig6(const Rational& q) { return format_sig6(to_double(q)); }

}  // namespace rnm

#endif  // RNM_RATIONAL_HPP
