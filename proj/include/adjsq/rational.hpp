#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "adjsq/error.hpp"

namespace adjsq {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact "p/q" form. Integers keep the "/1" so that every serialized value
/// parses through the same path.
inline std::string to_pq(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Human form: "p" for integers, "p/q" otherwise.
inline std::string to_display(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return to_pq(r);
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw Error(ErrorKind::BadParam, "empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorKind::BadParam, "malformed rational literal '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

inline std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) {
    throw Error(ErrorKind::BadParam, "expected an integer, got " + to_pq(r));
  }
  if (!r.get_num().fits_slong_p()) throw Error(ErrorKind::TooLarge, "integer overflow: " + to_pq(r));
  return r.get_num().get_si();
}

inline Integer factorial(long n) {
  if (n < 0) throw Error(ErrorKind::BadParam, "factorial of negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// Binomial coefficient; zero outside 0 <= k <= n, which is what the
/// dimension formulas expect at their degenerate boundaries.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace adjsq
