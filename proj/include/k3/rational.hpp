#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace k3 {

// Exact rational scalar.  mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a", "-a", or "a/b" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in: " + s);
  q.canonicalize();
  return q;
}

// Canonical text form: "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, long n) { return Rational(n); }
inline Rational lift_rational(const Rational&, const Rational& q) { return q; }

inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw std::domain_error("division by zero");
  return 1 / q;
}

}  // namespace k3
