#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "k3/rational.hpp"

namespace k3 {

// Deterministic trial division; the primes we ever see are tiny.
inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// An element of F_p.  Every element carries its modulus; mixing moduli is a
// hard error.
struct Fp {
  std::int64_t v = 0;
  std::int64_t p = 0;

  Fp() = default;
  Fp(std::int64_t value, std::int64_t prime) : p(prime) {
    v = value % p;
    if (v < 0) v += p;
  }

  static Fp in_field(std::int64_t value, std::int64_t prime) {
    if (!is_prime(prime)) throw std::domain_error("modulus is not prime");
    return Fp(value, prime);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p == b.p && a.v == b.v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline void check_same_field(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw std::domain_error("mixed prime fields");
}

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp zero_like(const Fp& a) { return Fp(0, a.p); }
inline Fp one_like(const Fp& a) { return Fp(1, a.p); }
inline Fp from_int_like(const Fp& a, long n) { return Fp(n, a.p); }

inline Fp operator+(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return Fp(a.v + b.v, a.p);
}
inline Fp operator-(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return Fp(a.v - b.v, a.p);
}
inline Fp operator-(const Fp& a) { return Fp(-a.v, a.p); }
inline Fp operator*(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return Fp(static_cast<std::int64_t>((__int128)a.v * b.v % a.p), a.p);
}

inline Fp inverse(const Fp& a) {
  if (a.v == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = a.p, nr = a.v;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return Fp(t, a.p);
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

// Image of a rational number in F_p; the denominator must be a unit.
inline Fp lift_rational(const Fp& exemplar, const Rational& q) {
  std::int64_t p = exemplar.p;
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  std::int64_t d = den.get_si();
  if (d == 0) throw std::domain_error("denominator vanishes mod p");
  return Fp(num.get_si(), p) / Fp(d, p);
}

inline Fp pow(Fp a, std::int64_t e) {
  Fp r = one_like(a);
  while (e > 0) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

// Euler criterion; 0 counts as a square.
inline bool is_square_mod_p(const Fp& a) {
  if (a.p == 2) return true;
  if (a.v == 0) return true;
  return pow(a, (a.p - 1) / 2).v == 1;
}

inline std::string to_string(const Fp& a) {
  return std::to_string(a.v) + " mod " + std::to_string(a.p);
}

}  // namespace k3
