#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

// Dense univariate polynomial, coefficients ascending.  The zero polynomial
// has an empty coefficient vector and degree -1.  K must provide ring
// operations plus is_zero/zero_like/one_like; division-based operations
// additionally need inverse().
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UniPoly(const K& c0) : c_{c0} { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const K& c) { return UniPoly(c); }
  // c0 + c1*x
  static UniPoly linear(const K& c0, const K& c1) {
    return UniPoly(std::vector<K>{c0, c1});
  }
  // x shifted: monomial c * x^k
  static UniPoly monomial(const K& c, int k) {
    if (is_zero(c)) return UniPoly();
    std::vector<K> v(static_cast<size_t>(k) + 1, zero_like(c));
    v.back() = c;
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero_poly() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }

  const K& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  K coeff_or(int i, const K& zero) const {
    return (i >= 0 && i <= degree()) ? c_[static_cast<size_t>(i)] : zero;
  }
  const K& lc() const {
    if (c_.empty()) throw std::domain_error("leading coeff of zero poly");
    return c_.back();
  }

  K eval(const K& x) const {
    if (c_.empty()) return zero_like(x);
    K r = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<K> d;
    d.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * from_int_like(c_[i], static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  // multiply by x^k
  UniPoly shift(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<K> v(static_cast<size_t>(k), zero_like(c_[0]));
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(std::move(v));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty()) return b;
    if (b.c_.empty()) return a;
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), zero_like(a.c_[0]));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<K> r = a.c_;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UniPoly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const K& s, const UniPoly& a) {
    if (is_zero(s)) return UniPoly();
    std::vector<K> r = a.c_;
    for (auto& x : r) x = s * x;
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
};

template <class K>
bool is_zero(const UniPoly<K>& p) {
  return p.zero_poly();
}
template <class K>
UniPoly<K> zero_like(const UniPoly<K>&) {
  return UniPoly<K>();
}
template <class K>
UniPoly<K> one_like(const UniPoly<K>& p) {
  if (p.zero_poly())
    throw std::domain_error("one_like of zero polynomial needs an exemplar");
  return UniPoly<K>::constant(one_like(p.lc()));
}
template <class K>
UniPoly<K> from_int_like(const UniPoly<K>& p, long n) {
  if (p.zero_poly())
    throw std::domain_error("from_int_like needs a nonzero exemplar");
  return UniPoly<K>::constant(from_int_like(p.lc(), n));
}

// ---- field-coefficient division ----

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a,
                                         const UniPoly<K>& b) {
  if (b.zero_poly()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<K>(), a};
  const K inv_lc = inverse(b.lc());
  std::vector<K> rem(a.coeffs());
  std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree()) + 1,
                     zero_like(b.lc()));
  for (int i = a.degree(); i >= b.degree(); --i) {
    K q = rem[static_cast<size_t>(i)] * inv_lc;
    if (!is_zero(q)) {
      quo[static_cast<size_t>(i - b.degree())] = q;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<size_t>(i - b.degree() + j)] =
            rem[static_cast<size_t>(i - b.degree() + j)] - q * b[j];
    }
  }
  return {UniPoly<K>(std::move(quo)), UniPoly<K>(std::move(rem))};
}

template <class K>
UniPoly<K> operator/(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).first;
}
template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).second;
}

// Exact division; throws if the remainder is nonzero.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero_poly()) throw std::domain_error("inexact polynomial division");
  return q;
}

template <class K>
UniPoly<K> monic(const UniPoly<K>& a) {
  if (a.zero_poly()) return a;
  return inverse(a.lc()) * a;
}

// Monic gcd; gcd(f, 0) = monic(f).
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.zero_poly()) {
    UniPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
struct ExtGcd {
  UniPoly<K> g, s, t;
};

template <class K>
ExtGcd<K> poly_ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.zero_poly() && b.zero_poly())
    throw std::domain_error("gcd of two zero polynomials");
  const K one = one_like(a.zero_poly() ? b.lc() : a.lc());
  UniPoly<K> r0 = a, r1 = b;
  UniPoly<K> s0 = UniPoly<K>::constant(one), s1;
  UniPoly<K> t0, t1 = UniPoly<K>::constant(one);
  while (!r1.zero_poly()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  K inv = inverse(r0.lc());
  return {inv * r0, inv * s0, inv * t0};
}

// Squarefree part over a field of characteristic 0 or part coprime to char.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
  if (f.zero_poly()) throw std::domain_error("squarefree part of zero");
  UniPoly<K> d = f.derivative();
  if (d.zero_poly()) return monic(f);
  return exact_div(monic(f), poly_gcd(f, d));
}

// Resultant of two polynomials over a field, by the Euclidean recurrence.
template <class K>
K resultant(UniPoly<K> a, UniPoly<K> b) {
  if (a.zero_poly() && b.zero_poly())
    throw std::domain_error("resultant of two zero polynomials");
  const K one = one_like(a.zero_poly() ? b.lc() : a.lc());
  if (a.zero_poly() || b.zero_poly()) {
    // res(f, 0) = 0 unless the other is a nonzero constant
    const UniPoly<K>& f = a.zero_poly() ? b : a;
    return f.degree() == 0 ? one : zero_like(one);
  }
  K acc = one;
  bool negate = false;
  while (true) {
    if (b.degree() == 0) {
      K r = acc;
      K lb = b.lc();
      for (int i = 0; i < a.degree(); ++i) r = r * lb;
      return negate ? -r : r;
    }
    UniPoly<K> rem = a % b;
    if (rem.zero_poly()) return zero_like(one);
    // res(a,b) = (-1)^(da*db) lc(b)^(da - dr) res(b, rem)
    K lb = b.lc();
    for (int i = 0; i < a.degree() - rem.degree(); ++i) acc = acc * lb;
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    a = std::move(b);
    b = std::move(rem);
  }
}

// ---- ring-coefficient operations (pseudo-division, subresultants) ----

// prem(a, b): lc(b)^(da-db+1) * a = q*b + prem, computed without division.
template <class K>
UniPoly<K> pseudo_rem(UniPoly<K> a, const UniPoly<K>& b) {
  if (b.zero_poly()) throw std::domain_error("pseudo-division by zero");
  int e = a.degree() - b.degree() + 1;
  if (e <= 0) return a;
  const K lb = b.lc();
  while (!a.zero_poly() && a.degree() >= b.degree()) {
    UniPoly<K> t = UniPoly<K>::monomial(a.lc(), a.degree() - b.degree());
    a = lb * a - t * b;
    --e;
  }
  K scale = one_like(lb);
  for (int i = 0; i < e; ++i) scale = scale * lb;
  return scale * a;
}

// Subresultant polynomial remainder sequence (Collins/Brown-Traub).  Returns
// the full chain starting with a, b; coefficients stay in the ring, divisions
// are exact.  Requires exact_div on K (coefficient-wise) via operator/ of the
// caller: here we require K to support exact ring division through
// ring_exact_div below.
template <class K>
K ring_exact_div(const K& a, const K& b);

template <>
inline Rational ring_exact_div<Rational>(const Rational& a, const Rational& b) {
  return a / b;
}

template <class K>
UniPoly<K> ring_exact_div(const UniPoly<K>& a, const UniPoly<K>& b);

// The per-step divisions are exact by the subresultant theory.  Chain
// elements are the subresultants up to sign, which is all we need: they are
// only ever used as equations or normalized afterwards.
template <class K>
std::vector<UniPoly<K>> subresultant_prs(UniPoly<K> f, UniPoly<K> g) {
  if (f.zero_poly() || g.zero_poly())
    throw std::domain_error("subresultant chain of zero polynomial");
  if (f.degree() < g.degree()) std::swap(f, g);
  std::vector<UniPoly<K>> chain{f, g};
  const K one = one_like(f.lc());
  K gg = one, h = one;
  while (true) {
    int delta = f.degree() - g.degree();
    UniPoly<K> r = pseudo_rem(f, g);
    if (r.zero_poly()) break;
    // divide by g * h^delta, exactly
    K denom = gg;
    for (int i = 0; i < delta; ++i) denom = denom * h;
    std::vector<K> rc;
    rc.reserve(static_cast<size_t>(r.degree()) + 1);
    for (int i = 0; i <= r.degree(); ++i)
      rc.push_back(ring_exact_div(r[i], denom));
    f = std::move(g);
    g = UniPoly<K>(std::move(rc));
    chain.push_back(g);
    gg = f.lc();
    if (delta > 0) {
      K num = one;
      for (int i = 0; i < delta; ++i) num = num * gg;
      K den = one;
      for (int i = 0; i < delta - 1; ++i) den = den * h;
      h = ring_exact_div(num, den);
    }
  }
  return chain;
}

// ---- rational-coefficient helpers ----

// content (gcd of numerators / lcm of denominators) and primitive part with
// positive leading coefficient.
inline UniPoly<Rational> primitive_part(const UniPoly<Rational>& f) {
  if (f.zero_poly()) return f;
  Integer num_gcd = 0, den_lcm = 1;
  for (int i = 0; i <= f.degree(); ++i) {
    if (is_zero(f[i])) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            f[i].get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            f[i].get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  UniPoly<Rational> g = scale * f;
  if (sgn(g.lc()) < 0) g = Rational(-1) * g;
  return g;
}

template <class K>
UniPoly<K> ring_exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.zero_poly()) throw std::domain_error("exact division by zero");
  if (a.zero_poly()) return a;
  // synthetic long division with exact coefficient divisions
  std::vector<K> rem(a.coeffs());
  if (a.degree() < b.degree())
    throw std::domain_error("inexact polynomial division");
  std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree()) + 1,
                     zero_like(b.lc()));
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (is_zero(rem[static_cast<size_t>(i)])) continue;
    K q = ring_exact_div(rem[static_cast<size_t>(i)], b.lc());
    quo[static_cast<size_t>(i - b.degree())] = q;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<size_t>(i - b.degree() + j)] =
          rem[static_cast<size_t>(i - b.degree() + j)] - q * b[j];
  }
  for (const auto& c : rem)
    if (!is_zero(c)) throw std::domain_error("inexact polynomial division");
  return UniPoly<K>(std::move(quo));
}

template <class K>
std::string to_string(const UniPoly<K>& f, const std::string& var = "t") {
  if (f.zero_poly()) return "0";
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    if (is_zero(f[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(f[i]) + ")";
    if (i == 1)
      s += "*" + var;
    else if (i > 1)
      s += "*" + var + "^" + std::to_string(i);
  }
  return s;
}

}  // namespace k3
