#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "k3/rational.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// Sparse trivariate polynomial over Q in (x, y, z).  No zero coefficients
// are stored.
class MultiPoly {
 public:
  using Exponents = std::array<int, 3>;

  MultiPoly() = default;

  void set(int i, int j, int k, const Rational& c) {
    Exponents e{i, j, k};
    if (is_zero(c))
      terms_.erase(e);
    else
      terms_[e] = c;
  }
  void add_term(int i, int j, int k, const Rational& c) {
    Exponents e{i, j, k};
    auto it = terms_.find(e);
    Rational v = (it == terms_.end() ? Rational(0) : it->second) + c;
    set(i, j, k, v);
  }
  Rational coeff(int i, int j, int k) const {
    auto it = terms_.find({i, j, k});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  MultiPoly partial(int var) const {
    MultiPoly d;
    for (auto& [e, c] : terms_) {
      if (e[static_cast<size_t>(var)] == 0) continue;
      Exponents f = e;
      f[static_cast<size_t>(var)] -= 1;
      d.add_term(f[0], f[1], f[2], c * Rational(e[static_cast<size_t>(var)]));
    }
    return d;
  }

  template <class K>
  K eval(const K& x, const K& y, const K& z) const {
    K acc = zero_like(x);
    for (auto& [e, c] : terms_) {
      K t = lift_rational(x, c);
      for (int i = 0; i < e[0]; ++i) t = t * x;
      for (int i = 0; i < e[1]; ++i) t = t * y;
      for (int i = 0; i < e[2]; ++i) t = t * z;
      acc = acc + t;
    }
    return acc;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e[0], e[1], e[2], c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (auto& [e, c] : a.terms_)
      for (auto& [f, d] : b.terms_)
        r.add_term(e[0] + f[0], e[1] + f[1], e[2] + f[2], c * d);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Exponents, Rational> terms_;
};

// Nested dense views used by the elimination pipeline: innermost x, then y,
// outermost z.
using PolyX = UniPoly<Rational>;
using PolyXY = UniPoly<PolyX>;
using PolyXYZ = UniPoly<PolyXY>;

inline PolyXYZ to_nested(const MultiPoly& f) {
  int dz = 0, dy = 0, dx = 0;
  for (auto& [e, c] : f.terms()) {
    dx = std::max(dx, e[0]);
    dy = std::max(dy, e[1]);
    dz = std::max(dz, e[2]);
  }
  std::vector<PolyXY> zc;
  for (int k = 0; k <= dz; ++k) {
    std::vector<PolyX> yc;
    for (int j = 0; j <= dy; ++j) {
      std::vector<Rational> xc(static_cast<size_t>(dx) + 1, Rational(0));
      for (int i = 0; i <= dx; ++i) xc[static_cast<size_t>(i)] = f.coeff(i, j, k);
      yc.emplace_back(std::move(xc));
    }
    zc.emplace_back(std::move(yc));
  }
  return PolyXYZ(std::move(zc));
}

}  // namespace k3
