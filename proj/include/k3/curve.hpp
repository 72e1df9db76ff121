#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "k3/rational.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// A point of P^1 x P^1 in affine coordinates, with chart flags for either
// coordinate at infinity.
template <class K>
struct FiberPoint {
  K y{};
  K z{};
  bool inf_y = false;
  bool inf_z = false;

  static FiberPoint affine(const K& y, const K& z) { return {y, z}; }

  friend bool operator==(const FiberPoint& a, const FiberPoint& b) {
    if (a.inf_y != b.inf_y || a.inf_z != b.inf_z) return false;
    if (!a.inf_y && !(a.y == b.y)) return false;
    if (!a.inf_z && !(a.z == b.z)) return false;
    return true;
  }
  friend bool operator!=(const FiberPoint& a, const FiberPoint& b) {
    return !(a == b);
  }
};

// A (2,2) form in (y, z): coefficient (j, k) multiplies y^j z^k.
template <class K>
class BiquadraticCurve {
 public:
  explicit BiquadraticCurve(std::array<std::array<K, 3>, 3> c)
      : c_(std::move(c)) {
    bool nonzero = false;
    for (auto& row : c_)
      for (auto& v : row) nonzero = nonzero || !is_zero(v);
    if (!nonzero) throw std::domain_error("identically zero fiber");
  }

  const K& coeff(int j, int k) const {
    return c_[static_cast<size_t>(j)][static_cast<size_t>(k)];
  }

  K eval(const K& y, const K& z) const {
    K acc = zero_like(y);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (is_zero(coeff(j, k))) continue;
        K t = coeff(j, k);
        for (int i = 0; i < j; ++i) t = t * y;
        for (int i = 0; i < k; ++i) t = t * z;
        acc = acc + t;
      }
    return acc;
  }

  K partial_y(const K& y, const K& z) const {
    K acc = zero_like(y);
    for (int j = 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (is_zero(coeff(j, k))) continue;
        K t = coeff(j, k) * from_int_like(y, j);
        for (int i = 0; i < j - 1; ++i) t = t * y;
        for (int i = 0; i < k; ++i) t = t * z;
        acc = acc + t;
      }
    return acc;
  }

  K partial_z(const K& y, const K& z) const {
    K acc = zero_like(y);
    for (int j = 0; j < 3; ++j)
      for (int k = 1; k < 3; ++k) {
        if (is_zero(coeff(j, k))) continue;
        K t = coeff(j, k) * from_int_like(y, k);
        for (int i = 0; i < j; ++i) t = t * y;
        for (int i = 0; i < k - 1; ++i) t = t * z;
        acc = acc + t;
      }
    return acc;
  }

  // Membership test honoring the infinity charts: substituting y = 1/u and
  // clearing u^2 (and likewise for z) turns "at infinity" into evaluating
  // the top-degree coefficient rows.
  bool contains(const FiberPoint<K>& p) const {
    const K zero = zero_like(c_[0][0]);
    if (!p.inf_y && !p.inf_z) return is_zero(eval(p.y, p.z));
    if (p.inf_y && !p.inf_z) {
      K acc = zero;
      for (int k = 0; k < 3; ++k) {
        K t = coeff(2, k);
        for (int i = 0; i < k; ++i) t = t * p.z;
        acc = acc + t;
      }
      return is_zero(acc);
    }
    if (!p.inf_y && p.inf_z) {
      K acc = zero;
      for (int j = 0; j < 3; ++j) {
        K t = coeff(j, 2);
        for (int i = 0; i < j; ++i) t = t * p.y;
        acc = acc + t;
      }
      return is_zero(acc);
    }
    return is_zero(coeff(2, 2));
  }

 private:
  std::array<std::array<K, 3>, 3> c_;
};

}  // namespace k3
