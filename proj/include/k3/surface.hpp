#pragma once

#include <array>
#include <optional>
#include <vector>

#include "k3/curve.hpp"
#include "k3/factor.hpp"
#include "k3/fp.hpp"
#include "k3/multipoly.hpp"

namespace k3 {

// A (2,2,2) form in P^1 x P^1 x P^1, given by its affine coefficient tensor:
// entry (i, j, k) multiplies x^i y^j z^k.
class SurfaceForm {
 public:
  explicit SurfaceForm(std::array<std::array<std::array<Rational, 3>, 3>, 3> c);

  const Rational& coeff(int i, int j, int k) const {
    return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]
             [static_cast<size_t>(k)];
  }

  MultiPoly as_multipoly() const;

  // The K3 surface the whole toolkit is built around.
  static SurfaceForm paper_surface();

  // true iff the line (x, 0, 0) lies on the surface.
  bool line_on_surface_check() const;

  // The chart flip x -> 1/x with denominators cleared, for inspecting the
  // fiber at infinity by hand.
  SurfaceForm flip_x_chart() const;

  template <class K>
  BiquadraticCurve<K> fiber_at(const K& x0) const {
    std::array<std::array<K, 3>, 3> out;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        K acc = zero_like(x0);
        K xp = one_like(x0);
        for (int i = 0; i < 3; ++i) {
          acc = acc + lift_rational(x0, coeff(i, j, k)) * xp;
          xp = xp * x0;
        }
        out[static_cast<size_t>(j)][static_cast<size_t>(k)] = acc;
      }
    bool nonzero = false;
    for (auto& row : out)
      for (auto& v : row) nonzero = nonzero || !is_zero(v);
    if (!nonzero) throw std::domain_error("fiber is identically zero");
    return BiquadraticCurve<K>(std::move(out));
  }

  template <class K>
  K eval(const K& x, const K& y, const K& z) const {
    K acc = zero_like(x);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (is_zero(coeff(i, j, k))) continue;
          K t = lift_rational(x, coeff(i, j, k));
          for (int a = 0; a < i; ++a) t = t * x;
          for (int a = 0; a < j; ++a) t = t * y;
          for (int a = 0; a < k; ++a) t = t * z;
          acc = acc + t;
        }
    return acc;
  }

  // The deck involution sigma_axis: replace the axis coordinate by the
  // conjugate root of F viewed as a quadratic in that coordinate.
  // axis: 1 for x, 2 for y, 3 for z.
  template <class K>
  std::array<K, 3> deck_transform(int axis, const std::array<K, 3>& p) const {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1..3");
    if (!is_zero(eval(p[0], p[1], p[2])))
      throw std::domain_error("point is not on the surface");
    // F = A w^2 + B w + C in the axis coordinate w
    const K zero = zero_like(p[0]);
    K quad = zero, lin = zero;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (is_zero(coeff(i, j, k))) continue;
          int w_deg = (axis == 1) ? i : (axis == 2) ? j : k;
          K t = lift_rational(p[0], coeff(i, j, k));
          auto mul_pow = [&](const K& v, int e) {
            for (int a = 0; a < e; ++a) t = t * v;
          };
          if (axis != 1) mul_pow(p[0], i);
          if (axis != 2) mul_pow(p[1], j);
          if (axis != 3) mul_pow(p[2], k);
          if (w_deg == 2) quad = quad + t;
          if (w_deg == 1) lin = lin + t;
        }
    if (is_zero(quad))
      throw std::domain_error(
          "degenerate axis quadratic: the projection is not a double cover "
          "at this point");
    std::array<K, 3> q = p;
    size_t idx = static_cast<size_t>(axis - 1);
    q[idx] = -lin / quad - p[idx];
    return q;
  }

 private:
  std::array<std::array<std::array<Rational, 3>, 3>, 3> c_;
};

struct RationalFunction {
  UniPoly<Rational> num;
  UniPoly<Rational> den;  // constant 1 when the pipeline reduced mod g
};

enum class Nodality { Node, CuspOrWorse, SmoothPoint };

struct NodalityCertificate {
  std::int64_t p = 0;
  std::int64_t x0 = 0, y0 = 0, z0 = 0;
  // quadratic part A y^2 + B yz + C z^2 of the translated form
  std::int64_t A = 0, B = 0, C = 0;
  std::int64_t discriminant = 0;  // B^2 - 4AC mod p
  bool discriminant_is_square = false;
  Nodality kind = Nodality::SmoothPoint;
};

struct SingularFiberReport {
  UniPoly<Rational> g;  // primitive, positive leading coefficient
  RationalFunction y_of_x;
  RationalFunction z_of_x;
  std::vector<FactorPattern> patterns;
  std::vector<NodalityCertificate> certificates;
  // extraneous elimination branches discarded after back-substitution failed
  std::vector<UniPoly<Rational>> dropped_branches;
  std::optional<IrreducibilityReport> irreducibility;
};

// Locates the affine singular fibers by iterated resultants, strips
// extraneous factors by exact back-substitution, and certifies nodality of
// the mod-p witnesses.
SingularFiberReport singular_locus(
    const SurfaceForm& X, const std::vector<std::int64_t>& primes = {13, 11},
    std::uint64_t seed = 0);

// Classifies the singularity of the reduced surface at an affine point:
// translate, check that constant and linear parts vanish, then classify by
// the degree-2 part.
Nodality classify_point_mod_p(const SurfaceForm& X, const Fp& x0, const Fp& y0,
                              const Fp& z0);

NodalityCertificate certify_node_mod_p(const SurfaceForm& X, const Fp& x0,
                                       const Fp& y0, const Fp& z0);

}  // namespace k3
