#include <vector>

#include "doctest.h"
#include "k3/grouplaw.hpp"
#include "k3/surface.hpp"

using namespace k3;

namespace {

MarkedFiber<Rational> paper_fiber() {
  SurfaceForm X = SurfaceForm::paper_surface();
  return MarkedFiber<Rational>(
      X.fiber_at<Rational>(Rational(0)),
      FiberPoint<Rational>::affine(Rational(0), Rational(0)));
}

FiberPoint<Rational> pt(long ny, long dy, long nz, long dz) {
  return FiberPoint<Rational>::affine(Rational(ny, dy), Rational(nz, dz));
}

}  // namespace

TEST_CASE("one-one form canonical scaling and Mobius conversion") {
  OneOneForm<Rational> a(Rational(2), Rational(-1), Rational(-1), Rational(0));
  CHECK(a.alpha == Rational(1));
  CHECK(a.beta == Rational(-1, 2));
  // z = (ay+b)/(cy+d) maps to (c, -a, d, -b)
  auto b = OneOneForm<Rational>::from_mobius(Rational(1), Rational(0),
                                             Rational(2), Rational(-1));
  CHECK(a == b);
  CHECK_THROWS_AS(OneOneForm<Rational>(Rational(0), Rational(0), Rational(0),
                                       Rational(0)),
                  std::domain_error);
}

TEST_CASE("interpolation through three points and with tangency") {
  auto F = paper_fiber();
  // three-point interpolation reproduces the (1,1) form through the chord
  std::vector<InterpolationConstraint<Rational>> cs{
      {F.O, 1}, {F.O_prime, 1}, {star(F, F.O_prime, F.O), 1}};
  OneOneForm<Rational> L = interpolate(F.curve, cs);
  for (const auto& c : cs)
    CHECK(is_zero(L.eval(c.point.y, c.point.z)));

  // the triple-contact form at O is z = y/(2y-1)
  CHECK(F.triple_contact == OneOneForm<Rational>::from_mobius(
                                Rational(1), Rational(0), Rational(2),
                                Rational(-1)));
  // off-curve constraint rejected
  CHECK_THROWS_AS(interpolate(F.curve, {{pt(1, 1, 1, 1), 3}}),
                  std::domain_error);
}

TEST_CASE("degenerate configurations raise a dimension error") {
  // E = yz, three points on the component y = 0
  std::array<std::array<Rational, 3>, 3> c{};
  c[1][1] = Rational(1);
  BiquadraticCurve<Rational> E(c);
  std::vector<InterpolationConstraint<Rational>> cs{
      {pt(0, 1, 1, 1), 1}, {pt(0, 1, 2, 1), 1}, {pt(0, 1, 3, 1), 1}};
  CHECK_THROWS_AS(interpolate(E, cs), std::domain_error);
}

TEST_CASE("fourth intersection on a synthetically split restriction") {
  // E(y, -y) = (y-1)(y-2)(y-3)(y-4) by construction, with L: z = -y
  std::array<std::array<Rational, 3>, 3> c{};
  c[2][2] = Rational(1);    // y^2 z^2 -> y^4
  c[1][2] = Rational(-10);  // y z^2  -> -10 y^3
  c[0][2] = Rational(35);   // z^2    -> 35 y^2
  c[1][0] = Rational(-50);  // y      -> -50 y
  c[0][0] = Rational(24);
  BiquadraticCurve<Rational> E(c);
  OneOneForm<Rational> L(Rational(0), Rational(1), Rational(1), Rational(0));
  std::vector<FiberPoint<Rational>> known{pt(1, 1, -1, 1), pt(2, 1, -2, 1),
                                          pt(3, 1, -3, 1)};
  FiberPoint<Rational> fourth = fourth_intersection(E, L, known);
  CHECK(fourth == pt(4, 1, -4, 1));
  // inconsistent known points are rejected
  known[0] = pt(5, 1, -5, 1);
  CHECK_THROWS_AS(fourth_intersection(E, L, known), std::domain_error);
}

TEST_CASE("star identities on the paper fiber") {
  auto F = paper_fiber();
  auto P = star(F, F.O_prime, F.O);
  CHECK(P == pt(-203, 92, -2198, 841));
  CHECK(star(F, F.O, F.O_prime) == P);    // symmetry
  CHECK(star(F, F.O_prime, P) == F.O);    // involutivity
  CHECK(star(F, F.O, F.O) == F.O);        // the triple-contact configuration
  CHECK(neg(F, neg(F, P)) == P);
  CHECK(add(F, P, F.O) == P);
  CHECK(add(F, P, neg(F, P)) == F.O);
}

TEST_CASE("two-torsion polynomial and halving the zero point") {
  auto F = paper_fiber();
  auto tt = two_torsion_poly(F);
  UniPoly<Rational> expected(std::vector<Rational>{
      Rational(-104), Rational(-116), Rational(-36), Rational(0),
      Rational(1)});
  CHECK(primitive_part(tt) == expected);

  // halving O recovers O itself on the rational branch t = -2
  auto res = halve(F, F.O);
  CHECK(primitive_part(res.h) == expected);
  bool found_zero = false;
  for (const auto& b : res.branches) {
    if (b.min_poly.degree() != 1) continue;
    CHECK(b.min_poly == UniPoly<Rational>(std::vector<Rational>{Rational(2),
                                                                Rational(1)}));
    CHECK(is_zero(b.Q.y));
    CHECK(is_zero(b.Q.z));
    found_zero = true;
  }
  CHECK(found_zero);
}

TEST_CASE("halving is rejected off the affine chart") {
  auto F = paper_fiber();
  FiberPoint<Rational> inf;
  inf.inf_y = true;
  CHECK_THROWS_AS(halve(F, inf), std::domain_error);
}

TEST_CASE("group law over a prime field") {
  SurfaceForm X = SurfaceForm::paper_surface();
  auto E = X.fiber_at<Fp>(Fp(0, 13));
  FiberPoint<Fp> O = FiberPoint<Fp>::affine(Fp(0, 13), Fp(0, 13));
  MarkedFiber<Fp> F(E, O);
  FiberPoint<Fp> A = FiberPoint<Fp>::affine(Fp(5, 13), Fp(1, 13));
  REQUIRE(E.contains(A));
  CHECK(add(F, A, O) == A);
  CHECK(add(F, A, neg(F, A)) == O);
  CHECK(star(F, A, star(F, A, O)) == O);
}
