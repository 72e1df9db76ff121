#include <tuple>
#include <vector>

#include "doctest.h"
#include "k3/surface.hpp"

using namespace k3;

namespace {

SurfaceForm make_surface(
    std::vector<std::tuple<int, int, int, long>> entries) {
  std::array<std::array<std::array<Rational, 3>, 3>, 3> c{};
  for (auto& [i, j, k, v] : entries)
    c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
        Rational(v);
  return SurfaceForm(c);
}

}  // namespace

TEST_CASE("canonical surface basics") {
  SurfaceForm X = SurfaceForm::paper_surface();
  CHECK(X.line_on_surface_check());
  // the section (x, 0, 0) lies on the surface for sample x
  for (long x : {0L, 1L, -3L, 7L})
    CHECK(is_zero(X.eval(Rational(x), Rational(0), Rational(0))));
  // the known singular point of the fiber x=7 over F_13
  CHECK(is_zero(X.eval(Fp(7, 13), Fp(9, 13), Fp(5, 13))));
  // chart flip is an involution
  SurfaceForm Y = X.flip_x_chart().flip_x_chart();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(Y.coeff(i, j, k) == X.coeff(i, j, k));
}

TEST_CASE("fiber extraction") {
  SurfaceForm X = SurfaceForm::paper_surface();
  auto E = X.fiber_at<Rational>(Rational(0));
  // F(0, y, z) = y^2 z^2 + 3 y^2 z + 2 y^2 + y + z
  CHECK(E.coeff(2, 2) == Rational(1));
  CHECK(E.coeff(2, 1) == Rational(3));
  CHECK(E.coeff(2, 0) == Rational(2));
  CHECK(E.coeff(1, 0) == Rational(1));
  CHECK(E.coeff(0, 1) == Rational(1));
  CHECK(E.contains(FiberPoint<Rational>::affine(Rational(0), Rational(0))));
  CHECK(E.contains(FiberPoint<Rational>::affine(Rational(7, 15), Rational(-7))));

  // a surface whose fiber at 0 vanishes identically
  SurfaceForm Z = make_surface({{2, 2, 0, 1}, {1, 1, 1, 3}});
  CHECK_THROWS_AS(Z.fiber_at<Rational>(Rational(0)), std::domain_error);
}

TEST_CASE("deck transforms are involutions staying on the surface") {
  SurfaceForm X = SurfaceForm::paper_surface();
  std::array<Rational, 3> p{Rational(2), Rational(0), Rational(0)};
  REQUIRE(is_zero(X.eval(p[0], p[1], p[2])));
  for (int axis : {1, 2, 3}) {
    std::array<Rational, 3> q;
    try {
      q = X.deck_transform(axis, p);
    } catch (const std::domain_error&) {
      continue;  // degenerate axis quadratic at this point
    }
    CHECK(is_zero(X.eval(q[0], q[1], q[2])));
    CHECK(X.deck_transform(axis, q) == p);
  }
  // off-surface input is rejected
  std::array<Rational, 3> bad{Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(X.deck_transform(2, bad), std::domain_error);
}

TEST_CASE("nodality classification on synthetic surfaces") {
  // F = y^2 - z^2 - x: node with split tangent cone at (0,0,0)
  SurfaceForm node = make_surface({{0, 2, 0, 1}, {0, 0, 2, -1}, {1, 0, 0, -1}});
  auto cert = certify_node_mod_p(node, Fp(0, 13), Fp(0, 13), Fp(0, 13));
  CHECK(cert.kind == Nodality::Node);
  CHECK(cert.discriminant_is_square);

  // F = y^2 - x z^2: the fiber x=0 degenerates to a double line at (0,0)
  SurfaceForm cusp = make_surface({{0, 2, 0, 1}, {1, 0, 2, -1}});
  CHECK(certify_node_mod_p(cusp, Fp(0, 13), Fp(0, 13), Fp(0, 13)).kind ==
        Nodality::CuspOrWorse);

  // F = y - z: smooth at the origin
  SurfaceForm smooth = make_surface({{0, 1, 0, 1}, {0, 0, 1, -1}});
  CHECK(classify_point_mod_p(smooth, Fp(0, 13), Fp(0, 13), Fp(0, 13)) ==
        Nodality::SmoothPoint);

  // F = yz: node with rational tangent directions y = 0, z = 0
  SurfaceForm axes = make_surface({{0, 1, 1, 1}, {2, 0, 0, 0}});
  CHECK(certify_node_mod_p(axes, Fp(0, 13), Fp(0, 13), Fp(0, 13)).kind ==
        Nodality::Node);

  // off-surface point
  SurfaceForm X = SurfaceForm::paper_surface();
  CHECK_THROWS_AS(certify_node_mod_p(X, Fp(1, 13), Fp(1, 13), Fp(1, 13)),
                  std::domain_error);
}

TEST_CASE("positive-dimensional singular locus is rejected") {
  // F = yz: singular along the whole line y = z = 0
  SurfaceForm degenerate = make_surface({{0, 1, 1, 1}, {2, 0, 0, 0}});
  CHECK_THROWS_AS(singular_locus(degenerate), std::domain_error);
}
