#include <algorithm>
#include <vector>

#include "doctest.h"
#include "k3/lattice.hpp"

using namespace k3;

namespace {

DivisorClass dc(long a, long b, long c, long d) {
  DivisorClass r;
  r.v = {Integer(a), Integer(b), Integer(c), Integer(d)};
  return r;
}

UniPoly<Rational> qconst(long n) { return UniPoly<Rational>(Rational(n)); }

}  // namespace

TEST_CASE("intersection pairing against the Gram matrix") {
  CHECK(pair(D4(), D4()) == Integer(-2));
  CHECK(pair(D1(), D2()) == Integer(2));
  CHECK(pair(D1(), D4()) == Integer(1));
  CHECK(pair(D2(), D4()) == Integer(0));
  DivisorClass H = D1() + D2() + D3();
  CHECK(pair(H, H) == Integer(12));
  // symmetry on a spot check
  DivisorClass A = dc(1, -2, 3, 5), B = dc(0, 4, -1, 2);
  CHECK(pair(A, B) == pair(B, A));
}

TEST_CASE("generators preserve the form and fix their documented classes") {
  for (const LatticeIsometry* g :
       {&iso_U(), &iso_T1(), &iso_T2(), &iso_T3(), &iso_T4()})
    CHECK(g->preserves_form());
  CHECK(LatticeIsometry::identity().preserves_form());
  CHECK(iso_U().apply(D4()) == D4());
  CHECK(iso_T4().apply(iso_T3().apply(iso_T4().apply(iso_T2().apply(D1())))) ==
        D1());
  CHECK(iso_T3() == iso_U() * iso_T2() * iso_U());

  LatticeIsometry::Matrix twoI{};
  for (size_t i = 0; i < 4; ++i) twoI[i][i] = 2;
  CHECK(!LatticeIsometry::is_isometry(twoI));
  CHECK_THROWS_AS(LatticeIsometry::checked(twoI), std::domain_error);
}

TEST_CASE("inverses and pairing invariance") {
  for (const LatticeIsometry* g :
       {&iso_U(), &iso_T1(), &iso_T2(), &iso_T3(), &iso_T4()}) {
    CHECK(*g * g->inverse() == LatticeIsometry::identity());
    CHECK(g->inverse() * *g == LatticeIsometry::identity());
    DivisorClass A = dc(3, -1, 2, 7), B = dc(-2, 5, 0, 1);
    CHECK(pair(g->apply(A), g->apply(B)) == pair(A, B));
  }
}

TEST_CASE("orbit of D4 under the generators") {
  std::vector<LatticeIsometry> gens{iso_U(), iso_T1(), iso_T2(), iso_T3(),
                                    iso_T4()};
  auto trivial = orbit_of_D4(gens, 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == D4());

  auto orbit = orbit_of_D4(gens, 2);
  CHECK(orbit.size() > 1);
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  for (const auto& d : orbit) CHECK(pair(d, d) == Integer(-2));
  CHECK(std::binary_search(orbit.begin(), orbit.end(), D4()));
}

TEST_CASE("the C_m classes") {
  CHECK(cm_class(0) == D4());
  CHECK(cm_class(1) == dc(6, 1, 1, -3));
  for (int m = 0; m <= 6; ++m) {
    DivisorClass c = cm_class(m);
    CHECK(pair(c, c) == Integer(-2));
  }
  // word-length growth: the D1-degree is strictly increasing
  CHECK(cm_class(2).v[0] > cm_class(1).v[0]);
}

TEST_CASE("squared cosh of the hyperbolic distance") {
  DivisorClass H = D1() + D2() + D3();
  CHECK(squared_cosh(H, H) == Rational(1));
  CHECK_THROWS_AS(squared_cosh(H, D4()), std::domain_error);
}

TEST_CASE("reflections") {
  RationalMatrix R = reflection(D4());
  CHECK(R * R == to_rational(LatticeIsometry::identity()));
  std::array<Rational, 4> d4{Rational(0), Rational(0), Rational(0),
                             Rational(1)};
  auto image = R.apply(d4);
  CHECK(image[3] == Rational(-1));

  // the two sigma_4 survivors, recovered directly from their root vectors
  CHECK(reflection(dc(0, 1, -1, 0)).to_integer() == iso_U());
  CHECK(reflection(dc(-8, 1, 1, -4)).to_integer() == iso_T4() * iso_U());

  CHECK_THROWS_AS(reflection(dc(0, 0, 0, 0)), std::domain_error);
}

TEST_CASE("sigma_4 classification") {
  Sigma4Report rep = classify_sigma4_reflections();
  REQUIRE(rep.candidates.size() == 3);
  std::vector<std::int64_t> ks;
  for (auto& c : rep.candidates) {
    ks.push_back(c.k);
    CHECK(c.disc == -5 * c.k * c.k + 16);
    CHECK(c.disc_is_square == (c.k == 0));
  }
  CHECK(ks == std::vector<std::int64_t>{-1, 0, 1});
  REQUIRE(rep.reflection_names.size() == 2);
  CHECK(rep.reflection_names[0] == "U");
  CHECK(rep.reflection_names[1] == "T4*U");
  CHECK(rep.reflections[0] == iso_U());
  CHECK(rep.reflections[1] == iso_T4() * iso_U());
}

TEST_CASE("ambient divisor calculus") {
  AmbientClass B1p = ambient_surface(qconst(1), qconst(0), qconst(0));
  AmbientClass B2p = ambient_surface(qconst(0), qconst(1), qconst(0));
  AmbientClass B1 = ambient_curve(qconst(1), qconst(0), qconst(0));
  // B1'.B2' = B3
  AmbientClass p = surface_product(B1p, B2p);
  CHECK(p.pure_curve());
  CHECK(p.curve[2] == qconst(1));
  CHECK(surface_product(B1p, B1p).curve[0].zero_poly());
  // Bi.Bj' = delta_ij
  CHECK(curve_surface_pair(B1, B1p) == qconst(1));
  CHECK(curve_surface_pair(B1, B2p).zero_poly());
  CHECK_THROWS_AS(curve_surface_pair(B1, B1), std::domain_error);
  CHECK_THROWS_AS(surface_product(B1, B2p), std::domain_error);
}

TEST_CASE("the multisection pairing is 2 for every r") {
  for (int r = 0; r <= 10; ++r) {
    AmbientCheck chk = ambient_pairing_check(r);
    CHECK(chk.pairing == UniPoly<Rational>(Rational(2)));
    // [X].[Y] = 4B1 + (2r+2)B2 + (2r+2)B3
    CHECK(chk.XY.pure_curve());
    CHECK(chk.XY.curve[0] == qconst(4));
    CHECK(chk.XY.curve[1] == qconst(2 * r + 2));
    CHECK(chk.XY.curve[2] == qconst(2 * r + 2));
  }
}
