// Acceptance tests: every quantitative claim of Baragar-McKinnon section 3 is
// re-derived from the surface coefficients alone and compared against the
// values frozen below.  Nothing here reads data/.
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "k3/grouplaw.hpp"
#include "k3/lattice.hpp"
#include "k3/surface.hpp"

using namespace k3;

namespace {

UniPoly<Rational> qpoly(std::vector<std::string> asc) {
  std::vector<Rational> c;
  for (auto& s : asc) c.push_back(parse_rational(s));
  return UniPoly<Rational>(std::move(c));
}

MarkedFiber<Rational> marked_zero_fiber() {
  return MarkedFiber<Rational>(
      SurfaceForm::paper_surface().fiber_at<Rational>(Rational(0)),
      FiberPoint<Rational>::affine(Rational(0), Rational(0)));
}

const std::vector<std::int64_t> kPrimes{13, 11};

}  // namespace

TEST_CASE("A1: the triple-contact form at O and the auxiliary origin O'") {
  auto F = marked_zero_fiber();
  // z = y / (2y - 1)
  CHECK(F.triple_contact ==
        OneOneForm<Rational>::from_mobius(Rational(1), Rational(0),
                                          Rational(2), Rational(-1)));
  CHECK(F.O_prime ==
        FiberPoint<Rational>::affine(Rational(7, 15), Rational(-7)));
}

TEST_CASE("A2: the fourth intersection O' * O") {
  auto F = marked_zero_fiber();
  CHECK(star(F, F.O_prime, F.O) ==
        FiberPoint<Rational>::affine(Rational(-203, 92),
                                     Rational(-2198, 841)));
}

TEST_CASE("A3: the two-torsion quartic, its factorization, and the cubic's "
          "irreducibility") {
  auto F = marked_zero_fiber();
  UniPoly<Rational> tt = primitive_part(two_torsion_poly(F));
  CHECK(tt == qpoly({"-104", "-116", "-36", "0", "1"}));

  auto fact = factor_deg_le4_over_Q(tt);
  REQUIRE(fact.factors.size() == 2);
  CHECK(fact.factors[0].first == qpoly({"2", "1"}));
  CHECK(fact.factors[0].second == 1);
  UniPoly<Rational> cubic = qpoly({"-52", "-32", "-2", "1"});
  CHECK(fact.factors[1].first == cubic);
  CHECK(fact.factors[1].second == 1);

  auto cert = certify_irreducible_over_Q(cubic, kPrimes);
  CHECK(cert.status == IrredStatus::Certified);
}

TEST_CASE("A4: halving P = O' * O, with the doubling check authoritative") {
  auto F = marked_zero_fiber();
  FiberPoint<Rational> P = star(F, F.O_prime, F.O);
  // halve() throws unless every branch survives 2Q = P in its number field,
  // so reaching the checks below already certifies the doubling identity.
  HalveResult res = halve(F, P);
  CHECK(primitive_part(res.h) ==
        qpoly({"67147", "57990", "19212", "2842", "157"}));

  bool found_quartic = false;
  for (const auto& b : res.branches) {
    if (b.min_poly.degree() != 4) continue;
    found_quartic = true;
    REQUIRE(!b.Q.inf_y);
    REQUIRE(!b.Q.inf_z);
    CHECK(b.Q.y.rep == qpoly({"12302005/213049", "16345885/426098",
                              "1896629/213049", "1873/2714"}));
    CHECK(b.Q.z.rep == qpoly({"-1758/157", "-1421/314", "-1/2"}));
  }
  CHECK(found_quartic);

  // a genuinely unsolvable request fails with the distinct verification
  // error, not a wrong answer
  // (halving an off-chart point is rejected before any computation)
  FiberPoint<Rational> inf;
  inf.inf_y = true;
  CHECK_THROWS_AS(halve(F, inf), std::domain_error);
}

TEST_CASE("A5: the singular-fiber polynomial g and its certificates") {
  SingularFiberReport rep = singular_locus(SurfaceForm::paper_surface(),
                                           kPrimes, /*seed=*/0);
  UniPoly<Rational> g_expected = qpoly(
      {"37",        "552",       "2880",      "8968",      "12094",
       "-29532",    "-259361",   "-990166",   "-2821295",  "-6575882",
       "-13353997", "-24079737", "-39073771", "-57102414", "-74256423",
       "-85116723", "-84136244", "-70261318", "-48317066", "-25949232",
       "-10463410", "-2815866",  "-385151",   "-220133",   "14724"});
  CHECK(rep.g.degree() == 24);
  CHECK(rep.g == g_expected);

  // x = 7 is a root of g mod 13
  UniPoly<Fp> g13 = reduce_mod_p(rep.g, 13);
  CHECK(is_zero(g13.eval(Fp(7, 13))));

  bool saw13 = false, saw11 = false;
  for (const auto& pat : rep.patterns) {
    if (pat.p == 13) {
      saw13 = true;
      CHECK(pat.parts ==
            std::multiset<std::pair<int, int>>{{1, 1}, {23, 1}});
    }
    if (pat.p == 11) {
      saw11 = true;
      CHECK(!pat.has_degree(1));  // no rational singular fiber survives mod 11
    }
    CHECK(pat.total_degree() == 24);
  }
  CHECK(saw13);
  CHECK(saw11);

  REQUIRE(rep.irreducibility.has_value());
  CHECK(rep.irreducibility->status == IrredStatus::Certified);
}

TEST_CASE("A6: the mod-13 witness is a node") {
  SurfaceForm X = SurfaceForm::paper_surface();
  NodalityCertificate cert =
      certify_node_mod_p(X, Fp(7, 13), Fp(9, 13), Fp(5, 13));
  CHECK(cert.p == 13);
  CHECK(cert.x0 == 7);
  CHECK(cert.y0 == 9);
  CHECK(cert.z0 == 5);
  // quadratic part of the translated fiber: 8y^2 + 2yz + 6z^2
  CHECK(cert.A == 8);
  CHECK(cert.B == 2);
  CHECK(cert.C == 6);
  CHECK(cert.discriminant == 7);
  CHECK(!cert.discriminant_is_square);
  CHECK(cert.kind == Nodality::Node);
  CHECK(classify_point_mod_p(X, Fp(7, 13), Fp(9, 13), Fp(5, 13)) ==
        Nodality::Node);
}

TEST_CASE("A7: the lattice isometries and the orbit of D4") {
  for (const LatticeIsometry* g :
       {&iso_U(), &iso_T1(), &iso_T2(), &iso_T3(), &iso_T4()})
    CHECK(g->preserves_form());
  CHECK(iso_U().apply(D4()) == D4());
  CHECK((iso_T4() * iso_T3() * iso_T4() * iso_T2()).apply(D1()) == D1());

  for (int m = 0; m <= 4; ++m) {
    DivisorClass c = cm_class(m);
    CHECK(pair(c, c) == Integer(-2));
    CHECK(pair(c, D1()) == Integer(1));
  }

  // T3 = U T2 U is redundant as a generator, so the word metric is taken
  // over {U, T1, T2, T4}
  std::vector<LatticeIsometry> gens{iso_U(), iso_T1(), iso_T2(), iso_T4()};
  auto orbit = orbit_of_D4(gens, 6);
  CHECK(orbit.size() == 83);
  for (const auto& d : orbit) CHECK(pair(d, d) == Integer(-2));
  CHECK(std::binary_search(orbit.begin(), orbit.end(), D2() - D4()));
}

TEST_CASE("A8: the sigma_4 reflections are exactly U and T4 U") {
  Sigma4Report rep = classify_sigma4_reflections();
  std::vector<std::int64_t> ks;
  for (auto& c : rep.candidates) ks.push_back(c.k);
  CHECK(ks == std::vector<std::int64_t>{-1, 0, 1});
  for (auto& c : rep.candidates) CHECK(c.disc_is_square == (c.k == 0));
  CHECK(rep.reflection_names == std::vector<std::string>{"U", "T4*U"});
  CHECK(rep.reflections[0] == iso_U());
  CHECK(rep.reflections[1] == iso_T4() * iso_U());
  // both survivors really are reflections: involutive isometries
  for (const auto& R : rep.reflections) {
    CHECK(R.preserves_form());
    CHECK(R * R == LatticeIsometry::identity());
  }
}

TEST_CASE("A9: the ambient multisection pairing is 2 for r = 0..10") {
  for (int r = 0; r <= 10; ++r) {
    AmbientCheck chk = ambient_pairing_check(r);
    CHECK(chk.pairing == UniPoly<Rational>(Rational(2)));
    // the t-dependence of [L] is genuinely present and cancels in the pairing
    CHECK(chk.M.curve[1].degree() == 1);
    CHECK(chk.M.curve[2].degree() == 1);
  }
}

TEST_CASE("A10: exhaustive group-law audit on the fiber x = 0 over F_13") {
  SurfaceForm X = SurfaceForm::paper_surface();
  auto E = X.fiber_at<Fp>(Fp(0, 13));
  FiberPoint<Fp> O = FiberPoint<Fp>::affine(Fp(0, 13), Fp(0, 13));
  MarkedFiber<Fp> F(E, O);

  // enumerate every point of the fiber, including the infinity charts
  std::vector<FiberPoint<Fp>> pts;
  for (std::int64_t y = 0; y < 13; ++y)
    for (std::int64_t z = 0; z < 13; ++z) {
      auto p = FiberPoint<Fp>::affine(Fp(y, 13), Fp(z, 13));
      if (E.contains(p)) pts.push_back(p);
    }
  for (std::int64_t z = 0; z < 13; ++z) {
    FiberPoint<Fp> p;
    p.inf_y = true;
    p.y = Fp(0, 13);
    p.z = Fp(z, 13);
    if (E.contains(p)) pts.push_back(p);
  }
  for (std::int64_t y = 0; y < 13; ++y) {
    FiberPoint<Fp> p;
    p.inf_z = true;
    p.y = Fp(y, 13);
    p.z = Fp(0, 13);
    if (E.contains(p)) pts.push_back(p);
  }
  {
    FiberPoint<Fp> p;
    p.inf_y = p.inf_z = true;
    p.y = p.z = Fp(0, 13);
    if (E.contains(p)) pts.push_back(p);
  }
  REQUIRE(pts.size() >= 8);
  INFO("fiber has " << pts.size() << " points over F_13");

  // star is symmetric and involutive wherever it is defined; some
  // configurations at infinity fall outside the supported charts and are
  // rejected with an error rather than a wrong value — those are skipped.
  int star_checked = 0;
  for (const auto& A : pts)
    for (const auto& B : pts) {
      FiberPoint<Fp> C;
      try {
        C = star(F, A, B);
      } catch (const std::domain_error&) {
        continue;
      }
      CHECK(E.contains(C));
      CHECK(star(F, B, A) == C);
      try {
        FiberPoint<Fp> back = star(F, A, C);
        CHECK(back == B);
        ++star_checked;
      } catch (const std::domain_error&) {
      }
    }
  CHECK(star_checked > 0);

  // group axioms for + with identity O
  auto try_add = [&](const FiberPoint<Fp>& A, const FiberPoint<Fp>& B,
                     FiberPoint<Fp>& out) {
    try {
      out = add(F, A, B);
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  };
  int assoc_checked = 0, inverses_checked = 0;
  for (const auto& A : pts) {
    FiberPoint<Fp> t;
    if (try_add(A, O, t)) CHECK(t == A);  // identity
    try {
      FiberPoint<Fp> s = add(F, A, neg(F, A));  // inverses
      CHECK(s == O);
      ++inverses_checked;
    } catch (const std::domain_error&) {
    }
    for (const auto& B : pts) {
      FiberPoint<Fp> ab, ba;
      if (try_add(A, B, ab) && try_add(B, A, ba)) CHECK(ab == ba);
      for (const auto& C : pts) {
        FiberPoint<Fp> bc, l, r;
        if (try_add(A, B, ab) && try_add(B, C, bc) && try_add(ab, C, l) &&
            try_add(A, bc, r)) {
          CHECK(l == r);
          ++assoc_checked;
        }
      }
    }
  }
  CHECK(assoc_checked > 0);
  CHECK(inverses_checked > 0);

  // every root of the two-torsion polynomial mod 13 yields a point that
  // doubles to O
  auto pd = detail::pencil_discriminant(F.curve, F.O_prime, F.O);
  int torsion_roots = 0;
  for (std::int64_t t0 = 0; t0 < 13; ++t0) {
    Fp t(t0, 13);
    if (!is_zero(pd.h.eval(t))) continue;
    ++torsion_roots;
    Fp A = pd.A.eval(t), B = pd.B.eval(t);
    REQUIRE(!is_zero(A));
    Fp yq = -(B / (Fp(2, 13) * A));
    Fp den = t * yq + Fp(1, 13);
    REQUIRE(!is_zero(den));
    Fp zq = -((pd.pencil.beta.eval(t) * yq + pd.pencil.delta.eval(t)) / den);
    FiberPoint<Fp> T = FiberPoint<Fp>::affine(yq, zq);
    REQUIRE(E.contains(T));
    CHECK(double_point(F, T) == O);
  }
  CHECK(torsion_roots > 0);

  // the three deck involutions really are involutions on surface points
  std::array<Fp, 3> pt0{Fp(0, 13), Fp(5, 13), Fp(1, 13)};
  REQUIRE(is_zero(X.eval(pt0[0], pt0[1], pt0[2])));
  for (int axis = 1; axis <= 3; ++axis) {
    auto q = X.deck_transform(axis, pt0);
    CHECK(is_zero(X.eval(q[0], q[1], q[2])));
    CHECK(X.deck_transform(axis, q) == pt0);
  }
}
