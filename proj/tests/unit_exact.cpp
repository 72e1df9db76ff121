#include <set>
#include <vector>

#include "doctest.h"
#include "k3/elimination.hpp"
#include "k3/factor.hpp"
#include "k3/fp.hpp"
#include "k3/numberfield.hpp"
#include "k3/rational.hpp"
#include "k3/unipoly.hpp"

using namespace k3;

namespace {

UniPoly<Rational> poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly<Rational>(std::move(c));
}

UniPoly<Fp> poly_mod(std::vector<long> coeffs, std::int64_t p) {
  std::vector<Fp> c;
  for (long v : coeffs) c.emplace_back(v, p);
  return UniPoly<Fp>(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and canonical text form") {
  CHECK(parse_rational("7/15") == Rational(7, 15));
  CHECK(parse_rational("-2198/841") == Rational(-2198, 841));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(inverse(Rational(0)), std::domain_error);
}

TEST_CASE("univariate polynomial ring operations") {
  auto f = poly({-1, 0, 1});  // x^2 - 1
  auto g = poly({1, 1});      // x + 1
  CHECK(f == poly({-1, 1}) * g);
  CHECK(f.eval(Rational(3)) == Rational(8));
  CHECK(f.derivative() == poly({0, 2}));

  auto [q, r] = divmod(poly({1, 2, 0, 5}), poly({3, 1}));
  CHECK(q * poly({3, 1}) + r == poly({1, 2, 0, 5}));
  CHECK(r.degree() < 1);

  CHECK(poly_gcd(f, g) == monic(g));
  auto e = poly_ext_gcd(poly({-1, 0, 1}), poly({2, 1}));
  CHECK(e.s * poly({-1, 0, 1}) + e.t * poly({2, 1}) == e.g);
  CHECK(e.g.degree() == 0);

  // squarefree part of (x+1)^2 (x-2)
  auto sq = poly({1, 1}) * poly({1, 1}) * poly({-2, 1});
  CHECK(squarefree_part(sq) == monic(poly({1, 1}) * poly({-2, 1})));

  CHECK_THROWS_AS(exact_div(poly({1, 1, 1}), poly({1, 1})), std::domain_error);
  CHECK(exact_div(f, g) == poly({-1, 1}));
}

TEST_CASE("resultants agree with the Sylvester determinant oracle") {
  // independent oracle: cofactor expansion of the Sylvester matrix
  auto cases = std::vector<std::pair<UniPoly<Rational>, UniPoly<Rational>>>{
      {poly({-1, 0, 1}), poly({2, 1})},
      {poly({1, 2, 3, 4}), poly({-5, 0, 1})},
      {poly({3, 0, 0, 1}), poly({1, 1, 1})},
  };
  for (const auto& [a, b] : cases) {
    Rational via_euclid = resultant(a, b);
    Rational via_det = det_cofactor(sylvester_matrix(a, b));
    CHECK(via_euclid == via_det);
  }
  // common root forces a zero resultant
  CHECK(resultant(poly({-1, 0, 1}), poly({-1, 1})) == Rational(0));
}

TEST_CASE("subresultant chain stays integral and finds the gcd") {
  auto a = poly({-5, 2, 8, -3, -3, 0, 1, 0, 1});
  auto b = poly({21, -9, -4, 0, 5, 0, 3});
  auto chain = subresultant_prs(a, b);
  for (const auto& c : chain)
    for (int i = 0; i <= c.degree(); ++i) CHECK(c[i].get_den() == 1);
  // coprime inputs: the chain ends in a nonzero constant
  CHECK(chain.back().degree() == 0);

  auto g = poly({1, 2, 3});
  auto chain2 = subresultant_prs(a * g, b * g);
  CHECK(monic(chain2.back()) == monic(g));
}

TEST_CASE("primitive part and exact ring division") {
  auto f = Rational(3, 4) * poly({2, 4, 6});
  CHECK(primitive_part(f) == poly({1, 2, 3}));
  CHECK(primitive_part(Rational(-1) * poly({1, 2})).lc() > 0);
  CHECK(ring_exact_div(Rational(3, 2), Rational(1, 2)) == Rational(3));
}

TEST_CASE("prime field arithmetic, exhaustive over F_13") {
  for (long a = 1; a < 13; ++a) {
    Fp x(a, 13);
    CHECK((x * inverse(x)).v == 1);
  }
  // quadratic residues by direct enumeration
  std::set<std::int64_t> squares;
  for (long a = 0; a < 13; ++a) squares.insert(a * a % 13);
  for (long a = 0; a < 13; ++a)
    CHECK(is_square_mod_p(Fp(a, 13)) == (squares.count(a) > 0));

  CHECK(lift_rational(Fp(0, 13), Rational(7, 15)).v == 10);  // 7 * 15^{-1} mod 13
  CHECK_THROWS_AS(lift_rational(Fp(0, 13), Rational(1, 13)), std::domain_error);
  CHECK_THROWS_AS(Fp::in_field(1, 15), std::domain_error);
  CHECK_THROWS_AS(Fp(1, 13) + Fp(1, 11), std::domain_error);
}

TEST_CASE("factorization over F_p reconstructs its input") {
  auto f = poly_mod({1, 0, 1}, 13) * poly_mod({3, 1}, 13) * poly_mod({3, 1}, 13);
  auto factors = factor_mod_p(f, 0);
  UniPoly<Fp> prod = UniPoly<Fp>::constant(Fp(1, 13));
  int total = 0;
  for (const auto& [fac, mult] : factors) {
    CHECK(fac.lc().v == 1);
    for (int i = 0; i < mult; ++i) prod = prod * fac;
    total += fac.degree() * mult;
  }
  CHECK(total == f.degree());
  CHECK(prod == monic(f));
  // determinism: same seed, same output
  auto again = factor_mod_p(f, 0);
  REQUIRE(again.size() == factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    CHECK(again[i].first == factors[i].first);
    CHECK(again[i].second == factors[i].second);
  }
}

TEST_CASE("degree patterns mod p") {
  // x^2 + 1 splits mod 13 (5^2 = -1) and is irreducible mod 11
  auto pat13 = degree_pattern(poly({1, 0, 1}), 13);
  CHECK(pat13.degrees_with_multiplicity() == std::vector<int>{1, 1});
  auto pat11 = degree_pattern(poly({1, 0, 1}), 11);
  CHECK(pat11.degrees_with_multiplicity() == std::vector<int>{2});
  CHECK(pat11.total_degree() == 2);
  CHECK_FALSE(pat11.has_degree(1));
  // bad reduction: leading coefficient divisible by p
  CHECK_THROWS_AS(reduce_mod_p(poly({1, 13}), 13), std::domain_error);
}

TEST_CASE("rational roots by divisor enumeration") {
  // (2x - 1)(x + 3)(3x + 2)
  auto f = poly({-1, 2}) * poly({3, 1}) * poly({2, 3});
  auto roots = rational_roots(f);
  std::set<Rational> expect{Rational(1, 2), Rational(-3), Rational(-2, 3)};
  CHECK(std::set<Rational>(roots.begin(), roots.end()) == expect);
  CHECK(rational_roots(poly({1, 0, 1})).empty());
}

TEST_CASE("irreducibility certification over Q") {
  auto r1 = certify_irreducible_over_Q(poly({1, 0, 1}), {3, 7});
  CHECK(r1.status == IrredStatus::Certified);

  auto r2 = certify_irreducible_over_Q(poly({-1, 0, 1}), {3, 5, 7});
  CHECK(r2.status == IrredStatus::Reducible);

  // x^4 + 1 factors modulo every prime; only the deg <= 4 fallback decides
  auto r3 = certify_irreducible_over_Q(poly({1, 0, 0, 0, 1}),
                                       {3, 5, 7, 11, 13, 17, 19});
  CHECK(r3.status == IrredStatus::Certified);
  CHECK(r3.used_fallback);

  // the cubic from the 2-torsion quartic
  auto r4 = certify_irreducible_over_Q(poly({-52, -32, -2, 1}), {3, 5, 7, 11, 13});
  CHECK(r4.status == IrredStatus::Certified);
}

TEST_CASE("small factorization over Q") {
  auto f = Rational(6) * poly({2, 1}) * poly({-1, 1}) * poly({1, 0, 1});
  auto fact = factor_deg_le4_over_Q(f);
  UniPoly<Rational> prod = UniPoly<Rational>::constant(fact.unit);
  for (const auto& [g, m] : fact.factors)
    for (int i = 0; i < m; ++i) prod = prod * g;
  CHECK(prod == f);
  CHECK(fact.factors.size() == 3);
}

TEST_CASE("number field arithmetic") {
  auto K = NumberField::create(poly({-2, 0, 1}));  // Q(sqrt 2)
  NFElem z = nf_generator(K);
  NFElem one = one_like(z);
  CHECK(z * z == from_int_like(z, 2));
  // 1/(1 + sqrt2) = sqrt2 - 1
  CHECK(inverse(one + z) == z - one);
  CHECK((one + z) * inverse(one + z) == one);
  CHECK_THROWS_AS(NumberField::create(poly({-1, 0, 1})), std::domain_error);
  CHECK_THROWS_AS(nf_inverse(zero_like(z)), std::domain_error);
}

TEST_CASE("polynomial-matrix determinant by interpolation") {
  // oracle: cofactor expansion over the ring Q[x]
  std::vector<std::vector<PolyX>> m = {
      {poly({1, 1}), poly({0, 0, 1}), poly({2})},
      {poly({-1, 2}), poly({3}), poly({1, 1, 1})},
      {poly({0, 1}), poly({5, -1}), poly({4, 0, 2})},
  };
  CHECK(det_polymat(m) == det_cofactor(m));
}

TEST_CASE("resultant_y matches the ring resultant on small inputs") {
  // a = y^2 + x, b = y - x  ->  Res_y = x^2 + x
  PolyXY a(std::vector<PolyX>{poly({0, 1}), poly({}), poly({1})});
  PolyXY b(std::vector<PolyX>{poly({0, -1}), poly({1})});
  CHECK(resultant_y(a, b) == poly({0, 1, 1}));
  CHECK(resultant_over_ring(a, b) == poly({0, 1, 1}));
}
