#include "k3/grouplaw.hpp"

#include <algorithm>

namespace k3 {

namespace {

NFElem nf_eval(const UniPoly<Rational>& f, const NFElem& zeta) {
  NFElem acc = zero_like(zeta);
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * zeta + lift_rational(zeta, f[i]);
  return acc;
}

FiberPoint<NFElem> lift_point(const FiberPoint<Rational>& p,
                              const NFElem& exemplar) {
  FiberPoint<NFElem> q;
  q.y = lift_rational(exemplar, p.y);
  q.z = lift_rational(exemplar, p.z);
  q.inf_y = p.inf_y;
  q.inf_z = p.inf_z;
  return q;
}

bool poly_less(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

HalveResult halve(const MarkedFiber<Rational>& F,
                  const FiberPoint<Rational>& P) {
  if (P.inf_y || P.inf_z)
    throw std::domain_error("halve needs an affine point");
  FiberPoint<Rational> R = star(F, P, F.O);
  auto pd = detail::pencil_discriminant(F.curve, F.O_prime, R);

  HalveResult out;
  out.h = pd.h;
  auto factorization = factor_deg_le4_over_Q(pd.h);
  for (auto& [factor, mult] : factorization.factors) {
    auto field = NumberField::create(factor);
    NFElem zeta = nf_generator(field);
    NFElem A = nf_eval(pd.A, zeta);
    NFElem B = nf_eval(pd.B, zeta);
    if (is_zero(A))
      throw std::domain_error(
          "halving branch degenerates: the doubled root escapes the affine "
          "chart");
    NFElem two = from_int_like(zeta, 2);
    NFElem yq = -(B / (two * A));
    NFElem beta = nf_eval(pd.pencil.beta, zeta);
    NFElem delta = nf_eval(pd.pencil.delta, zeta);
    NFElem den = zeta * yq + one_like(zeta);
    FiberPoint<NFElem> Q;
    if (!is_zero(den)) {
      Q = FiberPoint<NFElem>::affine(yq, -((beta * yq + delta) / den));
    } else {
      Q.y = yq;
      Q.z = zero_like(zeta);
      Q.inf_z = true;
    }

    // rebuild the fiber over the number field and verify 2Q = P there
    std::array<std::array<NFElem, 3>, 3> cnf;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        cnf[static_cast<size_t>(j)][static_cast<size_t>(k)] =
            lift_rational(zeta, F.curve.coeff(j, k));
    MarkedFiber<NFElem> Fnf(BiquadraticCurve<NFElem>(std::move(cnf)),
                            lift_point(F.O, zeta));
    if (!(double_point(Fnf, Q) == lift_point(P, zeta)))
      throw std::domain_error(
          "halving verification failed: doubling the candidate does not "
          "return the input point");
    out.branches.push_back({field->modulus(), field, Q});
  }
  std::sort(out.branches.begin(), out.branches.end(),
            [](const HalveBranch& a, const HalveBranch& b) {
              return poly_less(a.min_poly, b.min_poly);
            });
  return out;
}

}  // namespace k3
