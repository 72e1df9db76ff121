#include "k3/numberfield.hpp"

#include <stdexcept>

namespace k3 {

std::shared_ptr<const NumberField> NumberField::create(
    const UniPoly<Rational>& modulus, const std::vector<std::int64_t>& primes) {
  if (modulus.degree() < 1)
    throw std::domain_error("number field modulus must be nonconstant");
  UniPoly<Rational> m = monic(modulus);
  IrreducibilityReport cert;
  if (m.degree() == 1) {
    // Q itself; trivially fine, no certificate needed beyond the obvious.
    cert.status = IrredStatus::Certified;
  } else {
    cert = certify_irreducible_over_Q(primitive_part(m), primes);
    if (cert.status == IrredStatus::Reducible)
      throw std::domain_error("number field modulus is reducible over Q");
    if (cert.status == IrredStatus::Inconclusive)
      throw std::domain_error(
          "cannot certify irreducibility of the number field modulus");
  }
  return std::shared_ptr<const NumberField>(
      new NumberField(std::move(m), std::move(cert)));
}

NFElem nf_generator(const std::shared_ptr<const NumberField>& f) {
  return NFElem(UniPoly<Rational>::linear(Rational(0), Rational(1)), f);
}

NFElem nf_from_rational(const std::shared_ptr<const NumberField>& f,
                        const Rational& q) {
  return NFElem(UniPoly<Rational>::constant(q), f);
}

NFElem nf_inverse(const NFElem& e) {
  if (is_zero(e)) throw std::domain_error("division by zero in number field");
  auto ext = poly_ext_gcd(e.rep, e.field->modulus());
  if (ext.g.degree() != 0)
    throw std::domain_error(
        "non-invertible element: number field invariant is broken");
  // g is monic constant 1, so s * rep = 1 mod modulus
  return NFElem(ext.s, e.field);
}

}  // namespace k3
