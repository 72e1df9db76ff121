#pragma once

#include <memory>
#include <vector>

#include "k3/factor.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// Q[t]/(modulus).  The modulus is stored monic; irreducibility over Q is
// certified once at construction and a reducible modulus is a hard error.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // `modulus` need not be monic; it is normalized.  `primes` seeds the
  // pattern-intersection certifier.
  static std::shared_ptr<const NumberField> create(
      const UniPoly<Rational>& modulus,
      const std::vector<std::int64_t>& primes = {2, 3, 5, 7, 11, 13, 17, 19,
                                                 23, 29, 31, 37, 41, 43, 47});

  const UniPoly<Rational>& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  const IrreducibilityReport& certificate() const { return certificate_; }

 private:
  NumberField(UniPoly<Rational> m, IrreducibilityReport cert)
      : modulus_(std::move(m)), certificate_(std::move(cert)) {}
  UniPoly<Rational> modulus_;
  IrreducibilityReport certificate_;
};

struct NFElem {
  UniPoly<Rational> rep;  // degree < field->degree()
  std::shared_ptr<const NumberField> field;

  NFElem() = default;
  NFElem(UniPoly<Rational> r, std::shared_ptr<const NumberField> f)
      : rep(std::move(r)), field(std::move(f)) {
    rep = rep % field->modulus();
  }

  std::vector<Rational> coefficients() const {
    std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
    for (int i = 0; i <= rep.degree(); ++i) c[static_cast<size_t>(i)] = rep[i];
    return c;
  }

  friend bool operator==(const NFElem& a, const NFElem& b) {
    return a.rep == b.rep;
  }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }
};

NFElem nf_generator(const std::shared_ptr<const NumberField>& f);
NFElem nf_from_rational(const std::shared_ptr<const NumberField>& f,
                        const Rational& q);
NFElem nf_inverse(const NFElem& e);

inline bool is_zero(const NFElem& a) { return a.rep.zero_poly(); }
inline NFElem zero_like(const NFElem& a) { return NFElem({}, a.field); }
inline NFElem one_like(const NFElem& a) {
  return NFElem(UniPoly<Rational>::constant(Rational(1)), a.field);
}
inline NFElem from_int_like(const NFElem& a, long n) {
  return NFElem(UniPoly<Rational>::constant(Rational(n)), a.field);
}
inline NFElem lift_rational(const NFElem& a, const Rational& q) {
  return NFElem(UniPoly<Rational>::constant(q), a.field);
}

inline NFElem operator+(const NFElem& a, const NFElem& b) {
  return NFElem(a.rep + b.rep, a.field);
}
inline NFElem operator-(const NFElem& a, const NFElem& b) {
  return NFElem(a.rep - b.rep, a.field);
}
inline NFElem operator-(const NFElem& a) { return NFElem(-a.rep, a.field); }
inline NFElem operator*(const NFElem& a, const NFElem& b) {
  return NFElem(a.rep * b.rep, a.field);
}
inline NFElem inverse(const NFElem& e) { return nf_inverse(e); }
inline NFElem operator/(const NFElem& a, const NFElem& b) {
  return a * nf_inverse(b);
}

inline std::string to_string(const NFElem& a) {
  return to_string(a.rep, "z");
}

template <>
inline NFElem ring_exact_div<NFElem>(const NFElem& a, const NFElem& b) {
  return a / b;
}

}  // namespace k3
