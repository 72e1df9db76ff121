#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "k3/fp.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

template <>
inline Fp ring_exact_div<Fp>(const Fp& a, const Fp& b) {
  return a / b;
}

// Multiset of (degree, multiplicity) of the irreducible factors of some
// polynomial modulo p.
struct FactorPattern {
  std::int64_t p = 0;
  std::multiset<std::pair<int, int>> parts;  // (degree, multiplicity)

  int total_degree() const {
    int n = 0;
    for (auto& [d, m] : parts) n += d * m;
    return n;
  }
  std::vector<int> degrees_with_multiplicity() const {
    std::vector<int> out;
    for (auto& [d, m] : parts)
      for (int i = 0; i < m; ++i) out.push_back(d);
    return out;
  }
  bool has_degree(int d) const {
    for (auto& [deg, m] : parts)
      if (deg == d) return true;
    return false;
  }
};

// Complete factorization over F_p: squarefree decomposition, distinct-degree
// split, then randomized equal-degree (Cantor-Zassenhaus) splitting.  The
// seed makes runs reproducible.
std::vector<std::pair<UniPoly<Fp>, int>> factor_mod_p(const UniPoly<Fp>& f,
                                                      std::uint64_t seed = 0);

// Reduction of a rational polynomial mod p; throws on bad reduction (leading
// numerator or any denominator divisible by p).
UniPoly<Fp> reduce_mod_p(const UniPoly<Rational>& f, std::int64_t p);

FactorPattern degree_pattern(const UniPoly<Rational>& f, std::int64_t p,
                             std::uint64_t seed = 0);

// All rational roots with multiplicity, by divisor enumeration on the
// primitive integer model.
std::vector<Rational> rational_roots(const UniPoly<Rational>& f);

enum class IrredStatus { Certified, Reducible, Inconclusive };

struct IrreducibilityReport {
  IrredStatus status = IrredStatus::Inconclusive;
  std::vector<std::int64_t> primes_used;
  // Surviving candidate factor-degree multisets after pattern intersection.
  std::vector<std::vector<int>> candidates;
  bool used_fallback = false;
  // Populated when the fallback found a factor.
  std::optional<UniPoly<Rational>> witness_factor;
};

// Pattern-intersection irreducibility certificate, with an exhaustive
// bounded factor search fallback for degree <= 4.
IrreducibilityReport certify_irreducible_over_Q(
    const UniPoly<Rational>& f, const std::vector<std::int64_t>& primes);

// Full factorization over Q for degree <= 4 (rational roots plus quadratic
// factor search).  Returns monic-primitive irreducible factors paired with
// multiplicities; the product times the stated unit reconstructs f.
struct SmallFactorization {
  Rational unit;
  std::vector<std::pair<UniPoly<Rational>, int>> factors;  // primitive, irred
};
SmallFactorization factor_deg_le4_over_Q(const UniPoly<Rational>& f);

}  // namespace k3
