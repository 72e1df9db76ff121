#include "k3/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace k3 {

namespace {

UniPoly<Fp> powmod(const UniPoly<Fp>& base, const Integer& e,
                   const UniPoly<Fp>& mod) {
  UniPoly<Fp> result = UniPoly<Fp>::constant(one_like(mod.lc()));
  UniPoly<Fp> b = base % mod;
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1;
       bit >= 0; --bit) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)))
      result = (result * b) % mod;
  }
  return result;
}

UniPoly<Fp> x_poly(const Fp& exemplar) {
  return UniPoly<Fp>::linear(zero_like(exemplar), one_like(exemplar));
}

// f is monic squarefree, all irreducible factors of degree d: split it
// completely with Cantor-Zassenhaus.
void equal_degree_split(const UniPoly<Fp>& f, int d, std::mt19937_64& rng,
                        std::vector<UniPoly<Fp>>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::int64_t p = f.lc().p;
  Integer e = Integer(p);
  mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    // random polynomial of degree < deg f
    std::vector<Fp> rc;
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    for (int i = 0; i < f.degree(); ++i) rc.emplace_back(dist(rng), p);
    UniPoly<Fp> r(std::move(rc));
    if (r.zero_poly() || r.degree() == 0) continue;
    UniPoly<Fp> g = poly_gcd(r, f);
    if (g.degree() == 0) {
      g = powmod(r, e, f) - UniPoly<Fp>::constant(one_like(f.lc()));
      g = poly_gcd(g, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<UniPoly<Fp>, int>> factor_mod_p(const UniPoly<Fp>& f,
                                                      std::uint64_t seed) {
  if (f.zero_poly())
    throw std::domain_error("factorization of the zero polynomial");
  const std::int64_t p = f.lc().p;
  if (!is_prime(p)) throw std::domain_error("modulus is not prime");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<UniPoly<Fp>, int>> result;

  UniPoly<Fp> rest = monic(f);
  int power_of_p = 1;  // multiplicity scale while peeling p-th powers
  while (rest.degree() > 0) {
    UniPoly<Fp> der = rest.derivative();
    if (der.zero_poly()) {
      // rest is a polynomial in x^p; take the p-th root and recurse
      std::vector<Fp> root_coeffs;
      for (int i = 0; i <= rest.degree(); i += static_cast<int>(p))
        root_coeffs.push_back(rest[i]);
      rest = UniPoly<Fp>(std::move(root_coeffs));
      power_of_p *= static_cast<int>(p);
      continue;
    }
    UniPoly<Fp> sqf = exact_div(rest, poly_gcd(rest, der));
    // distinct-degree factorization of the squarefree part
    UniPoly<Fp> w = sqf;
    UniPoly<Fp> frob = x_poly(f.lc()) % w;  // becomes x^(p^d) mod w
    for (int d = 1; w.degree() > 0 && 2 * d <= w.degree(); ++d) {
      frob = powmod(frob, Integer(p), w);
      UniPoly<Fp> g = poly_gcd(frob - x_poly(f.lc()), w);
      if (g.degree() > 0) {
        std::mt19937_64 branch_rng(seed ^ (0x9e3779b97f4a7c15ULL * d));
        std::vector<UniPoly<Fp>> irr;
        equal_degree_split(g, d, branch_rng, irr);
        for (auto& h : irr) {
          int mult = 0;
          while (true) {
            auto [q, r] = divmod(rest, h);
            if (!r.zero_poly()) break;
            rest = q;
            ++mult;
          }
          result.emplace_back(monic(h), mult * power_of_p);
        }
        w = exact_div(w, g);
        frob = frob % w;
      }
    }
    if (w.degree() > 0) {
      UniPoly<Fp> h = monic(w);
      int mult = 0;
      while (true) {
        auto [q, r] = divmod(rest, h);
        if (!r.zero_poly()) break;
        rest = q;
        ++mult;
      }
      result.emplace_back(h, mult * power_of_p);
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              for (int i = a.first.degree(); i >= 0; --i) {
                if (a.first[i].v != b.first[i].v)
                  return a.first[i].v < b.first[i].v;
              }
              return false;
            });
  return result;
}

UniPoly<Fp> reduce_mod_p(const UniPoly<Rational>& f, std::int64_t p) {
  if (f.zero_poly()) throw std::domain_error("reduction of zero polynomial");
  if (!is_prime(p)) throw std::domain_error("modulus is not prime");
  for (int i = 0; i <= f.degree(); ++i)
    if (mpz_divisible_ui_p(f[i].get_den().get_mpz_t(),
                           static_cast<unsigned long>(p)))
      throw std::domain_error("bad reduction prime: denominator vanishes");
  if (mpz_divisible_ui_p(f.lc().get_num().get_mpz_t(),
                         static_cast<unsigned long>(p)))
    throw std::domain_error("bad reduction prime: leading coefficient vanishes");
  std::vector<Fp> c;
  Fp ex(0, p);
  for (int i = 0; i <= f.degree(); ++i) c.push_back(lift_rational(ex, f[i]));
  return UniPoly<Fp>(std::move(c));
}

FactorPattern degree_pattern(const UniPoly<Rational>& f, std::int64_t p,
                             std::uint64_t seed) {
  UniPoly<Fp> fp = reduce_mod_p(f, p);
  FactorPattern pat;
  pat.p = p;
  for (auto& [g, m] : factor_mod_p(fp, seed)) pat.parts.insert({g.degree(), m});
  return pat;
}

std::vector<Rational> rational_roots(const UniPoly<Rational>& f) {
  if (f.zero_poly()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Rational> roots;
  UniPoly<Rational> g = primitive_part(f);
  // peel off roots at zero
  while (!g.zero_poly() && g.degree() >= 1 && is_zero(g[0])) {
    roots.emplace_back(0);
    g = exact_div(g, UniPoly<Rational>::linear(Rational(0), Rational(1)));
  }
  if (g.degree() < 1) return roots;

  auto divisors = [](const Integer& n) {
    std::vector<Integer> divs;
    Integer a = abs(n);
    for (Integer d = 1; d * d <= a; ++d) {
      if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
        divs.push_back(d);
        divs.push_back(a / d);
      }
    }
    return divs;
  };
  Integer lead = g.lc().get_num();
  Integer trail = g[0].get_num();
  std::set<Rational> candidates;
  for (const Integer& num : divisors(trail))
    for (const Integer& den : divisors(lead)) {
      Rational r(num, den);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  std::vector<Rational> found;
  for (const Rational& r : candidates) {
    while (is_zero(g.eval(r))) {
      found.push_back(r);
      g = exact_div(
          g, UniPoly<Rational>::linear(-r, Rational(1)));
      if (g.degree() < 1) break;
    }
    if (g.degree() < 1) break;
  }
  std::sort(found.begin(), found.end());
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Subset sums (with multiplicity) of a mod-p degree pattern: the possible
// degrees of a rational factor.
std::set<int> possible_factor_degrees(const FactorPattern& pat) {
  std::set<int> sums{0};
  for (auto& [d, m] : pat.parts)
    for (int i = 0; i < m; ++i) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + d);
      sums = std::move(next);
    }
  return sums;
}

void partitions_into(int n, int min_part, const std::set<int>& allowed,
                     std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part : allowed) {
    if (part < min_part || part > n) continue;
    cur.push_back(part);
    partitions_into(n - part, part, allowed, cur, out);
    cur.pop_back();
  }
}

}  // namespace

IrreducibilityReport certify_irreducible_over_Q(
    const UniPoly<Rational>& f, const std::vector<std::int64_t>& primes) {
  if (f.degree() < 1)
    throw std::domain_error("irreducibility of a constant polynomial");
  if (primes.empty()) throw std::domain_error("empty prime list");
  {
    UniPoly<Rational> d = f.derivative();
    if (poly_gcd(f, d).degree() > 0)
      throw std::domain_error("certify_irreducible requires squarefree input");
  }
  IrreducibilityReport rep;
  const int n = f.degree();
  std::set<int> surviving;
  bool have = false;
  for (std::int64_t p : primes) {
    FactorPattern pat;
    try {
      pat = degree_pattern(f, p);
    } catch (const std::domain_error&) {
      continue;  // bad reduction prime, skip
    }
    if (pat.total_degree() != n) continue;  // pattern unusable (shouldn't happen)
    rep.primes_used.push_back(p);
    std::set<int> degs = possible_factor_degrees(pat);
    if (!have) {
      surviving = std::move(degs);
      have = true;
    } else {
      std::set<int> inter;
      std::set_intersection(surviving.begin(), surviving.end(), degs.begin(),
                            degs.end(), std::inserter(inter, inter.begin()));
      surviving = std::move(inter);
    }
  }
  if (!have) throw std::domain_error("no usable reduction prime");

  std::vector<int> cur;
  std::set<int> parts = surviving;
  parts.erase(0);
  partitions_into(n, 1, parts, cur, rep.candidates);

  if (rep.candidates.size() == 1 && rep.candidates[0] == std::vector<int>{n}) {
    rep.status = IrredStatus::Certified;
    return rep;
  }
  if (n <= 4) {
    rep.used_fallback = true;
    SmallFactorization sf = factor_deg_le4_over_Q(f);
    if (sf.factors.size() == 1 && sf.factors[0].second == 1) {
      rep.status = IrredStatus::Certified;
    } else {
      rep.status = IrredStatus::Reducible;
      rep.witness_factor = sf.factors.front().first;
    }
    return rep;
  }
  rep.status = IrredStatus::Inconclusive;
  return rep;
}

namespace {

std::vector<Integer> signed_divisors(const Integer& n) {
  std::vector<Integer> divs;
  Integer a = abs(n);
  for (Integer d = 1; d * d <= a; ++d) {
    if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
      divs.push_back(d);
      divs.push_back(-d);
      if (d * d != a) {
        divs.push_back(a / d);
        divs.push_back(-(a / d));
      }
    }
  }
  return divs;
}

// Kronecker search for a quadratic factor of a primitive integer quartic
// with no rational roots.  A degree-2 integer factor q satisfies
// q(j) | f(j) for integer j, so interpolate candidates through divisor
// triples at three points where f does not vanish.
std::optional<UniPoly<Rational>> quadratic_factor(
    const UniPoly<Rational>& f) {
  std::vector<long> pts;
  for (long j = 0; pts.size() < 3; j = (j > 0 ? -j : -j + 1))
    if (!is_zero(f.eval(Rational(j)))) pts.push_back(j);
  Integer v0 = f.eval(Rational(pts[0])).get_num();
  Integer v1 = f.eval(Rational(pts[1])).get_num();
  Integer v2 = f.eval(Rational(pts[2])).get_num();
  Rational x0(pts[0]), x1(pts[1]), x2(pts[2]);
  for (const Integer& d0 : signed_divisors(v0))
    for (const Integer& d1 : signed_divisors(v1))
      for (const Integer& d2 : signed_divisors(v2)) {
        // Lagrange through (x0,d0),(x1,d1),(x2,d2)
        Rational y0(d0), y1(d1), y2(d2);
        Rational a = y0 / ((x0 - x1) * (x0 - x2)) +
                     y1 / ((x1 - x0) * (x1 - x2)) +
                     y2 / ((x2 - x0) * (x2 - x1));
        if (is_zero(a)) continue;
        Rational b = -y0 * (x1 + x2) / ((x0 - x1) * (x0 - x2)) -
                     y1 * (x0 + x2) / ((x1 - x0) * (x1 - x2)) -
                     y2 * (x0 + x1) / ((x2 - x0) * (x2 - x1));
        Rational c = y0 * x1 * x2 / ((x0 - x1) * (x0 - x2)) +
                     y1 * x0 * x2 / ((x1 - x0) * (x1 - x2)) +
                     y2 * x0 * x1 / ((x2 - x0) * (x2 - x1));
        UniPoly<Rational> q(std::vector<Rational>{c, b, a});
        if (q.degree() != 2) continue;
        auto [quo, rem] = divmod(f, q);
        if (rem.zero_poly()) return primitive_part(q);
      }
  return std::nullopt;
}

}  // namespace

SmallFactorization factor_deg_le4_over_Q(const UniPoly<Rational>& f) {
  if (f.zero_poly() || f.degree() > 4)
    throw std::domain_error("factor_deg_le4_over_Q needs degree 1..4");
  SmallFactorization out;
  UniPoly<Rational> g = primitive_part(f);
  out.unit = f.lc() / g.lc();

  std::map<Rational, int> root_mult;
  for (const Rational& r : rational_roots(g)) root_mult[r]++;
  for (auto& [r, m] : root_mult) {
    UniPoly<Rational> lin =
        primitive_part(UniPoly<Rational>::linear(-r, Rational(1)));
    for (int i = 0; i < m; ++i) g = exact_div(g, lin);
    out.factors.emplace_back(lin, m);
  }
  // whatever is left has no rational roots
  if (g.degree() == 4) {
    if (auto q = quadratic_factor(g)) {
      UniPoly<Rational> other = primitive_part(exact_div(g, *q));
      if (*q == other) {
        out.factors.emplace_back(*q, 2);
      } else {
        out.factors.emplace_back(*q, 1);
        out.factors.emplace_back(other, 1);
      }
      g = UniPoly<Rational>::constant(g.lc() / (q->lc() * other.lc()));
    }
  }
  if (g.degree() >= 1) {
    UniPoly<Rational> rest = primitive_part(g);
    out.factors.emplace_back(rest, 1);
    g = UniPoly<Rational>::constant(g.lc() / rest.lc());
  }
  // recompute the exact unit from the product
  UniPoly<Rational> prod = UniPoly<Rational>::constant(Rational(1));
  for (auto& [fac, m] : out.factors)
    for (int i = 0; i < m; ++i) prod = prod * fac;
  out.unit = f.lc() / prod.lc();
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              for (int i = a.first.degree(); i >= 0; --i)
                if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
              return false;
            });
  return out;
}

}  // namespace k3
