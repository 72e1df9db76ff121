#include "k3/surface.hpp"

#include <stdexcept>

#include "k3/elimination.hpp"

namespace k3 {

SurfaceForm::SurfaceForm(
    std::array<std::array<std::array<Rational, 3>, 3>, 3> c)
    : c_(std::move(c)) {
  bool nonzero = false;
  for (auto& plane : c_)
    for (auto& row : plane)
      for (auto& v : row) nonzero = nonzero || !is_zero(v);
  if (!nonzero) throw std::domain_error("identically zero surface form");
}

MultiPoly SurfaceForm::as_multipoly() const {
  MultiPoly f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) f.set(i, j, k, coeff(i, j, k));
  return f;
}

SurfaceForm SurfaceForm::paper_surface() {
  std::array<std::array<std::array<Rational, 3>, 3>, 3> c{};
  auto set = [&](int i, int j, int k, long v) {
    c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
        Rational(v);
  };
  // x^2 (y^2 + 2yz^2 + yz + z^2 + 2y + 3z)
  set(2, 2, 0, 1);
  set(2, 1, 2, 2);
  set(2, 1, 1, 1);
  set(2, 0, 2, 1);
  set(2, 1, 0, 2);
  set(2, 0, 1, 3);
  // x (y^2 z^2 + 3 y^2 z + 2 y^2 + z)
  set(1, 2, 2, 1);
  set(1, 2, 1, 3);
  set(1, 2, 0, 2);
  set(1, 0, 1, 1);
  // y^2 z^2 + 3 y^2 z + 2 y^2 + y + z
  set(0, 2, 2, 1);
  set(0, 2, 1, 3);
  set(0, 2, 0, 2);
  set(0, 1, 0, 1);
  set(0, 0, 1, 1);
  return SurfaceForm(c);
}

bool SurfaceForm::line_on_surface_check() const {
  for (int i = 0; i < 3; ++i)
    if (!is_zero(coeff(i, 0, 0))) return false;
  return true;
}

SurfaceForm SurfaceForm::flip_x_chart() const {
  std::array<std::array<std::array<Rational, 3>, 3>, 3> c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        c[static_cast<size_t>(2 - i)][static_cast<size_t>(j)]
         [static_cast<size_t>(k)] = coeff(i, j, k);
  return SurfaceForm(c);
}

namespace {

// gcd over Q[x] via the primitive PRS; returns the primitive gcd with
// positive leading coefficient.
PolyX gcd_primitive(PolyX a, PolyX b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.zero_poly()) {
    PolyX r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyX squarefree_part_x(const PolyX& f) {
  PolyX d = f.derivative();
  if (d.zero_poly()) return primitive_part(f);
  return primitive_part(exact_div(primitive_part(f), gcd_primitive(f, d)));
}

// inverse of a mod m over Q[x]; the caller guarantees gcd(a, m) = 1
PolyX invert_mod(const PolyX& a, const PolyX& m) {
  auto ext = poly_ext_gcd(a, m);
  if (ext.g.degree() != 0)
    throw std::domain_error("element is not invertible mod the branch");
  return ext.s % m;
}

PolyX pow_mod(const PolyX& base, int e, const PolyX& m) {
  PolyX r = PolyX::constant(Rational(1));
  for (int i = 0; i < e; ++i) r = (r * base) % m;
  return r;
}

// Substitute y -> yx (a residue mod m) into a Q[x][y] polynomial.
PolyX subst_y(const PolyXY& f, const PolyX& yx, const PolyX& m) {
  PolyX acc;
  for (int j = 0; j <= f.degree(); ++j) {
    if (is_zero(f[j])) continue;
    acc = (acc + f[j] * pow_mod(yx, j, m)) % m;
  }
  return acc % m;
}

struct Branch {
  PolyX modulus;
  PolyX y_of_x;
  PolyX z_of_x;
};

struct EliminationContext {
  std::vector<std::pair<PolyX, PolyX>> y_routes;   // a(x) y + b(x) = 0
  std::vector<std::pair<PolyXY, PolyXY>> z_routes;  // c(x,y) z + d(x,y) = 0
  const MultiPoly* F;
  const MultiPoly* Fy;
  const MultiPoly* Fz;
  std::vector<Branch> kept;
  std::vector<PolyX> dropped;
};

void process_branch(EliminationContext& ctx, const PolyX& m) {
  if (m.degree() <= 0) return;
  // recover y(x) mod m
  PolyX yx;
  bool have_y = false;
  for (auto& [a, b] : ctx.y_routes) {
    PolyX am = a % m;
    if (am.zero_poly()) continue;
    PolyX g = gcd_primitive(am, m);
    if (g.degree() == 0) {
      yx = ((-b % m) * invert_mod(am, m)) % m;
      have_y = true;
      break;
    }
    if (g.degree() < m.degree()) {
      process_branch(ctx, g);
      process_branch(ctx, primitive_part(exact_div(m, g)));
      return;
    }
  }
  if (!have_y) {
    ctx.dropped.push_back(m);
    return;
  }
  // recover z(x) mod m
  PolyX zx;
  bool have_z = false;
  for (auto& [cc, dd] : ctx.z_routes) {
    PolyX ccx = subst_y(cc, yx, m);
    if (ccx.zero_poly()) continue;
    PolyX g = gcd_primitive(ccx, m);
    if (g.degree() == 0) {
      zx = ((-subst_y(dd, yx, m)) * invert_mod(ccx, m)) % m;
      have_z = true;
      break;
    }
    if (g.degree() < m.degree()) {
      process_branch(ctx, g);
      process_branch(ctx, primitive_part(exact_div(m, g)));
      return;
    }
  }
  if (!have_z) {
    ctx.dropped.push_back(m);
    return;
  }
  // back-substitute all three equations; keep only the part of m where they
  // vanish
  PolyX keep = m;
  for (const MultiPoly* eq : {ctx.F, ctx.Fy, ctx.Fz}) {
    PolyX acc;
    for (auto& [e, c] : eq->terms()) {
      PolyX term = PolyX::monomial(c, e[0]) % m;
      term = (term * pow_mod(yx, e[1], m)) % m;
      term = (term * pow_mod(zx, e[2], m)) % m;
      acc = (acc + term) % m;
    }
    if (!acc.zero_poly()) keep = gcd_primitive(keep, acc);
    if (keep.degree() == 0) break;
  }
  if (keep.degree() == 0) {
    ctx.dropped.push_back(m);
    return;
  }
  if (keep.degree() < m.degree())
    ctx.dropped.push_back(primitive_part(exact_div(m, keep)));
  ctx.kept.push_back({keep, yx % keep, zx % keep});
}

}  // namespace

SingularFiberReport singular_locus(const SurfaceForm& X,
                                   const std::vector<std::int64_t>& primes,
                                   std::uint64_t seed) {
  MultiPoly F = X.as_multipoly();
  MultiPoly Fy = F.partial(1);
  MultiPoly Fz = F.partial(2);
  if (Fy.zero() || Fz.zero())
    throw std::domain_error("degenerate surface: a partial vanishes identically");

  PolyXYZ Fn = to_nested(F), Fyn = to_nested(Fy), Fzn = to_nested(Fz);

  PolyXY h1 = resultant_over_ring(Fn, Fzn);
  PolyXY h2 = resultant_over_ring(Fyn, Fzn);
  PolyXY h3 = resultant_over_ring(Fn, Fyn);
  if (h1.zero_poly() || h2.zero_poly() || h3.zero_poly())
    throw std::domain_error("positive-dimensional singular locus");

  PolyX r12 = resultant_y(h1, h2);
  PolyX r13 = resultant_y(h1, h3);
  PolyX r23 = resultant_y(h2, h3);
  if (r12.zero_poly() || r13.zero_poly() || r23.zero_poly())
    throw std::domain_error("positive-dimensional singular locus");

  PolyX g0 = gcd_primitive(gcd_primitive(r12, r13), r23);
  if (g0.degree() == 0) {
    SingularFiberReport empty;
    empty.g = PolyX::constant(Rational(1));
    return empty;
  }
  PolyX ghat = squarefree_part_x(g0);

  EliminationContext ctx;
  ctx.F = &F;
  ctx.Fy = &Fy;
  ctx.Fz = &Fz;
  // y-routes: linear subresultants of the pairwise y-eliminations
  for (auto& [A, B] : {std::pair{h1, h2}, std::pair{h1, h3}, std::pair{h2, h3}}) {
    if (A.degree() < 1 || B.degree() < 1) continue;
    for (const PolyXY& s : subresultant_prs(A, B))
      if (s.degree() == 1) ctx.y_routes.emplace_back(s[1], s[0]);
  }
  // z-routes: every linear-in-z consequence of the system
  for (auto& [A, B] :
       {std::pair{Fn, Fzn}, std::pair{Fyn, Fzn}, std::pair{Fn, Fyn}}) {
    if (A.degree() == 1) ctx.z_routes.emplace_back(A[1], A[0]);
    if (B.degree() == 1) ctx.z_routes.emplace_back(B[1], B[0]);
    if (A.degree() >= 1 && B.degree() >= 1)
      for (const PolyXYZ& s : subresultant_prs(A, B))
        if (s.degree() == 1) ctx.z_routes.emplace_back(s[1], s[0]);
  }
  if (ctx.y_routes.empty() || ctx.z_routes.empty())
    throw std::domain_error("elimination produced no solvable routes");

  process_branch(ctx, ghat);
  if (ctx.kept.empty())
    throw std::domain_error(
        "inconsistent system: extraneous-factor stripping left nothing");

  // combine branches; they are pairwise coprime by construction
  SingularFiberReport rep;
  rep.dropped_branches = ctx.dropped;
  PolyX g = PolyX::constant(Rational(1));
  for (auto& br : ctx.kept) g = g * br.modulus;
  rep.g = primitive_part(g);
  if (ctx.kept.size() == 1) {
    rep.y_of_x = {ctx.kept[0].y_of_x, PolyX::constant(Rational(1))};
    rep.z_of_x = {ctx.kept[0].z_of_x, PolyX::constant(Rational(1))};
  } else {
    // CRT across branches
    PolyX mod = ctx.kept[0].modulus;
    PolyX yv = ctx.kept[0].y_of_x, zv = ctx.kept[0].z_of_x;
    for (size_t i = 1; i < ctx.kept.size(); ++i) {
      const PolyX& m2 = ctx.kept[i].modulus;
      auto ext = poly_ext_gcd(mod, m2);
      if (ext.g.degree() != 0)
        throw std::domain_error("elimination branches are not coprime");
      // u = ext.s * mod is 1 mod m2, 0 mod mod
      PolyX u = (ext.s * mod);
      PolyX new_mod = mod * m2;
      yv = (yv + ((ctx.kept[i].y_of_x - yv) * u)) % new_mod;
      zv = (zv + ((ctx.kept[i].z_of_x - zv) * u)) % new_mod;
      mod = new_mod;
    }
    rep.y_of_x = {yv, PolyX::constant(Rational(1))};
    rep.z_of_x = {zv, PolyX::constant(Rational(1))};
  }

  // mod-p patterns, nodality witnesses, and the irreducibility certificate
  for (std::int64_t p : primes) {
    FactorPattern pat = degree_pattern(rep.g, p, seed);
    rep.patterns.push_back(pat);
    UniPoly<Fp> gp = reduce_mod_p(rep.g, p);
    for (auto& [fac, mult] : factor_mod_p(gp, seed)) {
      if (fac.degree() != 1) continue;
      Fp x0 = -fac[0] / fac[1];
      try {
        Fp y0 = lift_rational(x0, Rational(0));
        Fp z0 = y0;
        // evaluate y(x), z(x) mod p at x0
        auto eval_rf = [&](const RationalFunction& rf) {
          Fp num = zero_like(x0), den = zero_like(x0), xp = one_like(x0);
          for (int i = 0; i <= rf.num.degree(); ++i) {
            num = num + lift_rational(x0, rf.num[i]) * xp;
            xp = xp * x0;
          }
          xp = one_like(x0);
          for (int i = 0; i <= rf.den.degree(); ++i) {
            den = den + lift_rational(x0, rf.den[i]) * xp;
            xp = xp * x0;
          }
          return num / den;
        };
        y0 = eval_rf(rep.y_of_x);
        z0 = eval_rf(rep.z_of_x);
        rep.certificates.push_back(certify_node_mod_p(X, x0, y0, z0));
      } catch (const std::domain_error&) {
        // bad reduction at this root; no certificate from this prime
      }
    }
  }
  if (rep.g.degree() >= 1)
    rep.irreducibility = certify_irreducible_over_Q(rep.g, primes);
  return rep;
}

Nodality classify_point_mod_p(const SurfaceForm& X, const Fp& x0, const Fp& y0,
                              const Fp& z0) {
  return certify_node_mod_p(X, x0, y0, z0).kind;
}

NodalityCertificate certify_node_mod_p(const SurfaceForm& X, const Fp& x0,
                                       const Fp& y0, const Fp& z0) {
  if (x0.p != y0.p || x0.p != z0.p)
    throw std::domain_error("mixed prime fields");
  const std::int64_t p = x0.p;
  if (p == 2) throw std::domain_error("nodality test needs an odd prime");
  // translated coefficients T[j][k] of F(x0, y + y0, z + z0)
  std::array<std::array<Fp, 3>, 3> T;
  for (auto& row : T) row.fill(Fp(0, p));
  auto binom = [](int n, int k) -> long {
    static const long table[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
    return table[n][k];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (is_zero(X.coeff(i, j, k))) continue;
        Fp c = lift_rational(x0, X.coeff(i, j, k));
        for (int a = 0; a < i; ++a) c = c * x0;
        // (y + y0)^j (z + z0)^k distributed over the target monomials
        for (int jj = 0; jj <= j; ++jj)
          for (int kk = 0; kk <= k; ++kk) {
            Fp t = c * Fp(binom(j, jj) * binom(k, kk), p);
            for (int a = 0; a < j - jj; ++a) t = t * y0;
            for (int a = 0; a < k - kk; ++a) t = t * z0;
            T[static_cast<size_t>(jj)][static_cast<size_t>(kk)] =
                T[static_cast<size_t>(jj)][static_cast<size_t>(kk)] + t;
          }
      }
  if (!is_zero(T[0][0]))
    throw std::domain_error("point is not on the reduced surface");

  NodalityCertificate cert;
  cert.p = p;
  cert.x0 = x0.v;
  cert.y0 = y0.v;
  cert.z0 = z0.v;
  cert.A = T[2][0].v;
  cert.B = T[1][1].v;
  cert.C = T[0][2].v;
  Fp disc = T[1][1] * T[1][1] - Fp(4, p) * T[2][0] * T[0][2];
  cert.discriminant = disc.v;
  cert.discriminant_is_square = is_square_mod_p(disc);
  if (!is_zero(T[1][0]) || !is_zero(T[0][1])) {
    cert.kind = Nodality::SmoothPoint;
    return cert;
  }
  if (is_zero(T[2][0]) && is_zero(T[1][1]) && is_zero(T[0][2])) {
    cert.kind = Nodality::CuspOrWorse;
    return cert;
  }
  cert.kind = is_zero(disc) ? Nodality::CuspOrWorse : Nodality::Node;
  return cert;
}

}  // namespace k3
