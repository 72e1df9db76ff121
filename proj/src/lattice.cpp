#include "k3/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace k3 {

const std::array<std::array<Integer, 4>, 4>& gram_matrix() {
  static const std::array<std::array<Integer, 4>, 4> J = {{
      {Integer(0), Integer(2), Integer(2), Integer(1)},
      {Integer(2), Integer(0), Integer(2), Integer(0)},
      {Integer(2), Integer(2), Integer(0), Integer(0)},
      {Integer(1), Integer(0), Integer(0), Integer(-2)},
  }};
  return J;
}

Integer pair(const DivisorClass& a, const DivisorClass& b) {
  const auto& J = gram_matrix();
  Integer acc = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) acc += a.v[i] * J[i][j] * b.v[j];
  return acc;
}

bool LatticeIsometry::is_isometry(const Matrix& m) {
  const auto& J = gram_matrix();
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Integer acc = 0;
      for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b) acc += m[a][i] * J[a][b] * m[b][j];
      if (acc != J[i][j]) return false;
    }
  return true;
}

LatticeIsometry LatticeIsometry::checked(Matrix m) {
  if (!is_isometry(m))
    throw std::domain_error("matrix does not preserve the intersection form");
  return LatticeIsometry(std::move(m));
}

LatticeIsometry LatticeIsometry::identity() {
  Matrix m{};
  for (size_t i = 0; i < 4; ++i) m[i][i] = 1;
  return LatticeIsometry(std::move(m));
}

DivisorClass LatticeIsometry::apply(const DivisorClass& d) const {
  DivisorClass r;
  for (size_t i = 0; i < 4; ++i) {
    Integer acc = 0;
    for (size_t j = 0; j < 4; ++j) acc += m_[i][j] * d.v[j];
    r.v[i] = acc;
  }
  return r;
}

LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
  LatticeIsometry::Matrix r{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Integer acc = 0;
      for (size_t k = 0; k < 4; ++k) acc += a.m_[i][k] * b.m_[k][j];
      r[i][j] = acc;
    }
  return LatticeIsometry(std::move(r));
}

namespace {

Integer det3(const LatticeIsometry::Matrix& m, size_t skip_row,
             size_t skip_col) {
  std::array<size_t, 3> rows{}, cols{};
  size_t t = 0;
  for (size_t i = 0; i < 4; ++i)
    if (i != skip_row) rows[t++] = i;
  t = 0;
  for (size_t j = 0; j < 4; ++j)
    if (j != skip_col) cols[t++] = j;
  auto e = [&](size_t i, size_t j) { return m[rows[i]][cols[j]]; };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

LatticeIsometry LatticeIsometry::inverse() const {
  Integer det = 0;
  for (size_t j = 0; j < 4; ++j) {
    Integer c = m_[0][j] * det3(m_, 0, j);
    det += (j % 2 == 0) ? c : -c;
  }
  if (det != 1 && det != -1)
    throw std::domain_error("isometry determinant is not a unit");
  Matrix adj{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Integer c = det3(m_, j, i);
      adj[i][j] = ((i + j) % 2 == 0) ? c : -c;
      if (det == -1) adj[i][j] = -adj[i][j];
    }
  return LatticeIsometry(std::move(adj));
}

std::vector<std::int64_t> LatticeIsometry::row_major() const {
  std::vector<std::int64_t> out;
  out.reserve(16);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) out.push_back(m_[i][j].get_si());
  return out;
}

namespace {

LatticeIsometry make_checked(std::array<std::array<long, 4>, 4> raw) {
  LatticeIsometry::Matrix m{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) m[i][j] = raw[i][j];
  return LatticeIsometry::checked(std::move(m));
}

}  // namespace

const LatticeIsometry& iso_U() {
  static const LatticeIsometry U = [] {
    LatticeIsometry u = make_checked(
        {{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}});
    if (!(u.apply(D4()) == D4()))
      throw std::domain_error("action convention broken: U D4 != D4");
    if (!(u * u == LatticeIsometry::identity()))
      throw std::domain_error("U is not an involution");
    return u;
  }();
  return U;
}

const LatticeIsometry& iso_T1() {
  static const LatticeIsometry T1 = [] {
    LatticeIsometry t = make_checked(
        {{{-1, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {-1, 0, 0, 1}}});
    if (!(t * t == LatticeIsometry::identity()))
      throw std::domain_error("T1 is not an involution");
    return t;
  }();
  return T1;
}

const LatticeIsometry& iso_T2() {
  static const LatticeIsometry T2 = [] {
    LatticeIsometry t = make_checked(
        {{{1, 2, 0, 0}, {0, -1, 0, 0}, {0, 2, 1, 1}, {0, 0, 0, -1}}});
    if (!(t * t == LatticeIsometry::identity()))
      throw std::domain_error("T2 is not an involution");
    return t;
  }();
  return T2;
}

const LatticeIsometry& iso_T3() {
  static const LatticeIsometry T3 = iso_U() * iso_T2() * iso_U();
  return T3;
}

const LatticeIsometry& iso_T4() {
  static const LatticeIsometry T4 = [] {
    LatticeIsometry t = make_checked(
        {{{1, 8, 8, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 4, 4, 1}}});
    // documented fixed point: T4 T3 T4 T2 D1 = D1
    if (!((t * iso_T3() * t * iso_T2()).apply(D1()) == D1()))
      throw std::domain_error("action convention broken: T4T3T4T2 D1 != D1");
    return t;
  }();
  return T4;
}

std::vector<DivisorClass> orbit_of_D4(
    const std::vector<LatticeIsometry>& generators, int word_length_bound) {
  std::vector<LatticeIsometry> moves;
  for (const auto& g : generators) {
    moves.push_back(g);
    LatticeIsometry inv = g.inverse();
    if (!(inv == g)) moves.push_back(inv);
  }
  std::set<DivisorClass> seen{D4()};
  std::vector<DivisorClass> frontier{D4()};
  for (int depth = 0; depth < word_length_bound; ++depth) {
    std::vector<DivisorClass> next;
    for (const auto& v : frontier)
      for (const auto& g : moves) {
        DivisorClass w = g.apply(v);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return {seen.begin(), seen.end()};
}

DivisorClass cm_class(int m) {
  if (m < 0) throw std::domain_error("cm_class needs m >= 0");
  const LatticeIsometry step = iso_T2() * iso_T4() * iso_T3() * iso_T4();
  DivisorClass d = D4();
  for (int i = 0; i < m; ++i) d = step.apply(d);
  return d;
}

Rational squared_cosh(const DivisorClass& A, const DivisorClass& B) {
  Integer aa = pair(A, A), bb = pair(B, B), ab = pair(A, B);
  if (aa <= 0 || bb <= 0)
    throw std::domain_error(
        "squared_cosh needs classes with positive self-intersection");
  Rational r(Integer(ab * ab), Integer(aa * bb));
  r.canonicalize();
  return r;
}

bool RationalMatrix::integral() const {
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.get_den() != 1) return false;
  return true;
}

LatticeIsometry RationalMatrix::to_integer() const {
  if (!integral())
    throw std::domain_error("matrix has non-integer entries");
  LatticeIsometry::Matrix out{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) out[i][j] = m[i][j].get_num();
  return LatticeIsometry::checked(std::move(out));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Rational acc(0);
      for (size_t k = 0; k < 4; ++k) acc += a.m[i][k] * b.m[k][j];
      r.m[i][j] = acc;
    }
  return r;
}

std::array<Rational, 4> RationalMatrix::apply(
    const std::array<Rational, 4>& x) const {
  std::array<Rational, 4> r{};
  for (size_t i = 0; i < 4; ++i) {
    Rational acc(0);
    for (size_t j = 0; j < 4; ++j) acc += m[i][j] * x[j];
    r[i] = acc;
  }
  return r;
}

RationalMatrix to_rational(const LatticeIsometry& iso) {
  RationalMatrix r;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) r.m[i][j] = Rational(iso.matrix()[i][j]);
  return r;
}

RationalMatrix reflection(const DivisorClass& a) {
  Integer aa = pair(a, a);
  if (aa == 0) throw std::domain_error("reflection through an isotropic class");
  // R = I - (2 / a.a) a (a^T J)
  const auto& J = gram_matrix();
  RationalMatrix r;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Integer aJ_j = 0;
      for (size_t k = 0; k < 4; ++k) aJ_j += a.v[k] * J[k][j];
      Rational val(Integer(-2 * a.v[i] * aJ_j), aa);
      val.canonicalize();
      if (i == j) val += 1;
      r.m[i][j] = val;
    }
  return r;
}

Sigma4Report classify_sigma4_reflections() {
  Sigma4Report rep;
  // a = (-4a2-4a3, a2, a3, -2a2-2a3) is the general integer class with
  // a.D1 = a.D4 = 0; verify the derivation on a basis of (a2, a3) space.
  auto make_a = [](long a2, long a3) {
    DivisorClass a;
    a.v = {Integer(-4 * a2 - 4 * a3), Integer(a2), Integer(a3),
           Integer(-2 * a2 - 2 * a3)};
    return a;
  };
  for (auto [a2, a3] : {std::pair{1L, 0L}, std::pair{0L, 1L}, std::pair{3L, -7L}}) {
    DivisorClass a = make_a(a2, a3);
    if (pair(a, D1()) != 0 || pair(a, D4()) != 0)
      throw std::domain_error("sigma4 constraint derivation broken");
  }
  // Second component of R_a(D2) must be the integer k; the rationality of
  // t = a2/a3 in (2k+2)t^2 + 3kt + (2k-2) = 0 forces -5k^2+16 to be a square.
  std::array<Rational, 4> d2{Rational(0), Rational(1), Rational(0),
                             Rational(0)};
  for (auto [a2, a3] :
       {std::pair{1L, 1L}, std::pair{1L, -1L}, std::pair{2L, 5L},
        std::pair{-3L, 4L}}) {
    Rational expected(Integer(2 * (a3 * a3 - a2 * a2)),
                      Integer(2 * a2 * a2 + 3 * a2 * a3 + 2 * a3 * a3));
    expected.canonicalize();
    Rational got = reflection(make_a(a2, a3)).apply(d2)[1];
    if (got != expected)
      throw std::domain_error("sigma4 k-formula derivation broken");
  }
  for (std::int64_t k = -10; k <= 10; ++k) {
    std::int64_t disc = -5 * k * k + 16;
    if (disc < 0) continue;
    std::int64_t s = 0;
    while (s * s < disc) ++s;
    rep.candidates.push_back({k, disc, s * s == disc});
  }
  // k = 0 means a2 = a3 or a2 = -a3; both reflections must be integral
  // isometries, and they are exactly U and T4 U.
  LatticeIsometry r_plus = reflection(make_a(1, 1)).to_integer();
  LatticeIsometry r_minus = reflection(make_a(1, -1)).to_integer();
  if (!(r_plus == iso_T4() * iso_U()))
    throw std::domain_error("sigma4 reflection a2=a3 is not T4 U");
  if (!(r_minus == iso_U()))
    throw std::domain_error("sigma4 reflection a2=-a3 is not U");
  rep.reflection_names = {"U", "T4*U"};
  rep.reflections = {r_minus, r_plus};
  return rep;
}

// ---- ambient divisor calculus ----

namespace {
const UniPoly<Rational>& zero_poly_const() {
  static const UniPoly<Rational> z;
  return z;
}
}  // namespace

bool AmbientClass::pure_curve() const {
  for (const auto& s : surf)
    if (!s.zero_poly()) return false;
  return true;
}

bool AmbientClass::pure_surface() const {
  for (const auto& c : curve)
    if (!c.zero_poly()) return false;
  return true;
}

AmbientClass operator+(const AmbientClass& a, const AmbientClass& b) {
  AmbientClass r;
  for (size_t i = 0; i < 3; ++i) {
    r.curve[i] = a.curve[i] + b.curve[i];
    r.surf[i] = a.surf[i] + b.surf[i];
  }
  return r;
}

AmbientClass operator-(const AmbientClass& a, const AmbientClass& b) {
  AmbientClass r;
  for (size_t i = 0; i < 3; ++i) {
    r.curve[i] = a.curve[i] - b.curve[i];
    r.surf[i] = a.surf[i] - b.surf[i];
  }
  return r;
}

AmbientClass ambient_curve(const UniPoly<Rational>& c1,
                           const UniPoly<Rational>& c2,
                           const UniPoly<Rational>& c3) {
  AmbientClass r;
  r.curve = {c1, c2, c3};
  r.surf = {zero_poly_const(), zero_poly_const(), zero_poly_const()};
  return r;
}

AmbientClass ambient_surface(const UniPoly<Rational>& s1,
                             const UniPoly<Rational>& s2,
                             const UniPoly<Rational>& s3) {
  AmbientClass r;
  r.surf = {s1, s2, s3};
  r.curve = {zero_poly_const(), zero_poly_const(), zero_poly_const()};
  return r;
}

AmbientClass surface_product(const AmbientClass& a, const AmbientClass& b) {
  if (!a.pure_surface() || !b.pure_surface())
    throw std::domain_error(
        "surface_product is defined between surface classes");
  AmbientClass r;
  r.curve = {zero_poly_const(), zero_poly_const(), zero_poly_const()};
  r.surf = r.curve;
  for (size_t k = 0; k < 3; ++k) {
    size_t i = (k + 1) % 3, j = (k + 2) % 3;
    r.curve[k] = a.surf[i] * b.surf[j] + a.surf[j] * b.surf[i];
  }
  return r;
}

UniPoly<Rational> curve_surface_pair(const AmbientClass& a,
                                     const AmbientClass& b) {
  const AmbientClass* c = nullptr;
  const AmbientClass* s = nullptr;
  if (a.pure_curve() && b.pure_surface()) {
    c = &a;
    s = &b;
  } else if (a.pure_surface() && b.pure_curve()) {
    c = &b;
    s = &a;
  } else {
    throw std::domain_error(
        "the scalar pairing needs one curve class and one surface class");
  }
  UniPoly<Rational> acc;
  for (size_t i = 0; i < 3; ++i) acc = acc + c->curve[i] * s->surf[i];
  return acc;
}

AmbientCheck ambient_pairing_check(int r) {
  if (r < 0) throw std::domain_error("ambient_pairing_check needs r >= 0");
  using P = UniPoly<Rational>;
  auto k = [](long n) { return P::constant(Rational(n)); };
  P t = P::linear(Rational(0), Rational(1));

  AmbientClass X = ambient_surface(k(2), k(2), k(2));
  AmbientClass Y = ambient_surface(k(r), k(1), k(1));
  AmbientCheck out;
  out.XY = surface_product(X, Y);
  // [D2] maps to 2B1 + 2B3 in the ambient lattice; [L] = B1 + tB2 + tB3.
  AmbientClass d2 = ambient_curve(k(2), k(0), k(2));
  AmbientClass L = ambient_curve(k(1), t, t);
  out.M = out.XY - d2 - L;
  out.pairing =
      curve_surface_pair(out.M, ambient_surface(k(0), k(1), k(-1)));
  return out;
}

}  // namespace k3
