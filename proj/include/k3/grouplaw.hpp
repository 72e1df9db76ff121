#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "k3/curve.hpp"
#include "k3/factor.hpp"
#include "k3/numberfield.hpp"
#include "k3/rational.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// The (1,1) form alpha*yz + beta*y + gamma*z + delta = 0, stored with the
// first nonzero coordinate scaled to 1.
template <class K>
struct OneOneForm {
  K alpha, beta, gamma, delta;

  OneOneForm(K a, K b, K c, K d)
      : alpha(std::move(a)),
        beta(std::move(b)),
        gamma(std::move(c)),
        delta(std::move(d)) {
    K* coords[4] = {&alpha, &beta, &gamma, &delta};
    int first = -1;
    for (int i = 0; i < 4; ++i)
      if (!is_zero(*coords[i])) {
        first = i;
        break;
      }
    if (first < 0) throw std::domain_error("zero (1,1) form");
    K inv = inverse(*coords[first]);
    for (int i = 0; i < 4; ++i) *coords[i] = inv * *coords[i];
  }

  // The paper writes its forms as z = (a y + b) / (c y + d).
  static OneOneForm from_mobius(const K& a, const K& b, const K& c,
                                const K& d) {
    return OneOneForm(c, -a, d, -b);
  }

  K eval(const K& y, const K& z) const {
    return alpha * y * z + beta * y + gamma * z + delta;
  }

  // alpha*delta - beta*gamma; zero exactly when the form is a product of
  // axis lines.
  K determinant() const { return alpha * delta - beta * gamma; }

  friend bool operator==(const OneOneForm& a, const OneOneForm& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma &&
           a.delta == b.delta;
  }
};

template <class K>
struct InterpolationConstraint {
  FiberPoint<K> point;
  int multiplicity = 1;
};

namespace detail {

// Tangent direction data of E at an affine point: the constraint rows for
// contact order 2 and 3 differentiate the restriction of the form along the
// branch of E through the point, using whichever coordinate is transverse.
template <class K>
struct ContactRows {
  std::array<K, 4> order2;
  std::array<K, 4> order3;
};

template <class K>
ContactRows<K> contact_rows(const BiquadraticCurve<K>& E,
                            const FiberPoint<K>& p) {
  const K zero = zero_like(p.y);
  const K one = one_like(p.y);
  const K two = from_int_like(p.y, 2);
  K ey = E.partial_y(p.y, p.z);
  K ez = E.partial_z(p.y, p.z);
  // second partials of a (2,2) form
  auto c = [&](int j, int k) { return E.coeff(j, k); };
  K eyy = two * (c(2, 0) + c(2, 1) * p.z + c(2, 2) * p.z * p.z);
  K ezz = two * (c(0, 2) + c(1, 2) * p.y + c(2, 2) * p.y * p.y);
  K eyz = c(1, 1) + two * c(2, 1) * p.y + two * c(1, 2) * p.z +
          two * two * c(2, 2) * p.y * p.z;
  if (!is_zero(ez)) {
    // z as a function of y along E
    K s = -(ey / ez);
    K s2 = -((eyy + two * eyz * s + ezz * s * s) / ez);
    return {{p.z + p.y * s, one, s, zero},
            {two * s + p.y * s2, zero, s2, zero}};
  }
  if (!is_zero(ey)) {
    // y as a function of z along E
    K s = -(ez / ey);  // = 0 here, kept for symmetry
    K s2 = -((ezz + two * eyz * s + eyy * s * s) / ey);
    return {{p.y + p.z * s, s, one, zero},
            {two * s + p.z * s2, s2, zero, zero}};
  }
  throw std::domain_error("tangency constraint at a singular point of the fiber");
}

// One-dimensional null space of a 3x4 matrix over a field.
template <class K>
OneOneForm<K> nullspace_form(std::vector<std::array<K, 4>> rows) {
  if (rows.size() != 3)
    throw std::domain_error("interpolation needs exactly three constraint rows");
  int rank = 0;
  std::array<int, 4> pivot_of_row{-1, -1, -1, -1};
  std::array<bool, 4> is_pivot{false, false, false, false};
  for (int col = 0; col < 4 && rank < 3; ++col) {
    int sel = -1;
    for (int r = rank; r < 3; ++r)
      if (!is_zero(rows[static_cast<size_t>(r)][static_cast<size_t>(col)])) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(sel)]);
    K inv = inverse(rows[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
    for (int j = 0; j < 4; ++j)
      rows[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
          inv * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    for (int r = 0; r < 3; ++r) {
      if (r == rank) continue;
      K f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (is_zero(f)) continue;
      for (int j = 0; j < 4; ++j)
        rows[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            rows[static_cast<size_t>(r)][static_cast<size_t>(j)] -
            f * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    pivot_of_row[static_cast<size_t>(rank)] = col;
    is_pivot[static_cast<size_t>(col)] = true;
    ++rank;
  }
  if (rank != 3)
    throw std::domain_error(
        "degenerate constraint configuration: interpolation space has "
        "dimension > 1");
  int free_col = -1;
  for (int col = 0; col < 4; ++col)
    if (!is_pivot[static_cast<size_t>(col)]) free_col = col;
  const K zero = zero_like(rows[0][0]);
  const K one = one_like(rows[0][0]);
  std::array<K, 4> v{zero, zero, zero, zero};
  v[static_cast<size_t>(free_col)] = one;
  for (int r = 0; r < 3; ++r)
    v[static_cast<size_t>(pivot_of_row[static_cast<size_t>(r)])] =
        -rows[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
  return OneOneForm<K>(v[0], v[1], v[2], v[3]);
}

}  // namespace detail

template <class K>
OneOneForm<K> interpolate(const BiquadraticCurve<K>& E,
                          const std::vector<InterpolationConstraint<K>>& cs) {
  int total = 0;
  for (auto& c : cs) total += c.multiplicity;
  if (total != 3)
    throw std::domain_error("interpolation needs total multiplicity 3");
  std::vector<std::array<K, 4>> rows;
  for (auto& c : cs) {
    const FiberPoint<K>& p = c.point;
    if (!E.contains(p))
      throw std::domain_error("constraint point is not on the fiber");
    if (p.inf_y || p.inf_z) {
      if (c.multiplicity > 1)
        throw std::domain_error(
            "tangency constraints at infinity are not supported");
      const K zero = zero_like(p.inf_y ? p.z : p.y);
      const K one = one_like(p.inf_y ? p.z : p.y);
      if (p.inf_y && p.inf_z)
        rows.push_back({one, zero, zero, zero});
      else if (p.inf_y)
        rows.push_back({p.z, one, zero, zero});
      else
        rows.push_back({p.y, zero, one, zero});
      continue;
    }
    const K one = one_like(p.y);
    rows.push_back({p.y * p.z, p.y, p.z, one});
    if (c.multiplicity >= 2) {
      auto tangent = detail::contact_rows(E, p);
      rows.push_back(tangent.order2);
      if (c.multiplicity >= 3) rows.push_back(tangent.order3);
      if (c.multiplicity > 3)
        throw std::domain_error("contact order beyond 3 is not supported");
    }
  }
  OneOneForm<K> L = detail::nullspace_form(std::move(rows));
  if (is_zero(L.determinant()))
    throw std::domain_error(
        "degenerate (1,1) form: product of axis lines");
  return L;
}

// The restriction of L to E as a quartic in y: substitute
// z = -(beta*y + delta)/(alpha*y + gamma) and clear the square of the
// denominator.
template <class K>
UniPoly<K> restrict_to_curve(const BiquadraticCurve<K>& E,
                             const OneOneForm<K>& L) {
  using P = UniPoly<K>;
  P num = P::linear(-L.delta, -L.beta);
  P den = P::linear(L.gamma, L.alpha);
  P acc;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      if (is_zero(E.coeff(j, k))) continue;
      P t = P::monomial(E.coeff(j, k), j);
      for (int i = 0; i < k; ++i) t = t * num;
      for (int i = 0; i < 2 - k; ++i) t = t * den;
      acc = acc + t;
    }
  return acc;
}

template <class K>
FiberPoint<K> fourth_intersection(const BiquadraticCurve<K>& E,
                                  const OneOneForm<K>& L,
                                  const std::vector<FiberPoint<K>>& known) {
  if (known.size() != 3)
    throw std::domain_error("fourth_intersection needs exactly three points");
  if (is_zero(L.determinant()))
    throw std::domain_error("degenerate (1,1) form: product of axis lines");
  UniPoly<K> N = restrict_to_curve(E, L);
  if (N.zero_poly())
    throw std::domain_error("the (1,1) form contains a component of the fiber");
  int n_inf = 0;
  for (auto& p : known) {
    if (p.inf_y) {
      ++n_inf;
      continue;
    }
    UniPoly<K> root = UniPoly<K>::linear(-p.y, one_like(p.y));
    auto [q, r] = divmod(N, root);
    if (!r.zero_poly())
      throw std::domain_error(
          "known intersection points do not divide the restriction");
    N = std::move(q);
  }
  if (N.degree() > 4 - n_inf - (3 - n_inf))
    throw std::domain_error(
        "known intersection points do not divide the restriction");
  if (N.degree() == 1) {
    K y4 = -(N[0] / N[1]);
    K den = L.alpha * y4 + L.gamma;
    if (!is_zero(den))
      return FiberPoint<K>::affine(y4, -(L.beta * y4 + L.delta) / den);
    FiberPoint<K> p;
    p.y = y4;
    p.z = zero_like(y4);
    p.inf_z = true;
    return p;
  }
  // degree dropped: the fourth point is at infinity in y
  if (is_zero(L.alpha))
    throw std::domain_error(
        "degenerate configuration: fourth point escapes every chart");
  FiberPoint<K> p;
  p.inf_y = true;
  p.y = zero_like(L.alpha);
  p.z = -(L.beta / L.alpha);
  return p;
}

// A fiber with a chosen zero O; O' is the fourth intersection of the unique
// triple-contact form at O.
template <class K>
struct MarkedFiber {
  BiquadraticCurve<K> curve;
  FiberPoint<K> O;
  FiberPoint<K> O_prime;
  OneOneForm<K> triple_contact;

  MarkedFiber(BiquadraticCurve<K> E, FiberPoint<K> zero)
      : curve(std::move(E)),
        O(std::move(zero)),
        O_prime(O),
        triple_contact(make_triple_contact(curve, O)) {
    O_prime = fourth_intersection(curve, triple_contact, {O, O, O});
  }

 private:
  static OneOneForm<K> make_triple_contact(const BiquadraticCurve<K>& E,
                                           const FiberPoint<K>& O) {
    if (!E.contains(O))
      throw std::domain_error("the marked point is not on the fiber");
    return interpolate(E, {{O, 3}});
  }
};

namespace detail {

// Merge a list of points into interpolation constraints with multiplicities.
template <class K>
std::vector<InterpolationConstraint<K>> merge_constraints(
    const std::vector<FiberPoint<K>>& pts) {
  std::vector<InterpolationConstraint<K>> cs;
  for (auto& p : pts) {
    bool found = false;
    for (auto& c : cs)
      if (c.point == p) {
        ++c.multiplicity;
        found = true;
        break;
      }
    if (!found) cs.push_back({p, 1});
  }
  return cs;
}

}  // namespace detail

template <class K>
FiberPoint<K> star(const MarkedFiber<K>& F, const FiberPoint<K>& A,
                   const FiberPoint<K>& B) {
  std::vector<FiberPoint<K>> pts{A, B, F.O_prime};
  OneOneForm<K> L = interpolate(F.curve, detail::merge_constraints(pts));
  return fourth_intersection(F.curve, L, pts);
}

template <class K>
FiberPoint<K> neg(const MarkedFiber<K>& F, const FiberPoint<K>& A) {
  return star(F, A, F.O);
}

template <class K>
FiberPoint<K> add(const MarkedFiber<K>& F, const FiberPoint<K>& A,
                  const FiberPoint<K>& B) {
  return star(F, star(F, A, B), F.O);
}

template <class K>
FiberPoint<K> double_point(const MarkedFiber<K>& F, const FiberPoint<K>& A) {
  return add(F, A, A);
}

// ---- pencils of (1,1) forms and halving ----

// A pencil alpha = t, gamma = 1 with beta(t), delta(t) linear in t, obtained
// by imposing two base conditions.
template <class K>
struct FormPencil {
  UniPoly<K> beta;   // in t
  UniPoly<K> delta;  // in t
};

namespace detail {

// Solve the 2x2 system for (beta, delta) given two constraint rows of the
// shape beta*u + delta*v = -(t*w0 + w1).
template <class K>
FormPencil<K> solve_pencil(const std::array<K, 4>& row1,
                           const std::array<K, 4>& row2) {
  // rows are (u, v, w0, w1)
  const K det = row1[0] * row2[1] - row2[0] * row1[1];
  if (is_zero(det)) throw std::domain_error("degenerate pencil");
  const K inv = inverse(det);
  using P = UniPoly<K>;
  P r1 = P::linear(-row1[3], -row1[2]);
  P r2 = P::linear(-row2[3], -row2[2]);
  P beta = inv * (row2[1] * r1 - row1[1] * r2);
  P delta = inv * (row1[0] * r2 - row2[0] * r1);
  return {beta, delta};
}

// Constraint row (u, v, w0, w1) meaning beta*u + delta*v + t*w0 + w1 = 0 for
// passage through an affine point.
template <class K>
std::array<K, 4> pencil_point_row(const FiberPoint<K>& p) {
  return {p.y, one_like(p.y), p.y * p.z, p.z};
}

// Tangency row at an affine point of E for the pencil form t*yz+beta*y+z+delta.
template <class K>
std::array<K, 4> pencil_tangent_row(const BiquadraticCurve<K>& E,
                                    const FiberPoint<K>& p) {
  auto rows = contact_rows(E, p);
  // rows.order2 = (A, B, C, 0) meaning alpha*A + beta*B + gamma*C = 0
  if (is_zero(rows.order2[1]))
    throw std::domain_error("degenerate pencil: tangent row has no beta term");
  const K inv = inverse(rows.order2[1]);
  return {one_like(p.y), zero_like(p.y), inv * rows.order2[0],
          inv * rows.order2[2]};
}

// Restriction of the pencil form to E as a polynomial in y with UniPoly<K>
// (polynomials in t) coefficients.
template <class K>
UniPoly<UniPoly<K>> pencil_restriction(const BiquadraticCurve<K>& E,
                                       const FormPencil<K>& pen) {
  using P = UniPoly<K>;       // in t
  using PY = UniPoly<P>;      // in y over K[t]
  const K one = one_like(pen.beta.zero_poly() ? pen.delta.lc() : pen.beta.lc());
  P t = P::linear(zero_like(one), one);
  P c1 = P::constant(one);
  // num(y) = -(beta*y + delta), den(y) = t*y + 1, both linear in y
  PY num = PY::linear(-pen.delta, -pen.beta);
  PY den = PY::linear(c1, t);
  PY acc;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      if (is_zero(E.coeff(j, k))) continue;
      PY term = PY::monomial(P::constant(E.coeff(j, k)), j);
      for (int i = 0; i < k; ++i) term = term * num;
      for (int i = 0; i < 2 - k; ++i) term = term * den;
      acc = acc + term;
    }
  return acc;
}

template <class K>
UniPoly<K> normalize_discriminant(const UniPoly<K>& h) {
  if constexpr (std::is_same_v<K, Rational>)
    return primitive_part(h);
  else
    return monic(h);
}

// Shared tail of two_torsion_poly and halve: divide the pencil restriction
// by the two known base roots and return the discriminant of the residual
// quadratic, plus the quadratic itself.
template <class K>
struct PencilDiscriminant {
  FormPencil<K> pencil;
  UniPoly<K> A, B, C;  // residual quadratic in t-coefficients
  UniPoly<K> h;        // its discriminant, normalized
};

template <class K>
PencilDiscriminant<K> pencil_discriminant(const BiquadraticCurve<K>& E,
                                          const FiberPoint<K>& base1,
                                          const FiberPoint<K>& base2) {
  if (base1.inf_y || base1.inf_z || base2.inf_y || base2.inf_z)
    throw std::domain_error("pencil base points must be affine");
  FormPencil<K> pen =
      (base1 == base2)
          ? solve_pencil(pencil_point_row(base1), pencil_tangent_row(E, base1))
          : solve_pencil(pencil_point_row(base1), pencil_point_row(base2));
  auto N = pencil_restriction(E, pen);
  using P = UniPoly<K>;
  const K one = one_like(base1.y);
  for (const K& root : {base1.y, base2.y}) {
    UniPoly<P> lin = UniPoly<P>::linear(P::constant(-root), P::constant(one));
    N = ring_exact_div(N, lin);
  }
  if (N.degree() != 2)
    throw std::domain_error("degenerate pencil: residual is not a quadratic");
  P A = N[2], B = N[1], C = N[0];
  P four = P::constant(from_int_like(one, 4));
  P h = B * B - four * A * C;
  if (h.zero_poly())
    throw std::domain_error("degenerate pencil: discriminant vanishes identically");
  return {pen, A, B, C, normalize_discriminant(h)};
}

}  // namespace detail

// The vanishing-discriminant condition for the pencil of forms through O and
// O'; its roots t give the (1,1) forms with a double contact, i.e. the
// 2-torsion configurations.
template <class K>
UniPoly<K> two_torsion_poly(const MarkedFiber<K>& F) {
  if (F.O == F.O_prime)
    throw std::domain_error("two_torsion_poly needs O and O' distinct");
  return detail::pencil_discriminant(F.curve, F.O_prime, F.O).h;
}

struct HalveBranch {
  UniPoly<Rational> min_poly;  // monic irreducible factor of h
  std::shared_ptr<const NumberField> field;
  FiberPoint<NFElem> Q;
};

struct HalveResult {
  UniPoly<Rational> h;  // the degree <= 4 halving polynomial in t
  std::vector<HalveBranch> branches;
};

// Solves 2Q = P on a rational marked fiber: with R = P*O, the forms through
// {O', R} with a double residual root cut out the solutions Q.  Every branch
// is verified by doubling in its number field before being returned.
HalveResult halve(const MarkedFiber<Rational>& F,
                  const FiberPoint<Rational>& P);

}  // namespace k3
