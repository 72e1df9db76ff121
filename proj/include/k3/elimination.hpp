#pragma once

#include <vector>

#include "k3/multipoly.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// Sylvester matrix of a, b viewed in their outermost variable; entries lie in
// the coefficient ring.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const UniPoly<R>& a,
                                             const UniPoly<R>& b) {
  if (a.zero_poly() || b.zero_poly())
    throw std::domain_error("Sylvester matrix of the zero polynomial");
  const int m = a.degree(), n = b.degree();
  const R zero = zero_like(a.lc());
  const int size = m + n;
  std::vector<std::vector<R>> s(static_cast<size_t>(size),
                                std::vector<R>(static_cast<size_t>(size), zero));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i)
      s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = a[m - i];
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i)
      s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = b[n - i];
  return s;
}

// Determinant by Laplace expansion; fine for the small ring-coefficient
// matrices the fiber eliminations produce.
template <class R>
R det_cofactor(const std::vector<std::vector<R>>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::domain_error("determinant of empty matrix");
  if (n == 1) return m[0][0];
  R acc = zero_like(m[0][0]);
  std::vector<std::vector<R>> minor(n - 1, std::vector<R>(n - 1, acc));
  for (size_t col = 0; col < n; ++col) {
    if (is_zero(m[0][col])) continue;
    for (size_t i = 1; i < n; ++i) {
      size_t t = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[i - 1][t++] = m[i][j];
      }
    }
    R term = m[0][col] * det_cofactor(minor);
    if (col % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

// Resultant over an arbitrary commutative ring, via the Sylvester
// determinant.  Degenerate degree-0 cases follow the usual conventions.
template <class R>
R resultant_over_ring(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (a.zero_poly() && b.zero_poly())
    throw std::domain_error("resultant of two zero polynomials");
  if (a.zero_poly() || b.zero_poly()) {
    const UniPoly<R>& f = a.zero_poly() ? b : a;
    return f.degree() == 0 ? one_like(f.lc()) : zero_like(f.lc());
  }
  if (a.degree() == 0 && b.degree() == 0) return one_like(a.lc());
  if (a.degree() == 0) {
    R r = one_like(a.lc());
    for (int i = 0; i < b.degree(); ++i) r = r * a.lc();
    return r;
  }
  if (b.degree() == 0) {
    R r = one_like(b.lc());
    for (int i = 0; i < a.degree(); ++i) r = r * b.lc();
    return r;
  }
  return det_cofactor(sylvester_matrix(a, b));
}

// Determinant of a matrix of univariate rational polynomials, by evaluation
// at enough points and Lagrange interpolation.  Exact: the determinant's
// degree is bounded by the sum of row maxima.
PolyX det_polymat(const std::vector<std::vector<PolyX>>& m);

// Resultant in y of two polynomials in Q[x][y].
PolyX resultant_y(const PolyXY& a, const PolyXY& b);

// Lagrange interpolation through (points[i], values[i]).
PolyX lagrange_interpolate(const std::vector<Rational>& points,
                           const std::vector<Rational>& values);

}  // namespace k3
