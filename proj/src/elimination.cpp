#include "k3/elimination.hpp"

#include <stdexcept>

namespace k3 {

namespace {

// fraction-free Bareiss determinant over Q (entries are exact rationals, so
// plain Gaussian elimination is also exact; Bareiss keeps entries smaller)
Rational det_rational(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational sign(1);
  for (size_t k = 0; k < n; ++k) {
    if (is_zero(m[k][k])) {
      size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      Rational factor = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  Rational det = sign;
  for (size_t k = 0; k < n; ++k) det *= m[k][k];
  return det;
}

}  // namespace

PolyX lagrange_interpolate(const std::vector<Rational>& points,
                           const std::vector<Rational>& values) {
  if (points.size() != values.size() || points.empty())
    throw std::invalid_argument("interpolation needs matching nonempty data");
  // Newton form for O(n^2) construction
  const size_t n = points.size();
  std::vector<Rational> coef(values);
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j]);
      if (i == j) break;
    }
  PolyX result = PolyX::constant(coef[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    PolyX lin = PolyX::linear(-points[i], Rational(1));
    result = result * lin + PolyX::constant(coef[i]);
  }
  return result;
}

PolyX det_polymat(const std::vector<std::vector<PolyX>>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::domain_error("determinant of empty matrix");
  // degree bound: sum over rows of the maximal entry degree
  long bound = 0;
  for (const auto& row : m) {
    int rowmax = 0;
    for (const auto& e : row) rowmax = std::max(rowmax, e.degree());
    if (rowmax > 0) bound += rowmax;
  }
  std::vector<Rational> points, values;
  points.reserve(static_cast<size_t>(bound) + 1);
  for (long j = 0; j <= bound; ++j) {
    Rational xj(j);
    std::vector<std::vector<Rational>> num(
        n, std::vector<Rational>(n, Rational(0)));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) num[r][c] = m[r][c].eval(xj);
    points.push_back(xj);
    values.push_back(det_rational(std::move(num)));
  }
  return lagrange_interpolate(points, values);
}

PolyX resultant_y(const PolyXY& a, const PolyXY& b) {
  if (a.zero_poly() && b.zero_poly())
    throw std::domain_error("resultant of two zero polynomials");
  if (a.zero_poly() || b.zero_poly()) {
    const PolyXY& f = a.zero_poly() ? b : a;
    return f.degree() == 0 ? PolyX::constant(Rational(1)) : PolyX();
  }
  if (a.degree() == 0 && b.degree() == 0) return PolyX::constant(Rational(1));
  if (a.degree() == 0) {
    PolyX r = PolyX::constant(Rational(1));
    for (int i = 0; i < b.degree(); ++i) r = r * a.lc();
    return r;
  }
  if (b.degree() == 0) {
    PolyX r = PolyX::constant(Rational(1));
    for (int i = 0; i < a.degree(); ++i) r = r * b.lc();
    return r;
  }
  return det_polymat(sylvester_matrix(a, b));
}

}  // namespace k3
