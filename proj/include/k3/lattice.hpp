#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3/rational.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// A divisor class in the basis (D1, D2, D3, D4) of Pic(X).
struct DivisorClass {
  std::array<Integer, 4> v{};

  static DivisorClass basis(int i) {
    DivisorClass d;
    d.v[static_cast<size_t>(i)] = 1;
    return d;
  }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r;
    for (size_t i = 0; i < 4; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r;
    for (size_t i = 0; i < 4; ++i) r.v[i] = a.v[i] - b.v[i];
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a) {
    DivisorClass r;
    for (size_t i = 0; i < 4; ++i) r.v[i] = -a.v[i];
    return r;
  }
  friend DivisorClass operator*(const Integer& s, const DivisorClass& a) {
    DivisorClass r;
    for (size_t i = 0; i < 4; ++i) r.v[i] = s * a.v[i];
    return r;
  }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.v == b.v;
  }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    for (size_t i = 0; i < 4; ++i)
      if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
    return false;
  }
};

inline DivisorClass D1() { return DivisorClass::basis(0); }
inline DivisorClass D2() { return DivisorClass::basis(1); }
inline DivisorClass D3() { return DivisorClass::basis(2); }
inline DivisorClass D4() { return DivisorClass::basis(3); }

// The Gram matrix of the intersection pairing in the basis (D1..D4).
const std::array<std::array<Integer, 4>, 4>& gram_matrix();

// v^T J w
Integer pair(const DivisorClass& a, const DivisorClass& b);

// An integer matrix acting on coordinate column vectors.  The checked
// constructor enforces M^T J M = J.
class LatticeIsometry {
 public:
  using Matrix = std::array<std::array<Integer, 4>, 4>;

  // Unchecked raw matrix; use is_isometry / checked to validate.
  static LatticeIsometry unchecked(Matrix m) { return LatticeIsometry(std::move(m)); }
  static LatticeIsometry checked(Matrix m);
  static LatticeIsometry identity();

  static bool is_isometry(const Matrix& m);

  const Matrix& matrix() const { return m_; }
  bool preserves_form() const { return is_isometry(m_); }

  DivisorClass apply(const DivisorClass& d) const;
  LatticeIsometry inverse() const;  // via the adjugate; det must be +-1

  std::vector<std::int64_t> row_major() const;

  friend LatticeIsometry operator*(const LatticeIsometry& a,
                                   const LatticeIsometry& b);
  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) {
    return a.m_ == b.m_;
  }

 private:
  explicit LatticeIsometry(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

// The paper's generators of O'', as column-action matrices.  Each accessor
// validates the form-preservation and documented fixed points once.
const LatticeIsometry& iso_U();
const LatticeIsometry& iso_T1();
const LatticeIsometry& iso_T2();
const LatticeIsometry& iso_T3();  // = U T2 U
const LatticeIsometry& iso_T4();

// Breadth-first closure of {D4} under the generators and their inverses,
// truncated at the given word length; sorted lexicographically.
std::vector<DivisorClass> orbit_of_D4(
    const std::vector<LatticeIsometry>& generators, int word_length_bound);

// C_m = (T2 T4 T3 T4)^m D4
DivisorClass cm_class(int m);

// Exact squared cosh of the hyperbolic distance between the rays of A and B:
// (A.B)^2 / ((A.A)(B.B)).  Throws unless both self-pairings are positive.
Rational squared_cosh(const DivisorClass& A, const DivisorClass& B);

// A 4x4 rational matrix, for reflections.
struct RationalMatrix {
  std::array<std::array<Rational, 4>, 4> m{};

  bool integral() const;
  LatticeIsometry to_integer() const;  // throws if not integral

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.m == b.m;
  }

  std::array<Rational, 4> apply(const std::array<Rational, 4>& x) const;
};

RationalMatrix to_rational(const LatticeIsometry& m);

// R_a(x) = x - (2 a.x / a.a) a; requires a.a != 0.
RationalMatrix reflection(const DivisorClass& a);

// The paper's sigma_4 lemma: reflections fixing D1 and D4 pointwise-on-l
// have a = (-4a2-4a3, a2, a3, -2a2-2a3); integrality of R_a(D2) forces
// k = 2(a3^2-a2^2)/(2a2^2+3a2a3+2a3^2) to be an integer with -5k^2+16 a
// perfect square, so k = 0 and R_a is U or T4 U.
struct Sigma4Candidate {
  std::int64_t k = 0;
  std::int64_t disc = 0;  // -5k^2 + 16
  bool disc_is_square = false;
};

struct Sigma4Report {
  std::vector<Sigma4Candidate> candidates;  // all k with -5k^2+16 >= 0
  std::vector<std::string> reflection_names;  // names of the surviving R_a
  std::vector<LatticeIsometry> reflections;   // the matrices, in name order
};

Sigma4Report classify_sigma4_reflections();

// ---- ambient P^1 x P^1 x P^1 divisor calculus ----

// An integer (or t-symbolic) combination of the curve classes B1,B2,B3 and
// the surface classes B1',B2',B3'.
struct AmbientClass {
  std::array<UniPoly<Rational>, 3> curve;  // coefficients of B1,B2,B3
  std::array<UniPoly<Rational>, 3> surf;   // coefficients of B1',B2',B3'

  bool pure_curve() const;
  bool pure_surface() const;

  friend AmbientClass operator+(const AmbientClass& a, const AmbientClass& b);
  friend AmbientClass operator-(const AmbientClass& a, const AmbientClass& b);
};

AmbientClass ambient_curve(const UniPoly<Rational>& c1,
                           const UniPoly<Rational>& c2,
                           const UniPoly<Rational>& c3);
AmbientClass ambient_surface(const UniPoly<Rational>& s1,
                             const UniPoly<Rational>& s2,
                             const UniPoly<Rational>& s3);

// Bi'.Bj' = Bk for {i,j,k} = {1,2,3}, Bi'.Bi' = 0: surface x surface gives a
// curve class.
AmbientClass surface_product(const AmbientClass& a, const AmbientClass& b);

// Bi.Bj' = delta_ij: curve x surface gives a scalar (symbolic in t).
UniPoly<Rational> curve_surface_pair(const AmbientClass& a,
                                     const AmbientClass& b);

struct AmbientCheck {
  AmbientClass XY;            // [X].[Y] = 4B1 + (2r+2)B2 + (2r+2)B3
  AmbientClass M;             // [X].[Y] - [D2] - [L], with [L] symbolic in t
  UniPoly<Rational> pairing;  // [M].(B2'-B3'); must be the constant 2
};

AmbientCheck ambient_pairing_check(int r);

}  // namespace k3
