#pragma once

// Linear normalization of a plane polynomial map and its projective
// decomposition around the line at infinity.

#include <array>
#include <string>
#include <vector>

#include "asymvar/bipoly.hpp"

namespace asymvar {

/// [[a, b], [c, d]] acting on column vectors.
struct Matrix2 {
  Rational a = 1, b = 0, c = 0, d = 1;

  Rational det() const { return a * d - b * c; }
  Matrix2 inverse() const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  std::string to_string() const;

  template <class T>
  std::array<T, 2> apply(const T& u, const T& v) const {
    return {TowerElement(a) * u + TowerElement(b) * v, TowerElement(c) * u + TowerElement(d) * v};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);

struct PolyMap {
  BiPoly p, q;

  int degree() const { return std::max(p.total_degree(), q.total_degree()); }
  BiPoly jacobian() const { return p.dx() * q.dy() - p.dy() * q.dx(); }
  /// True when the Jacobian determinant is a nonzero constant.
  bool is_keller() const {
    BiPoly j = jacobian();
    return !j.is_zero() && j.is_constant();
  }
  /// F(a, b).
  std::array<LaurentBiPoly, 2> compose(const LaurentBiPoly& a, const LaurentBiPoly& b) const;
  std::array<BiPoly, 2> compose(const BiPoly& a, const BiPoly& b) const;
  friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

/// F o l, with l acting on the source coordinates (X, Y).
PolyMap compose_source(const PolyMap& f, const Matrix2& l);
/// m . F.
PolyMap compose_target(const Matrix2& m, const PolyMap& f);

struct NormalizedMap {
  PolyMap g;
  Matrix2 m;  // target side
  Matrix2 l;  // source side
  int n = 0;
};

/// Smallest (l, m) in the fixed enumeration with g = m . (F o l) having
/// nonzero Y^n coefficients in both coordinates, n = deg F. The enumeration
/// tries l in order identity, shears (X + lY, Y) for l = 1, -1, 2, -2, ...,
/// then the swap; for each l, m runs over identity and then the elementary
/// additions [[1, c], [0, 1]], [[1, 0], [c, 1]] for c = 1, -1, 2, ...
NormalizedMap normalize_degrees(const PolyMap& f, int bound = 8);

/// A[j] is the pair of coefficients of U^j in U^n g(1/U, V/U).
struct HomDecomp {
  int n = 0;
  std::vector<std::array<UniPoly, 2>> a;
};

HomDecomp projectivize(const NormalizedMap& nm);

}  // namespace asymvar
