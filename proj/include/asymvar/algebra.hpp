#pragma once

// Polynomial algebra over towers: squarefree parts, roots, resultants,
// bivariate gcds and finite common-zero sets.

#include <optional>
#include <vector>

#include "asymvar/bipoly.hpp"

namespace asymvar {

inline constexpr int kDefaultTowerLimit = 3;

// ---------------------------------------------------------------------------
// Univariate

bool is_rational_poly(const UniPoly& f);

/// monic(f / gcd(f, f')).
UniPoly squarefree_part(const UniPoly& f);

/// Yun's algorithm: monic squarefree, pairwise coprime factors with their
/// multiplicities; f = lc(f) * prod factor^multiplicity.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

/// Distinct rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const UniPoly& f);

struct RootMult {
  TowerElement root;
  int multiplicity;
};

/// Every root of f with multiplicity, over a tower extending f's own. Rational
/// roots are found directly; each remaining squarefree factor is split by
/// adjoining one root at a time. New levels are stacked on `base` (which must
/// be compatible with f's coefficients). All roots are returned at the final
/// node.
std::vector<RootMult> roots_with_multiplicity(const UniPoly& f, int height_limit = kDefaultTowerLimit,
                                              const TowerPtr& base = nullptr);

// ---------------------------------------------------------------------------
// Resultants

template <class R>
R determinant_bareiss(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t i = k + 1;
      while (i < n && is_zero(m[i][k])) ++i;
      if (i == n) return R(0);
      std::swap(m[k], m[i]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
  const int df = f.degree(), dg = g.degree();
  const auto n = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<R>> m(n, std::vector<R>(n));
  for (int i = 0; i < dg; ++i)
    for (int k = 0; k <= df; ++k) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + df - k)] = f.coeff(k);
  for (int i = 0; i < df; ++i)
    for (int k = 0; k <= dg; ++k)
      m[static_cast<std::size_t>(dg + i)][static_cast<std::size_t>(i + dg - k)] = g.coeff(k);
  return m;
}

template <class R>
R power(const R& base, int e) {
  R r(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

/// Res(f, g) as the Sylvester determinant; a degree-0 argument c gives
/// c^(degree of the other).
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero_poly() || g.is_zero_poly()) return R(0);
  const int df = f.degree(), dg = g.degree();
  if (df == 0 && dg == 0) throw BothDegreeZero("neither polynomial involves the eliminated variable");
  if (df == 0) return power(f.lc(), dg);
  if (dg == 0) return power(g.lc(), df);
  return determinant_bareiss(sylvester_matrix(f, g));
}

enum class Var { X, Y };

/// Eliminates `v`; the result is a polynomial in the other variable.
UniPoly resultant(const BiPoly& f, const BiPoly& g, Var v);

// ---------------------------------------------------------------------------
// Bivariate

/// Monic gcd of the coefficients (in the inner variable).
UniPoly content(const Poly<UniPoly>& p);
Poly<UniPoly> primitive_part(const Poly<UniPoly>& p);

/// Gcd up to a constant factor (normalized with normalize()).
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Throws InexactDivision when b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
/// Product of the distinct irreducible factors, normalized.
BiPoly squarefree_part(const BiPoly& p);

/// Canonical scalar multiple: with rational coefficients, integer-primitive
/// with the first nonzero coefficient in ascending (i, j) order positive;
/// otherwise that first coefficient is made 1.
BiPoly normalize(const BiPoly& p);

struct Point {
  TowerElement x, y;
};

struct ZeroSet {
  bool finite = true;
  std::vector<Point> points;
  /// Common factor of the system when the set is a curve.
  BiPoly curve;
};

/// Common zeros of a system of bivariate polynomials over the algebraic
/// closure. Points of one ZeroSet may live in different (sibling) towers, all
/// extending `base`.
ZeroSet common_zeros(const std::vector<BiPoly>& system, int height_limit = kDefaultTowerLimit,
                     const TowerPtr& base = nullptr);

/// Runs body(ctx) and, whenever it throws ZeroDivisorSplit, reruns it on the
/// context mapped to each branch. Ctx needs node() and mapped(const TowerMap&).
template <class Ctx, class Body>
void for_each_branch(Ctx ctx, Body&& body) {
  std::vector<Ctx> work{std::move(ctx)};
  while (!work.empty()) {
    Ctx c = std::move(work.back());
    work.pop_back();
    try {
      body(c);
    } catch (const ZeroDivisorSplit& split) {
      auto maps = split.branches(c.node());
      for (auto it = maps.rbegin(); it != maps.rend(); ++it) work.push_back(c.mapped(*it));
    }
  }
}

/// Point stored at the common node of its coordinates.
Point make_point(const TowerElement& x, const TowerElement& y);

}  // namespace asymvar
