#pragma once

// Sparse bivariate polynomials over a tower. BiPoly has exponents in N x N;
// LaurentBiPoly allows negative exponents in the first variable only.

#include <map>
#include <string>
#include <utility>

#include "asymvar/tower.hpp"

namespace asymvar {

using Exponent = std::pair<int, int>;

template <bool Laurent>
class BasicBiPoly {
 public:
  using Terms = std::map<Exponent, TowerElement>;

  BasicBiPoly() = default;
  BasicBiPoly(const TowerElement& c) { add_term(0, 0, c); }
  BasicBiPoly(int c) : BasicBiPoly(TowerElement(c)) {}

  static BasicBiPoly monomial(const TowerElement& c, int i, int j) {
    BasicBiPoly p;
    p.add_term(i, j, c);
    return p;
  }
  static BasicBiPoly x() { return monomial(TowerElement(1), 1, 0); }
  static BasicBiPoly y() { return monomial(TowerElement(1), 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}); }
  TowerElement coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? TowerElement() : it->second;
  }
  TowerElement constant_term() const { return coeff(0, 0); }

  void add_term(int i, int j, const TowerElement& c) {
    if constexpr (!Laurent) {
      if (i < 0) throw std::invalid_argument("negative exponent in polynomial");
    }
    if (j < 0) throw std::invalid_argument("negative exponent in second variable");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Max of i+j over the support; -1 for zero.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }
  int degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }
  /// Smallest exponent of the first variable; 0 for the zero polynomial.
  int min_x() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }

  /// True when every coefficient is rational.
  bool is_rational() const {
    for (const auto& [e, c] : terms_)
      if (!c.is_rational()) return false;
    return true;
  }
  /// Deepest tower node among the coefficients.
  TowerPtr node() const {
    TowerPtr n;
    for (const auto& [e, c] : terms_) n = common_node(n, c.node());
    return n;
  }

  BasicBiPoly operator-() const {
    BasicBiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  BasicBiPoly& operator+=(const BasicBiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  BasicBiPoly& operator-=(const BasicBiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  BasicBiPoly& operator*=(const BasicBiPoly& o) { return *this = *this * o; }
  friend BasicBiPoly operator+(BasicBiPoly a, const BasicBiPoly& b) { return a += b; }
  friend BasicBiPoly operator-(BasicBiPoly a, const BasicBiPoly& b) { return a -= b; }
  friend BasicBiPoly operator*(const BasicBiPoly& a, const BasicBiPoly& b) {
    BasicBiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  friend BasicBiPoly operator*(const TowerElement& s, const BasicBiPoly& a) {
    BasicBiPoly r;
    for (const auto& [e, c] : a.terms_) r.add_term(e.first, e.second, s * c);
    return r;
  }
  friend bool operator==(const BasicBiPoly& a, const BasicBiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

  BasicBiPoly pow(unsigned e) const {
    BasicBiPoly result(1), b = *this;
    while (e) {
      if (e & 1u) result *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return result;
  }

  BasicBiPoly dx() const {
    BasicBiPoly r;
    for (const auto& [e, c] : terms_)
      if (e.first != 0) r.add_term(e.first - 1, e.second, TowerElement(e.first) * c);
    return r;
  }
  BasicBiPoly dy() const {
    BasicBiPoly r;
    for (const auto& [e, c] : terms_)
      if (e.second != 0) r.add_term(e.first, e.second - 1, TowerElement(e.second) * c);
    return r;
  }

  /// Multiplies by X^k (k may be negative only for Laurent polynomials, or
  /// when every exponent stays nonnegative).
  BasicBiPoly shifted_x(int k) const {
    BasicBiPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first + k, e.second, c);
    return r;
  }

  /// Coefficients of X^0 as a polynomial in the second variable.
  UniPoly at_x0() const {
    std::vector<TowerElement> v;
    for (const auto& [e, c] : terms_) {
      if (e.first != 0) continue;
      if (v.size() <= static_cast<std::size_t>(e.second)) v.resize(static_cast<std::size_t>(e.second) + 1);
      v[static_cast<std::size_t>(e.second)] = c;
    }
    return UniPoly(std::move(v));
  }
  /// Coefficient of X^i as a polynomial in the second variable.
  UniPoly coeff_x(int i) const {
    std::vector<TowerElement> v;
    for (const auto& [e, c] : terms_) {
      if (e.first != i) continue;
      if (v.size() <= static_cast<std::size_t>(e.second)) v.resize(static_cast<std::size_t>(e.second) + 1);
      v[static_cast<std::size_t>(e.second)] = c;
    }
    return UniPoly(std::move(v));
  }
  /// Coefficient of Y^j as a polynomial in X (requires nonnegative X powers).
  UniPoly coeff_y(int j) const {
    std::vector<TowerElement> v;
    for (const auto& [e, c] : terms_) {
      if (e.second != j) continue;
      if (e.first < 0) throw std::logic_error("coeff_y on a Laurent polynomial with negative powers");
      if (v.size() <= static_cast<std::size_t>(e.first)) v.resize(static_cast<std::size_t>(e.first) + 1);
      v[static_cast<std::size_t>(e.first)] = c;
    }
    return UniPoly(std::move(v));
  }

  /// Substitutes X = x (x must be invertible when negative powers occur).
  UniPoly eval_x(const TowerElement& x) const {
    UniPoly r;
    for (const auto& [e, c] : terms_) {
      TowerElement xp = e.first >= 0 ? x.pow(static_cast<unsigned>(e.first)) : x.inverse().pow(static_cast<unsigned>(-e.first));
      r += UniPoly::monomial(c * xp, e.second);
    }
    return r;
  }
  TowerElement eval(const TowerElement& x, const TowerElement& y) const { return eval_x(x)(y); }

  template <class F>
  BasicBiPoly map_coeffs(F&& f) const {
    BasicBiPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, f(c));
    return r;
  }

  /// Canonical string: graded lexicographic, highest degree first, X before Y.
  std::string to_string(const std::string& x = "X", const std::string& y = "Y") const;

 private:
  Terms terms_;
};

using BiPoly = BasicBiPoly<false>;
using LaurentBiPoly = BasicBiPoly<true>;

LaurentBiPoly to_laurent(const BiPoly& p);
/// Throws NegativePowerResidue when a negative power of X remains.
BiPoly to_polynomial(const LaurentBiPoly& p);

/// p(a, b) for a polynomial p.
LaurentBiPoly compose(const BiPoly& p, const LaurentBiPoly& a, const LaurentBiPoly& b);
BiPoly compose(const BiPoly& p, const BiPoly& a, const BiPoly& b);

/// Univariate polynomial in X (resp. Y) viewed as a bivariate one.
BiPoly from_x(const UniPoly& p);
BiPoly from_y(const UniPoly& p);

/// Recursive view as a polynomial in Y over K[X] and back.
Poly<UniPoly> to_nested_y(const BiPoly& p);
BiPoly from_nested_y(const Poly<UniPoly>& p);
/// Recursive view as a polynomial in X over K[Y] and back.
Poly<UniPoly> to_nested_x(const BiPoly& p);
BiPoly from_nested_x(const Poly<UniPoly>& p);

/// Monomial string like "X^2*Y"; empty for the constant monomial.
std::string monomial_string(int i, int j, const std::string& x, const std::string& y);

}  // namespace asymvar
