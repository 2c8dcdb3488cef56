#pragma once

// Dense univariate polynomials over an arbitrary coefficient ring R.
//
// R must be default-constructible to zero, constructible from an integer, and
// provide `is_zero(const R&)`. Field algorithms (divrem, gcd) additionally need
// `inverse(const R&)`; ring algorithms (exact_div, pseudo_rem) need
// `exact_div(const R&, const R&)`. All are found by argument-dependent lookup,
// so nested rings such as Poly<Poly<TowerElement>> work unchanged.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "asymvar/errors.hpp"

namespace asymvar {

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  template <std::integral I>
  Poly(I value) : Poly(R(value)) {}
  Poly(const R& constant) {
    if (!is_zero(constant)) c_.push_back(constant);
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const R& c, int deg) {
    if (is_zero(c)) return {};
    std::vector<R> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(R(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const R& lc() const { return c_.back(); }
  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return R();
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<R>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  void set_coeff(int i, const R& value) {
    if (i >= static_cast<int>(c_.size())) {
      if (is_zero(value)) return;
      c_.resize(static_cast<std::size_t>(i) + 1);
    }
    c_[static_cast<std::size_t>(i)] = value;
    trim();
  }

  /// Horner evaluation. S may be any ring that R promotes into.
  template <class S>
  S evaluate(const S& x) const {
    S acc = S();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }
  R operator()(const R& x) const { return evaluate<R>(x); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const R& s) {
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Multiply by x^k.
  Poly shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<R> v(c_.size() + static_cast<std::size_t>(k));
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return Poly(std::move(v));
  }

  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

 private:
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero_poly();
}

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned exp) {
  Poly<R> result(R(1));
  Poly<R> b = base;
  while (exp) {
    if (exp & 1u) result = result * b;
    exp >>= 1u;
    if (exp) b = b * b;
  }
  return result;
}

/// p(q(x)).
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<R>(p.coeff(i));
  return acc;
}

// ---------------------------------------------------------------------------
// Field algorithms.

template <class R>
Poly<R> make_monic(const Poly<R>& p) {
  if (p.is_zero_poly()) return p;
  return p * inverse(p.lc());
}

template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<R>(), a};
  const R inv_lc = inverse(b.lc());
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    R q = rem[static_cast<std::size_t>(k + db)] * inv_lc;
    quo[static_cast<std::size_t>(k)] = q;
    if (is_zero(q)) continue;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k + i)] = rem[static_cast<std::size_t>(k + i)] - q * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divrem(a, b).second;
}

/// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero_poly()) {
    b = make_monic(b);
    Poly<R> r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
template <class R>
std::pair<Poly<R>, Poly<R>> half_ext_gcd(const Poly<R>& a, const Poly<R>& m) {
  Poly<R> r0 = m, r1 = a % m;
  Poly<R> s0, s1(R(1));
  while (!r1.is_zero_poly()) {
    R inv = inverse(r1.lc());
    r1 *= inv;
    s1 *= inv;
    auto [q, r] = divrem(r0, r1);
    Poly<R> s = s0 - q * s1;
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  if (!r0.is_zero_poly()) {
    R inv = inverse(r0.lc());
    r0 *= inv;
    s0 *= inv;
  }
  return {r0, s0 % m};
}

// ---------------------------------------------------------------------------
// Ring algorithms (exact division in integral domains such as K[x][y]).

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero_poly()) return {};
  if (a.degree() < b.degree()) throw InexactDivision("degree of divisor exceeds dividend");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    const R& top = rem[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    R q = exact_div(top, b.lc());
    quo[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k + i)] = rem[static_cast<std::size_t>(k + i)] - q * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < db; ++i)
    if (!is_zero(rem[static_cast<std::size_t>(i)])) throw InexactDivision("nonzero remainder");
  return Poly<R>(std::move(quo));
}

/// Divides every coefficient exactly by s.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const R& s) {
  std::vector<R> v = a.coeffs();
  for (auto& c : v) c = exact_div(c, s);
  return Poly<R>(std::move(v));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero_poly()) throw std::domain_error("pseudo-remainder by zero");
  Poly<R> r = a;
  const int db = b.degree();
  int e = a.degree() - db + 1;
  if (e <= 0) return r;
  const R& lb = b.lc();
  while (!r.is_zero_poly() && r.degree() >= db) {
    Poly<R> t = Poly<R>::monomial(r.lc(), r.degree() - db);
    r = r * lb - t * b;
    --e;
  }
  R f = R(1);
  for (int i = 0; i < e; ++i) f = f * lb;
  return r * f;
}

}  // namespace asymvar
