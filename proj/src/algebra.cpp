#include "asymvar/algebra.hpp"

#include <cmath>
#include <deque>
#include <set>

#include "asymvar/numeric.hpp"

namespace asymvar {

// ---------------------------------------------------------------------------
// Univariate

bool is_rational_poly(const UniPoly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero_poly()) throw std::invalid_argument("squarefree part of zero");
  UniPoly g = gcd(f, f.derivative());
  return make_monic(divrem(f, g).first);
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly fp = f.derivative();
  UniPoly a0 = gcd(f, fp);
  UniPoly b = divrem(f, a0).first;
  UniPoly c = divrem(fp, a0).first;
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    UniPoly a = gcd(b, d);
    b = divrem(b, a).first;
    c = divrem(d, a).first;
    d = c - b.derivative();
    if (a.degree() >= 1) out.emplace_back(make_monic(a), i);
  }
  return out;
}

namespace {

Rational eval_rational(const UniPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + it->to_rational();
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.degree() < 1) return {};
  // Integer-primitive copy; a rational root p/q then has q | lc, so lc*root
  // is an integer and it suffices to round lc times each numeric root.
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.to_rational().get_den_mpz_t());
  std::vector<Integer> ic;
  for (const auto& c : f.coeffs()) ic.push_back(Integer(c.to_rational() * den));
  const Integer lc = ic.back();

  std::set<Rational> found;
  if (sgn(ic[0]) == 0) found.insert(Rational(0));
  std::vector<Complex> c;
  for (const auto& x : ic) c.emplace_back(static_cast<long double>(x.get_d()), 0.0L);
  for (const Complex& z : complex_roots(c)) {
    if (std::abs(z.imag()) > 1e-3L * std::max(1.0L, std::abs(z))) continue;
    long double scaled = z.real() * static_cast<long double>(lc.get_d());
    if (!std::isfinite(scaled) || std::abs(scaled) > 1e15L) continue;
    auto k = static_cast<long long>(std::llround(scaled));
    for (long long dk = -1; dk <= 1; ++dk) {
      Rational cand(Integer(static_cast<long>(k + dk)), lc);
      cand.canonicalize();
      if (sgn(eval_rational(f, cand)) == 0) found.insert(cand);
    }
  }
  return {found.begin(), found.end()};
}

namespace {

// Splits a monic squarefree polynomial completely, adjoining levels on top of
// `cur` as needed.
void split_squarefree(UniPoly g, TowerPtr& cur, int height_limit, std::vector<TowerElement>& out) {
  const UniPoly w = UniPoly::variable();
  if (is_rational_poly(g)) {
    for (const Rational& r : rational_roots(g)) {
      out.emplace_back(r);
      g = divrem(g, w - UniPoly(TowerElement(r))).first;
    }
  }
  while (g.degree() >= 1) {
    if (g.degree() == 1) {
      out.push_back(-g.coeff(0) / g.lc());
      return;
    }
    cur = adjoin(cur, make_monic(g), height_limit);
    TowerElement t = TowerElement::generator(cur);
    out.push_back(t);
    g = divrem(g, w - UniPoly(t)).first;
  }
}

}  // namespace

std::vector<RootMult> roots_with_multiplicity(const UniPoly& f, int height_limit, const TowerPtr& base) {
  if (f.degree() < 1) throw std::invalid_argument("roots of a constant polynomial");
  TowerPtr cur = base;
  for (const auto& c : f.coeffs()) cur = common_node(cur, c.node());
  std::vector<RootMult> out;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    std::vector<TowerElement> roots;
    split_squarefree(factor, cur, height_limit, roots);
    for (auto& r : roots) out.push_back({std::move(r), mult});
  }
  for (auto& r : out) r.root = r.root.promoted(cur);
  return out;
}

// ---------------------------------------------------------------------------
// Resultants

UniPoly resultant(const BiPoly& f, const BiPoly& g, Var v) {
  if (v == Var::Y) return resultant(to_nested_y(f), to_nested_y(g));
  return resultant(to_nested_x(f), to_nested_x(g));
}

// ---------------------------------------------------------------------------
// Bivariate

UniPoly content(const Poly<UniPoly>& p) {
  UniPoly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Poly<UniPoly> primitive_part(const Poly<UniPoly>& p) {
  if (p.is_zero_poly()) return p;
  return exact_div(p, content(p));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  Poly<UniPoly> A = to_nested_y(a), B = to_nested_y(b);
  UniPoly c = gcd(content(A), content(B));
  A = primitive_part(A);
  B = primitive_part(B);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero_poly()) {
    Poly<UniPoly> r = pseudo_rem(A, B);
    A = std::move(B);
    B = primitive_part(r);
  }
  A = primitive_part(A);
  return normalize(from_nested_y(A * UniPoly(c)));
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  return from_nested_y(exact_div(to_nested_y(a), to_nested_y(b)));
}

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
  if (p.is_constant()) return normalize(p);
  Poly<UniPoly> nested = to_nested_y(p);
  UniPoly c = content(nested);
  BiPoly pp = from_nested_y(primitive_part(nested));
  BiPoly result = from_x(c.degree() >= 1 ? squarefree_part(c) : UniPoly(TowerElement(1)));
  if (pp.degree_y() >= 1) result *= exact_div(pp, gcd(pp, pp.dy()));
  return normalize(result);
}

BiPoly normalize(const BiPoly& p) {
  if (p.is_zero()) return p;
  if (p.is_rational()) {
    Integer den = 1, num = 0;
    for (const auto& [e, c] : p.terms()) {
      Rational q = c.to_rational();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (sgn(p.terms().begin()->second.to_rational()) < 0) scale = -scale;
    return TowerElement(scale) * p;
  }
  return p.terms().begin()->second.inverse() * p;
}

Point make_point(const TowerElement& x, const TowerElement& y) {
  TowerPtr n = common_node(x.node(), y.node());
  return {x.promoted(n), y.promoted(n)};
}

ZeroSet common_zeros(const std::vector<BiPoly>& system, int height_limit, const TowerPtr& base) {
  ZeroSet out;
  std::vector<BiPoly> sys;
  for (const auto& p : system)
    if (!p.is_zero()) sys.push_back(p);
  if (sys.empty()) {
    out.finite = false;
    return out;
  }
  for (const auto& p : sys)
    if (p.is_constant()) return out;
  BiPoly g = sys[0];
  for (std::size_t i = 1; i < sys.size() && !g.is_constant(); ++i) g = gcd(g, sys[i]);
  if (!g.is_constant()) {
    out.finite = false;
    out.curve = g;
    return out;
  }

  const BiPoly& a = sys[0];
  BiPoly b;
  bool found = false;
  for (int lambda = 0; lambda <= 30 && !found; ++lambda) {
    b = BiPoly();
    TowerElement w(1);
    for (std::size_t i = 1; i < sys.size(); ++i) {
      b += w * sys[i];
      w *= TowerElement(lambda);
    }
    if (!b.is_zero() && gcd(a, b).is_constant()) found = true;
  }
  if (!found) throw std::logic_error("no coprime combination for common zeros");
  if (a.degree_y() == 0 && b.degree_y() == 0) return out;
  UniPoly r = resultant(a, b, Var::Y);
  // Pairwise eliminants cut away spurious abscissas of the combination.
  for (std::size_t i = 0; i < sys.size() && r.degree() >= 1; ++i)
    for (std::size_t j = i + 1; j < sys.size() && r.degree() >= 1; ++j) {
      if (sys[i].degree_y() == 0 && sys[j].degree_y() == 0) continue;
      if (!gcd(sys[i], sys[j]).is_constant()) continue;
      r = gcd(r, resultant(sys[i], sys[j], Var::Y));
    }
  if (r.degree() < 1) return out;

  struct Item {
    TowerElement x;
    std::vector<BiPoly> sys;
  };
  std::deque<Item> work;
  for (auto& rm : roots_with_multiplicity(r, height_limit, base)) work.push_back({rm.root.promoted(common_node(base, rm.root.node())), sys});
  while (!work.empty()) {
    Item item = std::move(work.front());
    work.pop_front();
    try {
      UniPoly h;
      for (const auto& p : item.sys) h = gcd(h, p.eval_x(item.x));
      if (h.degree() < 1) continue;
      for (const auto& rm : roots_with_multiplicity(h, height_limit, item.x.node())) out.points.push_back(make_point(item.x, rm.root));
    } catch (const ZeroDivisorSplit& split) {
      TowerPtr target = common_node(base, item.x.node());
      for (const auto& p : item.sys) target = common_node(target, p.node());
      Item base{item.x.promoted(target), item.sys};
      for (const TowerMap& m : split.branches(target)) {
        Item next{m(base.x), {}};
        for (const auto& p : base.sys) next.sys.push_back(p.map_coeffs([&](const TowerElement& c) { return m(c); }));
        work.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace asymvar
