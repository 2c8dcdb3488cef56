#include "asymvar/normal_form.hpp"

namespace asymvar {

Matrix2 Matrix2::inverse() const {
  const Rational det_value = det();
  if (det_value == 0) throw std::domain_error("singular linear change");
  return {d / det_value, -b / det_value, -c / det_value, a / det_value};
}

std::string Matrix2::to_string() const {
  return "[[" + a.get_str() + ", " + b.get_str() + "], [" + c.get_str() + ", " + d.get_str() + "]]";
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::array<LaurentBiPoly, 2> PolyMap::compose(const LaurentBiPoly& a, const LaurentBiPoly& b) const {
  return {asymvar::compose(p, a, b), asymvar::compose(q, a, b)};
}

std::array<BiPoly, 2> PolyMap::compose(const BiPoly& a, const BiPoly& b) const {
  return {asymvar::compose(p, a, b), asymvar::compose(q, a, b)};
}

PolyMap compose_source(const PolyMap& f, const Matrix2& l) {
  auto [x, y] = l.apply(BiPoly::x(), BiPoly::y());
  auto [p, q] = f.compose(x, y);
  return {p, q};
}

PolyMap compose_target(const Matrix2& m, const PolyMap& f) {
  auto [p, q] = m.apply(f.p, f.q);
  return {p, q};
}

namespace {

std::vector<int> small_integers(int bound) {
  std::vector<int> out;
  for (int k = 1; k <= bound; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

}  // namespace

NormalizedMap normalize_degrees(const PolyMap& f, int bound) {
  const int n = f.degree();
  if (n < 1) throw NormalizationFailed("map is constant");
  if (f.p.is_zero() || f.q.is_zero()) throw NormalizationFailed("a coordinate is identically zero");

  std::vector<Matrix2> ls{Matrix2{}};
  for (int lambda : small_integers(bound)) ls.push_back({1, lambda, 0, 1});
  ls.push_back({0, 1, 1, 0});
  std::vector<Matrix2> ms{Matrix2{}};
  for (int c : small_integers(bound)) {
    ms.push_back({1, c, 0, 1});
    ms.push_back({1, 0, c, 1});
  }

  for (const Matrix2& l : ls) {
    PolyMap fl = compose_source(f, l);
    for (const Matrix2& m : ms) {
      PolyMap g = compose_target(m, fl);
      if (!g.p.coeff(0, n).is_zero() && !g.q.coeff(0, n).is_zero()) return {g, m, l, n};
    }
  }
  throw NormalizationFailed("no linear change within bound " + std::to_string(bound) + " gives the Y-degree condition");
}

HomDecomp projectivize(const NormalizedMap& nm) {
  HomDecomp hd;
  hd.n = nm.n;
  hd.a.resize(static_cast<std::size_t>(nm.n) + 1);
  const BiPoly* coords[2] = {&nm.g.p, &nm.g.q};
  for (int k = 0; k < 2; ++k) {
    std::vector<std::vector<TowerElement>> cols(static_cast<std::size_t>(nm.n) + 1);
    for (const auto& [e, c] : coords[k]->terms()) {
      const int j = nm.n - (e.first + e.second);
      auto& v = cols[static_cast<std::size_t>(j)];
      if (v.size() <= static_cast<std::size_t>(e.second)) v.resize(static_cast<std::size_t>(e.second) + 1);
      v[static_cast<std::size_t>(e.second)] = c;
    }
    for (int j = 0; j <= nm.n; ++j) hd.a[static_cast<std::size_t>(j)][k] = UniPoly(std::move(cols[static_cast<std::size_t>(j)]));
  }
  return hd;
}

}  // namespace asymvar
