#include "asymvar/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace asymvar {

namespace {

// Sign and printed magnitude of c * mono.
std::pair<bool, std::string> signed_term(const TowerElement& c, const std::string& mono) {
  bool negative = false;
  std::string coeff;
  if (c.is_rational()) {
    Rational q = c.to_rational();
    negative = sgn(q) < 0;
    Rational mag = abs(q);
    if (!(mag == 1 && !mono.empty())) coeff = mag.get_str();
  } else if (c.is_compound()) {
    coeff = "(" + c.to_string() + ")";
  } else {
    coeff = c.to_string();
    if (coeff[0] == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
  }
  if (coeff.empty()) return {negative, mono};
  if (mono.empty()) return {negative, coeff};
  return {negative, coeff + "*" + mono};
}

}  // namespace

std::string monomial_string(int i, int j, const std::string& x, const std::string& y) {
  std::string out;
  if (i != 0) out = i == 1 ? x : x + "^" + std::to_string(i);
  if (j != 0) {
    if (!out.empty()) out += "*";
    out += j == 1 ? y : y + "^" + std::to_string(j);
  }
  return out;
}

template <bool Laurent>
std::string BasicBiPoly<Laurent>::to_string(const std::string& x, const std::string& y) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, const TowerElement*>> order;
  for (const auto& [e, c] : terms_) order.emplace_back(e, &c);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : order) {
    auto [neg, text] = signed_term(*c, monomial_string(e.first, e.second, x, y));
    if (out.empty()) out = (neg ? "-" : "") + text;
    else out += (neg ? " - " : " + ") + text;
  }
  return out;
}

std::string to_string(const UniPoly& p, const std::string& var) { return from_y(p).to_string("X", var); }

template class BasicBiPoly<false>;
template class BasicBiPoly<true>;

LaurentBiPoly to_laurent(const BiPoly& p) {
  LaurentBiPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.first, e.second, c);
  return r;
}

BiPoly to_polynomial(const LaurentBiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.first < 0)
      throw NegativePowerResidue("term " + LaurentBiPoly::monomial(c, e.first, e.second).to_string() +
                                 " has X-exponent " + std::to_string(e.first));
    r.add_term(e.first, e.second, c);
  }
  return r;
}

namespace {

template <class Out, class In>
Out compose_impl(const BiPoly& p, const In& a, const In& b) {
  std::vector<Out> pa{Out(1)}, pb{Out(1)};
  Out r;
  for (const auto& [e, c] : p.terms()) {
    while (pa.size() <= static_cast<std::size_t>(e.first)) pa.push_back(pa.back() * a);
    while (pb.size() <= static_cast<std::size_t>(e.second)) pb.push_back(pb.back() * b);
    r += c * (pa[static_cast<std::size_t>(e.first)] * pb[static_cast<std::size_t>(e.second)]);
  }
  return r;
}

}  // namespace

LaurentBiPoly compose(const BiPoly& p, const LaurentBiPoly& a, const LaurentBiPoly& b) {
  return compose_impl<LaurentBiPoly>(p, a, b);
}

BiPoly compose(const BiPoly& p, const BiPoly& a, const BiPoly& b) { return compose_impl<BiPoly>(p, a, b); }

BiPoly from_x(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term(i, 0, p.coeffs()[static_cast<std::size_t>(i)]);
  return r;
}

BiPoly from_y(const UniPoly& p) {
  BiPoly r;
  for (int j = 0; j <= p.degree(); ++j) r.add_term(0, j, p.coeffs()[static_cast<std::size_t>(j)]);
  return r;
}

Poly<UniPoly> to_nested_y(const BiPoly& p) {
  std::vector<UniPoly> v(static_cast<std::size_t>(std::max(p.degree_y(), -1) + 1));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e.second)] += UniPoly::monomial(c, e.first);
  return Poly<UniPoly>(std::move(v));
}

BiPoly from_nested_y(const Poly<UniPoly>& p) {
  BiPoly r;
  for (int j = 0; j <= p.degree(); ++j) {
    const UniPoly& cj = p.coeffs()[static_cast<std::size_t>(j)];
    for (int i = 0; i <= cj.degree(); ++i) r.add_term(i, j, cj.coeffs()[static_cast<std::size_t>(i)]);
  }
  return r;
}

Poly<UniPoly> to_nested_x(const BiPoly& p) {
  std::vector<UniPoly> v(static_cast<std::size_t>(std::max(p.degree_x(), -1) + 1));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e.first)] += UniPoly::monomial(c, e.second);
  return Poly<UniPoly>(std::move(v));
}

BiPoly from_nested_x(const Poly<UniPoly>& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    const UniPoly& ci = p.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= ci.degree(); ++j) r.add_term(i, j, ci.coeffs()[static_cast<std::size_t>(j)]);
  }
  return r;
}

}  // namespace asymvar
