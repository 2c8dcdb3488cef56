#include "asymvar/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace asymvar {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (std::size_t i = c.size() - 1; i >= 1; --i) acc = acc * z + c[i] * static_cast<long double>(i);
  return acc;
}

long double to_ld(const Rational& q) { return static_cast<long double>(q.get_d()); }

}  // namespace

std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && c.back() == Complex(0)) c.pop_back();
  if (c.size() < 2) return {};
  const std::size_t n = c.size() - 1;
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;

  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  bound += 1;

  std::vector<Complex> z(n);
  const Complex seed(0.4L, 0.9L);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<long double>(i)) * (bound / 2);

  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == Complex(0)) denom = 1e-30L;
      Complex step = horner(c, z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (change < 1e-18L) break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      Complex d = horner_derivative(c, r);
      if (d == Complex(0)) break;
      r -= horner(c, r) / d;
    }
  }
  return z;
}

const std::vector<Complex>& NumericEmbedding::generators(const TowerPtr& node) {
  auto it = cache_.find(node->serial());
  if (it != cache_.end()) return it->second;
  std::vector<Complex> below;
  if (node->parent()) below = generators(node->parent());
  std::vector<Complex> c;
  for (const auto& coeff : node->defining().coeffs()) c.push_back((*this)(coeff));
  std::vector<Complex> roots = complex_roots(c);
  if (roots.empty()) throw std::logic_error("tower level without roots");
  below.push_back(roots.front());
  keep_alive_.push_back(node);
  return cache_.emplace(node->serial(), std::move(below)).first->second;
}

Complex NumericEmbedding::operator()(const TowerElement& x) {
  if (!x.node()) return to_ld(x.coeffs()[0]);
  const std::vector<Complex>& gens = generators(x.node());
  std::vector<const TowerNode*> chain = x.node()->chain();
  Complex sum = 0;
  auto c = x.coeffs();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (sgn(c[idx]) == 0) continue;
    Complex term = to_ld(c[idx]);
    std::size_t rest = idx;
    for (std::size_t level = 0; level < chain.size(); ++level) {
      const auto d = static_cast<std::size_t>(chain[level]->degree());
      std::size_t e = rest % d;
      rest /= d;
      for (std::size_t k = 0; k < e; ++k) term *= gens[level];
    }
    sum += term;
  }
  return sum;
}

}  // namespace asymvar
