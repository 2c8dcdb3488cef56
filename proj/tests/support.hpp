#pragma once

#include <doctest.h>

#include <initializer_list>
#include <random>
#include <string>

#include "asymvar/algebra.hpp"
#include "asymvar/parser.hpp"

namespace testing_support {

using namespace asymvar;

inline BiPoly xy(const std::string& s) { return parse_polynomial(s); }
inline BiPoly uv(const std::string& s) { return parse_polynomial(s, "U", "V"); }

inline UniPoly up(std::initializer_list<long> c) {
  std::vector<TowerElement> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

/// Univariate polynomial in Y read from text, e.g. "Y^2 - 1".
inline UniPoly uy(const std::string& s) { return parse_polynomial(s).at_x0(); }

inline Rational small_rational(std::mt19937& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline UniPoly random_uni(std::mt19937& rng, int max_degree, int range = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<TowerElement> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(small_rational(rng, range));
  return UniPoly(std::move(c));
}

inline BiPoly random_bi(std::mt19937& rng, int max_degree, int terms, int range = 4) {
  std::uniform_int_distribution<int> e(0, max_degree);
  BiPoly p;
  for (int k = 0; k < terms; ++k) {
    int i = e(rng), j = e(rng);
    if (i + j > max_degree) continue;
    p.add_term(i, j, TowerElement(small_rational(rng, range)));
  }
  return p;
}

}  // namespace testing_support

namespace doctest {
template <>
struct StringMaker<asymvar::BiPoly> {
  static String convert(const asymvar::BiPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<asymvar::UniPoly> {
  static String convert(const asymvar::UniPoly& p) { return asymvar::to_string(p, "Y").c_str(); }
};
template <>
struct StringMaker<asymvar::TowerElement> {
  static String convert(const asymvar::TowerElement& x) { return x.to_string().c_str(); }
};
}  // namespace doctest
