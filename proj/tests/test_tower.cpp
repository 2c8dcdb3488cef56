#include <doctest.h>

#include "asymvar/tower.hpp"

using namespace asymvar;

namespace {

UniPoly up(std::initializer_list<long> c) {
  std::vector<TowerElement> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("rational inverse") {
  CHECK(TowerElement(2).inverse() == TowerElement(Rational(1, 2)));
  CHECK_THROWS_AS(TowerElement(0).inverse(), std::domain_error);
}

TEST_CASE("inverse in a quadratic field") {
  TowerPtr n = TowerNode::make(nullptr, up({-2, 0, 1}));
  TowerElement t = TowerElement::generator(n);
  TowerElement inv = t.inverse();
  CHECK(inv == t * TowerElement(Rational(1, 2)));
  CHECK((t * t) == TowerElement(2));
  TowerElement x = TowerElement(3) + t * TowerElement(5);
  CHECK((x * x.inverse()).is_one());
}

TEST_CASE("zero divisor splits the level") {
  TowerPtr n = TowerNode::make(nullptr, up({-1, 0, 1}));
  TowerElement t = TowerElement::generator(n);
  TowerElement z = t - TowerElement(1);
  bool thrown = false;
  try {
    (void)z.inverse();
  } catch (const ZeroDivisorSplit& s) {
    thrown = true;
    CHECK(s.first().degree() + s.second().degree() == 2);
    auto maps = s.branches(n);
    REQUIRE(maps.size() == 2);
    std::vector<Rational> images;
    for (const auto& m : maps) {
      TowerElement img = m(t);
      CHECK(img.is_rational());
      images.push_back(img.to_rational());
      CHECK(m(t * t - TowerElement(1)).is_zero());
    }
    CHECK(images[0] + images[1] == 0);
  }
  CHECK(thrown);
}

TEST_CASE("split below a higher level maps the whole tower") {
  TowerPtr n1 = TowerNode::make(nullptr, up({-1, 0, 1}));
  TowerElement t1 = TowerElement::generator(n1);
  UniPoly m2({TowerElement(-2) * t1, TowerElement(0), TowerElement(1)});
  TowerPtr n2 = TowerNode::make(n1, m2);
  TowerElement t2 = TowerElement::generator(n2);
  CHECK((t2 * t2) == TowerElement(2) * t1);
  TowerElement z = (t1 - TowerElement(1)) * t2;
  try {
    (void)z.inverse();
    FAIL("expected split");
  } catch (const ZeroDivisorSplit& s) {
    CHECK(s.node() == n1);
    for (const auto& m : s.branches(n2)) {
      TowerElement a = m(t2), b = m(t1);
      CHECK((a * a) == TowerElement(2) * b);
      CHECK(m(z * z).is_zero() == m(t1 - TowerElement(1)).is_zero());
    }
  }
}

TEST_CASE("gcd over the rationals") {
  CHECK(gcd(up({-1, 0, 1}), up({-1, 1})) == up({-1, 1}));
  CHECK(gcd(up({0, 1, 1}), up({0, 1, 1})) == up({0, 1, 1}));
}

TEST_CASE("printing") {
  TowerPtr n = TowerNode::make(nullptr, up({1, -1, 1}));
  TowerElement t = TowerElement::generator(n);
  CHECK((TowerElement(1) - t).to_string() == "1 - t1");
  CHECK(describe_tower(n) == std::vector<std::string>{"t1: t1^2 - t1 + 1 = 0"});
  CHECK(TowerElement(Rational(-3, 2)).to_string() == "-3/2");
}
