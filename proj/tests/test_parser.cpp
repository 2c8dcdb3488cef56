#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

TEST_CASE("parses rational literals and powers") {
  BiPoly p = xy("X^2*Y - 3/2");
  CHECK(p.coeff(2, 1) == TowerElement(1));
  CHECK(p.coeff(0, 0) == TowerElement(Rational(-3, 2)));
  CHECK(p.terms().size() == 2);
}

TEST_CASE("expands powers of sums") {
  CHECK(xy("(X + Y)^3") == xy("X^3 + 3*X^2*Y + 3*X*Y^2 + Y^3"));
  CHECK(xy("-X^2") == BiPoly::monomial(TowerElement(-1), 2, 0));
  CHECK(xy("2 - -X") == xy("X + 2"));
}

TEST_CASE("parse errors carry their kind") {
  CHECK_THROWS_AS(xy("X^-1"), NegativeExponent);
  CHECK_THROWS_AS(xy("X + Z"), UnknownVariable);
  CHECK_THROWS_AS(xy("2X"), SyntaxError);
  CHECK_THROWS_AS(xy("(X + 1"), SyntaxError);
  CHECK_THROWS_AS(xy("X^"), SyntaxError);
  try {
    xy("X + * Y");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("serialization round-trips") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    BiPoly p = random_bi(rng, 6, 8);
    CHECK(xy(p.to_string()) == p);
  }
  CHECK(xy("Y - X^2*Y^2 + 3/2*X").to_string() == "-X^2*Y^2 + 3/2*X + Y");
}
