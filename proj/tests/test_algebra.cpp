#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

TEST_CASE("gcd examples") {
  CHECK(gcd(uy("Y^2 - 1"), uy("Y - 1")) == uy("Y - 1"));
  CHECK(gcd(uy("2*Y^2 + 4"), UniPoly()) == uy("Y^2 + 2"));
  CHECK(gcd(uy("Y + Y^2"), uy("Y + Y^2")) == uy("Y^2 + Y"));
}

TEST_CASE("resultant examples") {
  // Three variables: coefficients of the eliminated X lie in Q[U][Y].
  using P3 = Poly<Poly<UniPoly>>;
  auto var_u = Poly<UniPoly>(UniPoly::variable());
  auto var_y = Poly<UniPoly>(std::vector<UniPoly>{UniPoly(), UniPoly(1)});
  // Res_X(X - U, X*Y - 3), checked against the 2x2 determinant.
  P3 f(std::vector<Poly<UniPoly>>{-var_u, Poly<UniPoly>(1)});
  P3 g(std::vector<Poly<UniPoly>>{Poly<UniPoly>(-3), var_y});
  // det [[1, -U], [Y, -3]] = -3 + U*Y
  CHECK(resultant(f, g) == var_u * var_y - Poly<UniPoly>(3));

  BiPoly a = xy("X^2 - 5"), b = xy("X*Y - 2");
  // det [[1,0,-5],[Y,-2,0],[0,Y,-2]] = 4 - 5*Y^2
  CHECK(resultant(a, b, Var::X) == uy("4 - 5*Y^2"));
  BiPoly f2 = xy("X*Y^2 + Y + 1");
  CHECK(resultant(f2, f2, Var::Y).is_zero_poly());
  CHECK_THROWS_AS(resultant(xy("X"), xy("X + 1"), Var::Y), BothDegreeZero);
  // deg_Y of X is 0, so the resultant is X^(deg_Y of the other) = X^2.
  CHECK(from_x(resultant(xy("X"), xy("Y^2 + X"), Var::Y)) == xy("X^2"));
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(uy("(Y - 1)^2*(Y + 2)")) == uy("(Y - 1)*(Y + 2)"));
  CHECK(squarefree_part(uy("2*Y + 4")) == uy("Y + 2"));
  CHECK(squarefree_part(uy("Y^3 + Y^2")) == uy("Y^2 + Y"));
}

TEST_CASE("roots with multiplicity") {
  auto r = roots_with_multiplicity(uy("Y + Y^2"));
  REQUIRE(r.size() == 2);
  CHECK(r[0].root == TowerElement(-1));
  CHECK(r[1].root == TowerElement(0));
  CHECK(r[0].multiplicity == 1);

  auto sq = roots_with_multiplicity(uy("Y^2"));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].root.is_zero());
  CHECK(sq[0].multiplicity == 2);

  auto cube = roots_with_multiplicity(uy("Y^3 + 1"));
  REQUIRE(cube.size() == 3);
  CHECK(cube[0].root == TowerElement(-1));
  TowerPtr n = cube[1].root.node();
  REQUIRE(n);
  CHECK(n->height() == 1);
  CHECK(describe_tower(n) == std::vector<std::string>{"t1: t1^2 - t1 + 1 = 0"});
  CHECK((cube[1].root + cube[2].root) == TowerElement(1));
  CHECK((cube[1].root * cube[2].root) == TowerElement(1));
}

TEST_CASE("tower height limit") {
  CHECK_THROWS_AS(roots_with_multiplicity(uy("Y^5 - 2"), 2), TowerDepthExceeded);
  auto r = roots_with_multiplicity(uy("Y^3 - 2"), 3);
  CHECK(r.size() == 3);
}

TEST_CASE("bivariate gcd and squarefree") {
  CHECK(gcd(uv("U^2 - V^2"), uv("U*V + V^2")) == uv("U + V"));
  CHECK(gcd(uv("U"), uv("V")) == uv("1"));
  CHECK(squarefree_part(uv("U^2*(V^2 - U^3)^3")) == uv("U*V^2 - U^4"));
  // The first coefficient in ascending (i, j) order belongs to V.
  CHECK(normalize(uv("-2*U + 4*V")) == uv("2*V - U"));
  CHECK(normalize(uv("U - V")) == uv("V - U"));
  CHECK(normalize(uv("-3/2*U^2 - 1/2")) == uv("3*U^2 + 1"));
}

TEST_CASE("common zeros") {
  ZeroSet z = common_zeros({uv("V^2 - U^3"), uv("-3*U^2"), uv("2*V")});
  REQUIRE(z.finite);
  REQUIRE(z.points.size() == 1);
  CHECK(z.points[0].x.is_zero());
  CHECK(z.points[0].y.is_zero());

  CHECK(common_zeros({uv("U"), uv("1")}).points.empty());
  CHECK(common_zeros({uv("U^2 + V^2 - 1"), uv("2*U"), uv("2*V")}).points.empty());

  ZeroSet circle_line = common_zeros({uv("U^2 + V^2 - 2"), uv("U - V")});
  CHECK(circle_line.points.size() == 2);
  ZeroSet curve = common_zeros({uv("U*V"), uv("U^2")});
  CHECK(!curve.finite);
  CHECK(curve.curve == uv("U"));
}
