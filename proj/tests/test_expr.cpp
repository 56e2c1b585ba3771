#include <doctest.h>

#include <random>

#include "lf2/errors.hpp"
#include "lf2/expr.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("parser examples") {
  CHECK(to_debug_string(parse_expr("1/(u-1)")) == "Div(1, Sub(u, 1))");
  CHECK(to_debug_string(parse_expr("u^-1 + t^2/(u-2)")) == "Add(Pow(u, -1), Div(Pow(t, 2), Sub(u, 2)))");
  CHECK(to_debug_string(parse_expr("-u*t")) == "Mul(Neg(u), t)");
  CHECK(to_debug_string(parse_expr("-u^2")) == "Neg(Pow(u, 2))");
  try {
    parse_expr("u^^2");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_expr("(u + 1"), ParseError);
  CHECK_THROWS_AS(parse_expr("u +"), ParseError);
  CHECK_THROWS_AS(parse_expr("u ? t"), ParseError);
}

TEST_CASE("forms") {
  auto f = parse_form("u^-1*t^-1 du^dt");
  CHECK(f.degree == 2);
  CHECK(f.v1 == "u");
  CHECK(f.v2 == "t");
  CHECK(to_debug_string(f.coeff) == "Mul(Pow(u, -1), Pow(t, -1))");
  auto g = parse_form("(1 + t) dt");
  CHECK(g.degree == 1);
  CHECK(g.v1 == "t");
  CHECK(parse_form("du^dt").degree == 2);
  CHECK(parse_form("u + t").degree == 0);
}

TEST_CASE("evaluation") {
  CHECK(agree(parse_lseries("1/(1-t)", "t", 4), ls("t", {{0, q(1)}, {1, q(1)}, {2, q(1)}, {3, q(1)}}, 4)));
  CHECK(parse_lseries("1/(1-t)", "t", 4).prec() == 4);
  CHECK(agree(parse_lseries("t^-1 + 3 + 2*t^2 + O(t^5)", "t"), ls("t", {{-1, q(1)}, {0, q(3)}, {2, q(2)}}, 5)));
  L2Series a = parse_l2series("1/(u - t)", "u", "t", {6, 3});
  CHECK(agree(a, l2({{-1, 0, q(1)}, {-2, 1, q(1)}, {-3, 2, q(1)}}, 3)));
  // 1/(u - 1) at the origin of the fibre
  L2Series b = parse_l2series("1/(u-1)", "u", "t", {4, 4});
  CHECK(agree(b, l2({{0, 0, q(-1)}, {1, 0, q(-1)}, {2, 0, q(-1)}, {3, 0, q(-1)}}, kExact) +
                     L2Series::inner_big_o("u", "t", 4)));
  auto k = make_extension({Rational(-2), Rational(0), Rational(1)}, "a");
  CHECK(parse_lseries("a*a*t", "t", 8, k) == ls("t", {{1, q(2)}}));
  CHECK_THROWS_AS(parse_lseries("x + t", "t"), InvalidArgument);
}

TEST_CASE("printing and parsing round trip") {
  std::mt19937 rng(99);
  const FieldElem pool[] = {q(0), q(1), q(-1), q(2), q(-2), q(1, 2), q(1, 3)};
  auto k = make_extension({Rational(-2), Rational(0), Rational(1)}, "a");
  const FieldElem alpha = FieldElem::generator(k);
  for (int i = 0; i < 50; ++i) {
    LSeries f("t", 3 + static_cast<int>(rng() % 5));
    for (int e = -2; e < 6; ++e) f += LSeries::monomial("t", pool[rng() % 7], e).truncated(f.prec());
    if (i % 3 == 0) f = (f * LSeries::constant("t", alpha + pool[rng() % 7])).truncated(f.prec());
    const LSeries back = parse_lseries(to_string(f), "t", 20, k);
    CHECK(back == f);

    L2Series g("u", "t", 2 + static_cast<int>(rng() % 3));
    for (int j = -1; j < 4; ++j)
      for (int e = -2; e < 3; ++e) g += l2({{e, j, pool[rng() % 7]}}).truncated({3 + static_cast<int>(rng() % 3), 9});
    const L2Series back2 = parse_l2series(to_string(g), "u", "t", {20, 20}, k);
    CHECK(agree(back2, g));
    CHECK(back2.prec() == g.prec());
    CHECK(to_string(back2) == to_string(g));
  }
}
