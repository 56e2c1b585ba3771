#include <doctest.h>

#include <random>

#include "lf2/errors.hpp"
#include "support.hpp"

using namespace test;

namespace {

L2Series one2() { return l2({{0, 0, q(1)}}); }

// Random element of 1 + (u) + t k((u))[[t]] with small exact coefficients.
L2Series random_one_unit(std::mt19937& rng, int min_inner = -2) {
  const FieldElem pool[] = {q(0), q(1), q(-1), q(2), q(-2), q(1, 2), q(1, 3)};
  L2Series r = one2();
  for (int i = 1; i < 3; ++i) r += l2({{i, 0, pool[rng() % 7]}});
  for (int j = 1; j < 4; ++j)
    for (int i = min_inner; i < 2; ++i) r += l2({{i, j, pool[rng() % 7]}});
  return r;
}

}  // namespace

TEST_CASE("two-dimensional arithmetic examples") {
  // 1/(1 - t/u) with caps (u: 6, t: 3)
  L2Series g = div(one2(), one2() - l2({{-1, 1, q(1)}}), {6, 3});
  CHECK(agree(g, l2({{0, 0, q(1)}, {-1, 1, q(1)}, {-2, 2, q(1)}}, 3)));
  CHECK(g.prec() == 3);
  CHECK(agree(l2({{1, -1, q(1)}}) * l2({{-1, 1, q(1)}}), one2()));
  CHECK_THROWS_AS(l2({{0, 0, q(1)}}) + l2({{0, 0, q(1)}}, kExact, "w", "t"), VariableMismatch);
}

TEST_CASE("indeterminate leading coefficient") {
  L2Series a = L2Series::inner_big_o("u", "t", 4) + l2({{0, 1, q(1)}});
  CHECK_THROWS_AS(a.valuation(), InsufficientPrecision);
  CHECK_THROWS_AS(inverse(a, {8, 8}), InsufficientPrecision);
  CHECK_THROWS_AS(l2({{0, 0, q(1)}}, 3).coeff(3), InsufficientPrecision);
}

TEST_CASE("unit decomposition") {
  auto d = decompose_unit(q(2) * l2({{1, 2, q(1)}}) * l2({{0, 0, q(1)}, {1, 0, q(1)}, {0, 1, q(1)}}));
  CHECK(d.m == 2);
  CHECK(d.n == 1);
  CHECK(d.c == q(2));
  CHECK(agree(d.eps, l2({{0, 0, q(1)}, {1, 0, q(1)}, {0, 1, q(1)}})));
  auto e = decompose_unit(one2());
  CHECK((e.m == 0 && e.n == 0 && e.c == q(1)));
  CHECK(agree(e.eps, one2()));
  L2Series phi = l2({{-1, 1, q(1)}, {0, 1, q(1)}});  // t u^{-1}(1+u)
  auto f = decompose_unit(phi);
  CHECK((f.m == 1 && f.n == -1 && f.c == q(1)));
  CHECK(agree(f.eps, l2({{0, 0, q(1)}, {1, 0, q(1)}})));
  CHECK(agree(l2({{f.n, f.m, f.c}}) * f.eps, phi));
}

TEST_CASE("residues of 2-forms") {
  CHECK(res_outer(Form2{l2({{-1, -1, q(1)}})}).coeff == ls("u", {{-1, q(1)}}));
  CHECK(res_outer(Form2{l2({{1, 0, q(1)}, {0, 1, q(1)}})}).coeff.is_zero());
  CHECK(res_outer(Form2{l2({{-1, -1, q(1)}, {1, -1, q(1)}, {-2, 1, q(1)}})}).coeff ==
        ls("u", {{-1, q(1)}, {1, q(1)}}));
  CHECK(res_inner(Form2{l2({{-1, -1, q(1)}})}).coeff == ls("t", {{-1, q(1)}}));
  CHECK(res_inner(Form2{l2({{-1, 0, q(1)}, {-1, 2, q(1)}})}).coeff == ls("t", {{0, q(1)}, {2, q(1)}}));
  CHECK(res_inner(Form2{l2({{1, 0, q(1)}, {-2, 1, q(1)}})}).coeff.is_zero());
  CHECK(res_total(Form2{l2({{-1, -1, q(1)}})}) == q(1));
  CHECK(res_total(Form2{l2({{-1, 0, q(1)}})}) == q(0));
  CHECK_THROWS_AS(res_outer(Form2{l2({{0, -3, q(1)}}, -1)}), InsufficientPrecision);
}

TEST_CASE("res_total through either iterated residue") {
  std::mt19937 rng(5);
  for (int k = 0; k < 30; ++k) {
    L2Series g("u", "t", 4);
    for (int j = -3; j < 4; ++j)
      for (int i = -3; i < 3; ++i) g += l2({{i, j, q(static_cast<long>(rng() % 5) - 2)}});
    const Form2 w{g};
    CHECK(residue(res_outer(w)) == res_total(w));
    CHECK(residue(res_inner(w)) == res_total(w));
  }
}

TEST_CASE("two-dimensional exp and log") {
  L2Series l = log(l2({{0, 0, q(1)}, {1, 0, q(1)}}), {5, 4});
  CHECK(agree(l, l2({{1, 0, q(1)}, {2, 0, q(-1, 2)}, {3, 0, q(1, 3)}, {4, 0, q(-1, 4)}})));
  L2Series m = log(l2({{0, 0, q(1)}, {-1, 1, q(1)}}), {6, 4});
  CHECK(agree(m, l2({{-1, 1, q(1)}, {-2, 2, q(-1, 2)}, {-3, 3, q(1, 3)}}, 4)));
  std::mt19937 rng(3);
  for (int k = 0; k < 10; ++k) {
    L2Series eps = random_one_unit(rng);
    L2Series back = exp(log(eps, {20, 6}), {14, 6});
    CHECK(agree(back, eps));
    CHECK(back.prec() == 6);
    for (const auto& c : back.coeffs()) CHECK(c.prec() >= 8);
  }
  L2Series a = random_one_unit(rng), b = random_one_unit(rng);
  CHECK(agree(log(a * b, {16, 5}), log(a, {16, 5}) + log(b, {16, 5})));
  CHECK_THROWS_AS(exp(l2({{0, 0, q(1)}}), {5, 5}), NonpositiveValuation);
  CHECK_THROWS_AS(exp(l2({{0, -1, q(1)}}), {5, 5}), NonpositiveValuation);
  CHECK_THROWS_AS(log(l2({{0, 0, q(2)}}), {5, 5}), NotAUnit);
}

TEST_CASE("dlog wedge") {
  L2Series u = l2({{1, 0, q(1)}}), t = l2({{0, 1, q(1)}});
  CHECK(agree(dlog_wedge(u, t, {8, 8}).g, l2({{-1, -1, q(1)}})));
  CHECK(agree(dlog_wedge(t, u, {8, 8}).g, l2({{-1, -1, q(-1)}})));
  std::mt19937 rng(9);
  L2Series phi = random_one_unit(rng) * u;
  CHECK(dlog_wedge(phi, phi, {8, 6}).g.is_zero());
  // bilinearity in the first slot
  L2Series psi = random_one_unit(rng) * t;
  Form2 a = dlog_wedge(phi * u, psi, {12, 6});
  Form2 b = dlog_wedge(phi, psi, {12, 6}), c = dlog_wedge(u, psi, {12, 6});
  CHECK(agree(a.g, b.g + c.g));
}

TEST_CASE("substitution") {
  // f(u + u^2, t) for f = u^{-1} t: coefficients u^{-1}(1+u)^{-1}
  L2Series f = l2({{-1, 1, q(1)}});
  L2Series g = substitute_inner(f, ls("u", {{1, q(1)}, {2, q(1)}}), {6, 4});
  CHECK(agree(g * l2({{1, 0, q(1)}, {2, 0, q(1)}}), l2({{0, 1, q(1)}})));
  // outer substitution t -> t(1+t)
  L2Series h = substitute_outer(l2({{0, -1, q(1)}, {0, 1, q(1)}}), l2({{0, 1, q(1)}, {0, 2, q(1)}}), {6, 5});
  L2Series T = l2({{0, 1, q(1)}, {0, 2, q(1)}});
  CHECK(agree(h * T, one2() + T * T));
}
