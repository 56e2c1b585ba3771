#include <doctest.h>

#include <random>

#include "lf2/errors.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("laurent arithmetic examples") {
  LSeries one = ls("t", {{0, q(1)}});
  LSeries g = div(one, ls("t", {{0, q(1)}, {1, q(-1)}}), 4);
  CHECK(g == ls("t", {{0, q(1)}, {1, q(1)}, {2, q(1)}, {3, q(1)}}, 4));
  CHECK(ls("t", {{-1, q(1)}}) * ls("t", {{1, q(1)}}) == one);
  LSeries s = ls("t", {{0, q(1)}, {1, q(1)}}, 2) + ls("t", {{2, q(1)}}, 3);
  CHECK(s == ls("t", {{0, q(1)}, {1, q(1)}}, 2));
  CHECK(s.prec() == 2);
}

TEST_CASE("precision rules") {
  LSeries a = ls("t", {{-1, q(1)}, {0, q(2)}}, 3);
  LSeries b = ls("t", {{2, q(1)}}, 5);
  CHECK((a * b).prec() == 4);  // min(-1 + 5, 2 + 3)
  CHECK(derivative(a).prec() == 2);
  CHECK(inverse(a, 100).prec() == 5);  // 3 - 2*(-1)
  CHECK(inverse(ls("t", {{0, q(1)}, {1, q(1)}}), 6).prec() == 6);
  CHECK_THROWS_AS(a.coeff(3), InsufficientPrecision);
  CHECK_THROWS_AS(LSeries("t", 4).valuation(), InsufficientPrecision);
  CHECK_THROWS_AS(inverse(LSeries("t", 4), 8), InsufficientPrecision);
  CHECK_THROWS_AS(a + ls("u", {{0, q(1)}}), VariableMismatch);
  // 1/(t^{-1} + 2) = t - 2 t^2 + 4 t^3 - ...
  LSeries ia = inverse(a, 100);
  for (int e = 1; e < ia.prec(); ++e) CHECK(ia.coeff(e) == FieldElem(Rational((e % 2 ? 1 : -1) * (1 << (e - 1)))));
}

TEST_CASE("residues and derivatives") {
  CHECK(residue(Form1{ls("t", {{-1, q(1)}, {0, q(3)}, {1, q(1)}})}) == q(1));
  CHECK(residue(Form1{ls("t", {{0, q(1)}, {1, q(1)}})}) == q(0));
  CHECK(d(ls("t", {{2, q(1)}})).coeff == ls("t", {{1, q(2)}}));
  CHECK(d(ls("t", {{-1, q(1)}})).coeff == ls("t", {{-2, q(-1)}}));
  CHECK(d(ls("t", {{0, q(7)}})).coeff.is_exact_zero());
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    LSeries f("t");
    for (int e = -4; e < 5; ++e) f += LSeries::monomial("t", q(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3), e);
    CHECK(residue(d(f)) == q(0));
    CHECK(residue(dlog(LSeries::monomial("t", q(1), 1) * (ls("t", {{0, q(1)}}) + f.truncated(4).shifted(5)), 8)) ==
          q(1));
  }
}

TEST_CASE("exp and log") {
  LSeries x = ls("t", {{0, q(1)}, {1, q(1)}});
  LSeries l = log(x, 4);
  CHECK(l == ls("t", {{1, q(1)}, {2, q(-1, 2)}, {3, q(1, 3)}}, 4));
  CHECK(agree(exp(log(x, 10), 10), x));
  CHECK(exp(LSeries("t"), 5) == ls("t", {{0, q(1)}}));
  // independent oracle: coefficients of exp(t) are 1/n!
  LSeries e = exp(ls("t", {{1, q(1)}}), 9);
  Rational f = 1;
  for (int n = 0; n < 9; ++n) {
    if (n) f /= n;
    CHECK(e.coeff(n) == FieldElem(f));
  }
  CHECK_THROWS_AS(exp(ls("t", {{0, q(1)}}), 5), NonpositiveValuation);
  CHECK_THROWS_AS(log(ls("t", {{0, q(2)}, {1, q(1)}}), 5), NotAUnit);
  // log is a homomorphism on principal units
  LSeries y = ls("t", {{0, q(1)}, {2, q(3)}, {3, q(-1, 2)}});
  CHECK(agree(log(x * y, 10), log(x, 10) + log(y, 10)));
}

TEST_CASE("composition and reversion") {
  LSeries g = ls("t", {{1, q(1)}, {2, q(1)}});  // t + t^2
  LSeries h = reversion(g, 8);
  CHECK(agree(compose(g, h, 8), ls("t", {{1, q(1)}})));
  // Catalan-number oracle: reversion of t + t^2 is sum (-1)^{n-1} C_{n-1} t^n
  const long cat[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n < 8; ++n) CHECK(h.coeff(n) == q((n % 2 ? 1 : -1) * cat[n - 1]));
  LSeries f = ls("t", {{-1, q(1)}, {0, q(2)}});
  LSeries c = compose(f, g, 6);  // 1/(t+t^2) + 2
  CHECK(agree(c * g, ls("t", {{0, q(1)}}) + q(2) * g));
}

TEST_CASE("printing") {
  CHECK(to_string(ls("t", {{-1, q(1)}, {0, q(3)}, {2, q(2)}}, 5)) == "t^-1 + 3 + 2*t^2 + O(t^5)");
  CHECK(to_string(ls("t", {{1, q(-1, 2)}})) == "-1/2*t");
  CHECK(to_string(LSeries("t", 3)) == "O(t^3)");
  CHECK(to_string(LSeries("t")) == "0");
}
