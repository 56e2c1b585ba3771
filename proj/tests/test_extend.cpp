#include <doctest.h>

#include "lf2/errors.hpp"
#include "lf2/extend.hpp"
#include "support.hpp"

using namespace test;

namespace {

ExtPtr sqrt2() { return make_extension({Rational(-2), Rational(0), Rational(1)}); }

// Conjugation a -> -a on coefficients of Q(sqrt 2).
LSeries conj(const LSeries& a) {
  std::vector<FieldElem> c;
  for (const auto& x : a.coeffs()) {
    if (x.is_rational()) {
      c.push_back(x);
      continue;
    }
    std::vector<Rational> v = x.coords();
    v[1] = -v[1];
    c.push_back(FieldElem(x.ext(), v));
  }
  return LSeries(a.var(), a.first(), c, a.prec());
}

// t' -> -t'
LSeries flip(const LSeries& a) {
  std::vector<FieldElem> c;
  for (int e = a.first(); e < a.end(); ++e) c.push_back(e % 2 ? -a.coeffs()[e - a.first()] : a.coeffs()[e - a.first()]);
  return LSeries(a.var(), a.first(), c, a.prec());
}

// Even series in s rewritten in tau = s^2.
LSeries halve(const LSeries& a, const std::string& var) {
  std::vector<std::pair<int, FieldElem>> terms;
  for (int e = a.first(); e < a.end(); ++e) {
    REQUIRE((e % 2 == 0 || a.coeffs()[e - a.first()].is_zero()));
    if (e % 2 == 0) terms.push_back({e / 2, a.coeffs()[e - a.first()]});
  }
  return LSeries::from_coeffs(var, terms, a.is_exact() ? kExact : (a.prec() + 1) / 2);
}

}  // namespace

TEST_CASE("embedding") {
  LocalExt ram("tau", "s", 2);
  CHECK(ram.embed(ls("tau", {{0, q(1)}, {1, q(1)}})) == ls("s", {{0, q(1)}, {2, q(1)}}));
  LocalExt unr("tau", "t", 1, sqrt2());
  CHECK(unr.embed(ls("tau", {{1, q(3)}})) == ls("t", {{1, q(3)}}));
  CHECK(ram.embed(ls("tau", {{1, q(1)}}, 4)).prec() == 8);
}

TEST_CASE("norm and trace examples") {
  LocalExt ram("tau", "s", 2);
  CHECK(ram.norm(ls("s", {{1, q(1)}})) == ls("tau", {{1, q(-1)}}));
  auto e = sqrt2();
  LocalExt unr("tau", "t", 1, e);
  const FieldElem a = FieldElem::generator(e);
  CHECK(unr.norm(ls("t", {{1, a}})) == ls("tau", {{2, q(-2)}}));
  CHECK(unr.norm(ls("t", {{1, q(1)}})) == ls("tau", {{2, q(1)}}));
  CHECK(ram.trace(Form1{ls("s", {{-1, q(1)}})}).coeff == ls("tau", {{-1, q(1)}}));
  CHECK(unr.trace(Form1{ls("t", {{0, a}})}).coeff.is_zero());
  CHECK_THROWS_AS(ram.norm(ls("s", {{0, a}})), TowerMismatch);
}

TEST_CASE("norm against products of conjugates") {
  auto e = sqrt2();
  const FieldElem a = FieldElem::generator(e);
  LSeries x = ls("s", {{-1, q(2)}, {0, a}, {1, q(1, 3)}, {2, q(1) + a}, {3, q(-1)}});
  // ramified, k' = k
  LSeries y = ls("s", {{1, q(1)}, {2, q(3)}, {4, q(-2)}});
  LocalExt ram("tau", "s", 2);
  CHECK(ram.norm(y) == halve(y * flip(y), "tau"));
  // ramified with residue extension: four conjugates
  LocalExt both("tau", "s", 2, e);
  LSeries p = x * flip(x);
  LSeries expect = halve(p * conj(p), "tau");
  CHECK(both.norm(x) == expect);
  // unramified
  LocalExt unr("tau", "s", 1, e);
  CHECK(unr.norm(x) == (x * conj(x)).with_var("tau"));
  // traces: sum of conjugates
  CHECK(both.trace(x) == halve(x + flip(x) + conj(x) + conj(flip(x)), "tau"));
  // multiplicativity with finite precision
  LSeries z = ls("s", {{0, q(1)}, {1, a}}, 6);
  CHECK(agree(both.norm(x * z), both.norm(x) * both.norm(z)));
  // norm of an embedded element is its degree-th power
  LSeries f = ls("tau", {{1, q(1)}, {2, q(5)}});
  CHECK(both.norm(both.embed(f)) == pow(f, 4, kExact));
}
