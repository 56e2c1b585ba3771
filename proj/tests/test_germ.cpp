#include <doctest.h>

#include <random>

#include "lf2/errors.hpp"
#include "lf2/germ.hpp"
#include "support.hpp"

using namespace test;

namespace {

Germ g2(std::initializer_list<Term2> terms, int N = 8) { return Germ::from_l2(l2(terms), N); }

bool same(const Germ& a, const Germ& b) { return (a - b).is_zero(); }

Germ upow(const Germ& u, int k) { return k == 0 ? Germ::constant(q(1), u.N()) : pow(u, k); }

}  // namespace

TEST_CASE("germ arithmetic") {
  const int N = 6;
  Germ u = Germ::u(N), t = Germ::t(N);
  Germ f = Germ::constant(q(1), N) + u + t;
  CHECK(same(f * f.inverse(), Germ::constant(q(1), N)));
  CHECK_THROWS_AS(u.inverse(), NotAUnit);
  CHECK((u * t).order() == 2);
  CHECK((u * u * t).u_order() == 2);
  // (u + t)(u, u + u^2) = 2u + u^2
  Germ c = (u + t).compose(u, u + u * u);
  CHECK(same(c, q(2) * u + u * u));
  // 1/(1 - s) with s = t
  Germ g = Germ::substitute(ls("s", {{0, q(1)}, {1, q(-1)}}), t);
  CHECK(same(g, Germ::constant(q(1), N) - t));
  CHECK(pow(u + t, N).order() == N);
}

TEST_CASE("weierstrass preparation examples") {
  SUBCASE("already distinguished") {
    Germ f = g2({{0, 2, q(1)}, {1, 0, q(-1)}});
    auto w = weierstrass(f);
    CHECK(w.u_order == 0);
    CHECK(w.degree == 2);
    CHECK(same(w.unit, Germ::constant(q(1), f.N())));
    CHECK(same(w.distinguished, f));
  }
  SUBCASE("u (1 + t)") {
    Germ f = g2({{1, 0, q(1)}, {1, 1, q(1)}});
    auto w = weierstrass(f);
    CHECK(w.u_order == 1);
    CHECK(w.degree == 0);
    CHECK(same(w.unit.truncated(f.N() - 1), g2({{0, 0, q(1)}, {0, 1, q(1)}}, f.N() - 1)));
  }
  SUBCASE("t (1 + u) + t^2") {
    Germ f = g2({{0, 1, q(1)}, {1, 1, q(1)}, {0, 2, q(1)}});
    auto w = weierstrass(f);
    CHECK(w.u_order == 0);
    CHECK(w.degree == 1);
    CHECK(same(w.distinguished, Germ::t(w.distinguished.N())));
    // b = (1+u)(1 + t/(1+u)) = 1 + u + t
    CHECK(same(w.unit, g2({{0, 0, q(1)}, {1, 0, q(1)}, {0, 1, q(1)}}, w.unit.N())));
  }
  SUBCASE("L2Series interface") {
    auto w = weierstrass_prepare(l2({{0, 2, q(1)}, {1, 0, q(-1)}}), {8, 8});
    CHECK(w.u_order == 0);
    CHECK(w.degree == 2);
    CHECK(agree(w.distinguished, l2({{0, 2, q(1)}, {1, 0, q(-1)}})));
  }
}

TEST_CASE("weierstrass recomposition on random germs") {
  std::mt19937 rng(20261019);
  const FieldElem pool[] = {q(0), q(1), q(-1), q(2), q(-2), q(1, 2), q(1, 3)};
  const int N = 8;
  for (int trial = 0; trial < 40; ++trial) {
    Germ f(N);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i + j > 0 && i + j < N) f.set(i, j, pool[rng() % 7]);
    f.set(0, 1 + static_cast<int>(rng() % 3), q(1));  // keep the t-part nonzero
    const int k = static_cast<int>(rng() % 2);
    if (k) f = Germ::u(N) * f;
    auto w = weierstrass(f);
    CHECK(w.u_order == k);
    // distinguished: t^d exactly, lower coefficients divisible by u
    CHECK(w.distinguished.at(0, w.degree).is_one());
    for (int j = 0; j < w.degree; ++j) CHECK(w.distinguished.at(0, j).is_zero());
    const Germ back = w.unit * upow(Germ::u(N), k) * w.distinguished;
    const int M = std::min(back.N(), f.N());
    CHECK(same(back.truncated(M), f.truncated(M)));

    // division by the distinguished factor
    Germ h(N);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) h.set(i, j, pool[rng() % 7]);
    if (w.degree > 0) {
      auto [qq, r] = weierstrass_divide(h, w.distinguished, w.degree);
      for (int j = w.degree; j < r.N(); ++j)
        for (int i = 0; i + j < r.N(); ++i) CHECK(r.at(i, j).is_zero());
      const Germ lhs = qq * w.distinguished + r;
      const int P = std::min(lhs.N(), h.N());
      CHECK(same(lhs.truncated(P), h.truncated(P)));
    }
  }
}
