#include <doctest.h>

#include <random>

#include "lf2/direct_image.hpp"
#include "lf2/errors.hpp"
#include "lf2/symbols.hpp"
#include "support.hpp"

using namespace test;

namespace {

const FieldElem kPool[] = {q(0), q(1), q(-1), q(2), q(-2), q(1, 2), q(1, 3)};
const Prec2 P{8, 8};

L2Series one2(const std::string& in = "u", const std::string& out = "t") { return l2({{0, 0, q(1)}}, kExact, in, out); }

FlagContext fibre() { return FlagContext::fibre("u", "t", "t"); }
// C = (u): coordinate t along C, t_C = u
FlagContext transverse() { return FlagContext::transverse("t", "u", "t"); }

// phi = t^m u^n c (1 + small), exact
L2Series random_elem(std::mt19937& rng, const std::string& in = "u", const std::string& out = "t") {
  const int m = static_cast<int>(rng() % 3) - 1, n = static_cast<int>(rng() % 3) - 1;
  L2Series r = l2({{n, m, kPool[1 + rng() % 6]}}, kExact, in, out);
  for (int i = n + 1; i < n + 3; ++i) r += l2({{i, m, kPool[rng() % 7]}}, kExact, in, out);
  for (int i = n - 1; i < n + 2; ++i) r += l2({{i, m + 1, kPool[rng() % 7]}}, kExact, in, out);
  return r;
}

}  // namespace

TEST_CASE("direct image of forms") {
  // u^-1 du^dt at the origin: the fibre residue is dt
  Form1 a = di_form(fibre(), Form2{l2({{-1, 0, q(1)}})});
  CHECK(agree(a.coeff, ls("t", {{0, q(1)}})));
  // (u - 1)^-1 t du^dt at (1, 0), with w = u - 1 as coordinate
  Form1 b = di_form(FlagContext::fibre("w", "t", "t"), Form2{l2({{-1, 1, q(1)}}, kExact, "w", "t")});
  CHECK(agree(b.coeff, ls("t", {{1, q(1)}})));
  // regular form along a transverse curve
  Form1 c = di_form(transverse(), Form2{l2({{0, 0, q(1)}, {2, 1, q(3)}, {-1, 0, q(2)}}, kExact, "t", "u")});
  CHECK(c.coeff.is_zero());
  // t^l u^-1 du^dt -> t^l dt
  for (int l = -2; l <= 3; ++l) CHECK(agree(di_form(fibre(), Form2{l2({{-1, l, q(1)}})}).coeff, ls("t", {{l, q(1)}})));
}

TEST_CASE("direct image of forms along a ramified transverse curve") {
  // C: t = u^2, inner s = u, tau = s^2. Tr(ds / s) = dtau / tau.
  FlagContext ctx = FlagContext::transverse("s", "pi", "t", 2);
  Form1 w = di_form(ctx, Form2{l2({{-1, -1, q(1)}}, kExact, "s", "pi")});
  CHECK(agree(w.coeff, ls("t", {{-1, q(1)}})));
}

TEST_CASE("table pairing examples") {
  const L2Series u = l2({{1, 0, q(1)}}), t = l2({{0, 1, q(1)}});
  CHECK(agree(table_pairing(u, t, P), ls("t", {{1, q(1)}})));
  CHECK(agree(table_pairing(t, u, P), ls("t", {{-1, q(1)}})));
  CHECK(agree(table_pairing(u, u, P), ls("t", {{0, q(-1)}})));
  CHECK(agree(table_pairing(u, one2() + t, P), ls("t", {{0, q(1)}, {1, q(1)}}, 8)));
  CHECK(agree(table_pairing(l2({{0, 0, q(3)}}), u, P), ls("t", {{0, q(1, 3)}})));
  CHECK(agree(table_pairing(u, l2({{0, 0, q(5)}}), P), ls("t", {{0, q(5)}})));
  CHECK(agree(table_pairing(l2({{0, 0, q(3)}}), l2({{0, 0, q(5)}}), P), ls("t", {{0, q(1)}})));
  CHECK(agree(table_pairing(t, l2({{0, 0, q(5)}}), P), ls("t", {{0, q(1)}})));
}

TEST_CASE("direct image of symbols") {
  const L2Series s = l2({{1, 0, q(1)}}, kExact, "t", "u"), tc = l2({{0, 1, q(1)}}, kExact, "t", "u");
  // transverse C = (u): the pair (u, t) is (t_C, s)
  CHECK(agree(di_symbol(transverse(), tc, s, P), ls("t", {{-1, q(1)}})));
  const L2Series u = l2({{1, 0, q(1)}}), t = l2({{0, 1, q(1)}});
  CHECK(agree(di_symbol(fibre(), u, t, P), ls("t", {{1, q(1)}})));

  auto k2 = make_extension({Rational(-2), Rational(0), Rational(1)}, "a");
  FlagContext ctx = FlagContext::fibre("w", "t", "t", k2);
  const L2Series w = l2({{1, 0, q(1)}}, kExact, "w", "t"), tt = l2({{0, 1, q(1)}}, kExact, "w", "t");
  CHECK(agree(di_symbol(ctx, w, tt, P), ls("t", {{2, q(1)}})));
}

TEST_CASE("table pairing is a symbol") {
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    L2Series a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    const LSeries ab = table_pairing(a, b, P), ba = table_pairing(b, a, P);
    CHECK(agree((ab * ba).truncated(6), ls("t", {{0, q(1)}}, 6)));
    const LSeries lhs = table_pairing(a * c, b, P), rhs = table_pairing(a, b, P) * table_pairing(c, b, P);
    CHECK(agree(lhs.truncated(5), rhs.truncated(5)));
    L2Series om = one2() - a;
    if (!om.is_zero()) CHECK(agree(table_pairing(a, om, P).truncated(5), ls("t", {{0, q(1)}}, 5)));
    // (phi, phi) = (-1, phi)
    CHECK(agree(table_pairing(a, a, P).truncated(5), table_pairing(l2({{0, 0, q(-1)}}), a, P).truncated(5)));
  }
}

TEST_CASE("triple symbol and bracket against the direct image on generators") {
  const std::vector<LSeries> xis{ls("t", {{1, q(1)}}), ls("t", {{0, q(3)}}), ls("t", {{0, q(1)}, {1, q(1)}})};
  const std::vector<LSeries> zetas{ls("t", {{0, q(1)}}), ls("t", {{-1, q(1)}}), ls("t", {{-3, q(1)}}),
                                   ls("t", {{0, q(1)}, {1, q(1)}})};
  for (const FlagContext& ctx : {fibre(), transverse()}) {
    const std::string& in = ctx.inner;
    const std::string& out = ctx.outer;
    const std::vector<L2Series> gens{l2({{1, 0, q(1)}}, kExact, in, out), l2({{0, 1, q(1)}}, kExact, in, out),
                                     l2({{0, 0, q(2)}}, kExact, in, out),
                                     l2({{0, 0, q(1)}, {1, 0, q(1)}}, kExact, in, out),
                                     l2({{0, 0, q(1)}, {0, 1, q(1)}}, kExact, in, out),
                                     l2({{0, 0, q(1)}, {-1, 1, q(1)}}, kExact, in, out)};
    for (const auto& a : gens)
      for (const auto& b : gens) {
        const LSeries ds = di_symbol(ctx, a, b, P);
        for (const auto& xi : xis) {
          const FieldElem lhs = ctx.ext.norm(triple_symbol(a, b, embed(ctx, xi, P), P.inner));
          CHECK(lhs == tame_symbol(ds, xi));
        }
        for (const auto& z : zetas) {
          const FieldElem lhs = ext_trace(bracket_2d(a, b, embed(ctx, z, P), P), ctx.ext.residue());
          CHECK(lhs == bracket_1d(ds, z, P.outer));
        }
      }
  }
}

TEST_CASE("fibre lemma: res of xi dlog wedge through the table") {
  std::mt19937 rng(23);
  for (int i = 0; i < 30; ++i) {
    L2Series a = random_elem(rng), b = random_elem(rng);
    for (int k = 0; k <= 2; ++k) {
      const LSeries xi = ls("t", {{-k, q(1)}});
      const FieldElem lhs = bracket_2d(a, b, embed(fibre(), xi, P), P);
      CHECK(lhs == bracket_1d(table_pairing(a, b, P), xi, P.outer));
    }
  }
}

TEST_CASE("residue compatibility of the direct image") {
  std::mt19937 rng(29);
  for (int i = 0; i < 30; ++i) {
    L2Series g(i % 2 ? "t" : "u", i % 2 ? "u" : "t");
    for (int a = -2; a < 2; ++a)
      for (int b = -2; b < 2; ++b)
        g += l2({{a, b, kPool[rng() % 7]}}, kExact, g.inner_var(), g.outer_var());
    const FlagContext ctx = i % 2 ? transverse() : fibre();
    CHECK(residue(di_form(ctx, Form2{g})) == res_total(Form2{g}));
  }
}
