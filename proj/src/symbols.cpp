#include "lf2/symbols.hpp"

#include <algorithm>

#include "lf2/errors.hpp"

namespace lf2 {

namespace {

int inner_floor(const L2Series& a) {
  int m = 0;
  for (const auto& c : a.coeffs())
    if (!c.is_zero()) m = std::min(m, c.first());
  return m;
}

template <class R, class E, class Val, class Res>
std::vector<MilnorSymbol<R>> boundary(const MilnorSymbol<E>& s, Val val, Res res, const R& minus_one) {
  const size_t m = s.entries.size();
  std::vector<int> v(m);
  std::vector<R> w;
  for (size_t i = 0; i < m; ++i) {
    v[i] = val(s.entries[i]);
    w.push_back(res(s.entries[i]));
  }
  // Expand each entry as pi^{v_i} w_i. A term with the uniformizer in the
  // positions S keeps the last one, turns the others into -1 ({pi, pi} = {-1, pi})
  // and moves it to the front.
  std::vector<MilnorSymbol<R>> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    long coef = s.mult;
    size_t last = 0;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        coef *= v[i];
        last = i;
      }
    if (coef == 0) continue;
    if (last % 2) coef = -coef;
    MilnorSymbol<R> t;
    t.mult = coef;
    for (size_t i = 0; i < m; ++i) {
      if (i == last) continue;
      t.entries.push_back((mask & (1u << i)) ? minus_one : w[i]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

LSeries pow_cap(const LSeries& a, long n, int cap) { return pow(a, static_cast<int>(n), cap); }

// One-slot restriction of a germ along u = U(s), t = T(s).
LSeries restrict_param(const Germ& f, const LSeries& U, const LSeries& T) {
  const int N = f.N();
  const Germ g = f.compose(Germ::substitute(U, Germ::u(N)), Germ::substitute(T, Germ::u(N)));
  std::vector<FieldElem> c;
  for (int i = 0; i < g.N(); ++i) c.push_back(g.at(i, 0));
  return LSeries("s", 0, std::move(c), g.N());
}

}  // namespace

FieldElem tame_symbol(const LSeries& phi, const LSeries& psi) {
  const long a = phi.valuation(), b = psi.valuation();
  FieldElem r = phi.leading().pow(b) * psi.leading().pow(-a);
  return (a * b) % 2 ? -r : r;
}

LSeries tame_symbol(const L2Series& phi, const L2Series& psi, int inner_cap) {
  const int a = phi.valuation(), b = psi.valuation();
  const LSeries pa = phi.coeff(a), pb = psi.coeff(b);
  LSeries r = (pow(pa, b, inner_cap) * pow(pb, -a, inner_cap)).truncated(inner_cap);
  return (static_cast<long>(a) * b) % 2 ? -r : r;
}

std::vector<MilnorSymbol<LSeries>> milnor_boundary(const MilnorSymbol<L2Series>& s) {
  if (s.entries.empty()) return {};
  const std::string& in = s.entries.front().inner_var();
  return boundary<LSeries>(
      s, [](const L2Series& x) { return x.valuation(); }, [](const L2Series& x) { return x.leading(); },
      LSeries::constant(in, FieldElem(-1)));
}

std::vector<MilnorSymbol<FieldElem>> milnor_boundary(const MilnorSymbol<LSeries>& s) {
  return boundary<FieldElem>(
      s, [](const LSeries& x) { return x.valuation(); }, [](const LSeries& x) { return x.leading(); }, FieldElem(-1));
}

FieldElem evaluate_k1(const std::vector<MilnorSymbol<FieldElem>>& s) {
  FieldElem r(1);
  for (const auto& x : s) {
    if (x.entries.size() != 1) throw InvalidArgument("expected symbols of length 1");
    r *= x.entries[0].pow(x.mult);
  }
  return r;
}

FieldElem triple_symbol(const L2Series& phi, const L2Series& psi, const L2Series& xi, int inner_cap) {
  (void)inner_cap;
  FieldElem r(1);
  for (const auto& s : milnor_boundary(MilnorSymbol<L2Series>{{phi, psi, xi}, 1}))
    r *= tame_symbol(s.entries[0], s.entries[1]).pow(s.mult);
  return r.inverse();
}

FieldElem bracket_2d(const L2Series& phi, const L2Series& psi, const L2Series& sigma, Prec2 cap) {
  const int so = sigma.coeffs().empty() ? 0 : sigma.first();
  const Prec2 work{prec_add(cap.inner, -inner_floor(sigma)), prec_add(cap.outer, std::max(0, -so))};
  const Form2 w = dlog_wedge(phi, psi, work);
  return res_total(Form2{sigma * w.g});
}

FieldElem bracket_1d(const LSeries& xi, const LSeries& zeta, int cap) {
  const int zo = zeta.is_zero() ? 0 : zeta.first();
  return residue(Form1{zeta * dlog(xi, prec_add(cap, std::max(0, -zo))).coeff});
}

// ---- germs ----

GermCurve::GermCurve(Kind kind, LSeries g, int N) : kind_(kind), g_(g.with_var("s")), eq_(N) {
  if (!g_.is_zero() && g_.first() < 1) throw NotRegular("curve graph must vanish at the point: " + to_string(g_));
  const Germ gs = Germ::substitute(g_, kind_ == Kind::TOfU ? Germ::u(N) : Germ::t(N));
  eq_ = (kind_ == Kind::TOfU ? Germ::t(N) : Germ::u(N)) - gs;
}

GermCurve GermCurve::from_equation(const Germ& equation) {
  const int N = equation.N();
  if (N < 2) throw InsufficientPrecision("curve equation known to too low an order");
  if (!equation.at(0, 0).is_zero()) throw InvalidArgument("curve does not pass through the point");
  const FieldElem a = equation.at(1, 0), b = equation.at(0, 1);
  if (a.is_zero() && b.is_zero()) throw NotRegular("curve equation has no linear term");
  const bool t_of_u = !b.is_zero();
  const FieldElem lin = t_of_u ? b : a;
  const LSeries s = LSeries::monomial("s", FieldElem(1), 1);
  LSeries g("s", N);
  for (int it = 0; it < N; ++it) {
    const LSeries h = t_of_u ? restrict_param(equation, s, g) : restrict_param(equation, g, s);
    g = (g - lin.inverse() * h).truncated(N);
  }
  GermCurve c(t_of_u ? Kind::TOfU : Kind::UOfT, g, N);
  c.eq_ = equation;
  return c;
}

std::pair<FieldElem, FieldElem> GermCurve::tangent() const {
  const FieldElem g1 = g_.coeff(1);
  if (kind_ == Kind::TOfU) return {FieldElem(1), g1};
  return {g1, FieldElem(1)};
}

bool GermCurve::transversal(const GermCurve& o) const {
  const auto [a, b] = tangent();
  const auto [c, d] = o.tangent();
  return !(a * d - b * c).is_zero();
}

L2Series GermCurve::expand(const Germ& f) const {
  const int N = std::min(f.N(), eq_.N());
  const Germ s = Germ::u(N), pi = Germ::t(N);
  const Germ gs = Germ::substitute(g_, s);
  const Germ U = kind_ == Kind::TOfU ? s : pi + gs;
  const Germ T = kind_ == Kind::TOfU ? pi + gs : s;
  const L2Series e = f.compose(U, T).to_l2("s", "pi");
  // A germ is only known modulo m^N, so divisibility by the curve equation can never be
  // certified. Leading pi-coefficients that vanish on the whole window are taken to be 0.
  std::vector<LSeries> entries;
  bool leading = true;
  for (int j = e.first(); j < e.end(); ++j) {
    const LSeries c = e.coeff(j);
    leading = leading && c.is_zero();
    entries.push_back(leading ? LSeries("s") : c);
  }
  return L2Series("s", "pi", e.first(), std::move(entries), e.prec());
}

L2Series GermCurve::expand(const GermFn& f, Prec2 cap) const { return div(expand(f.num), expand(f.den), cap); }

LSeries GermCurve::restrict(const Germ& f) const { return expand(f).coeff(0); }

LSeries tame_along(const GermFn& a, const GermFn& b, const GermCurve& c, Prec2 cap) {
  return tame_symbol(c.expand(a, cap), c.expand(b, cap), cap.inner);
}

LSeries tame_along(const K2Elem<GermFn>& f, const GermCurve& c, Prec2 cap) {
  LSeries r = LSeries::constant("s", FieldElem(1));
  for (const auto& p : f.pairs) r = (r * pow_cap(tame_along(p.a, p.b, c, cap), p.mult, cap.inner)).truncated(cap.inner);
  return r;
}

namespace {

// i(f) for f in k((s1)) on c1, with s1 replaced by the restriction of c2's equation.
GermFn transport(const CurveTarget& c1, const GermCurve& c2, int N) {
  const LSeries sigma = c1.curve.restrict(c2.equation());
  if (sigma.valuation() != 1) throw InvalidArgument("curves are not transversal");
  const LSeries rho = reversion(sigma, N);
  const LSeries F = compose(c1.f, rho, N);
  const int nu = F.valuation();
  const Germ W = Germ::substitute(F.shifted(-nu), c2.equation());
  const Germ one = Germ::constant(FieldElem(1), W.N());
  if (nu >= 0) return {W * pow(c2.equation(), nu), one};
  return {W, pow(c2.equation(), -nu)};
}

bool is_one(const LSeries& f) { return (f - LSeries::constant(f.var(), FieldElem(1))).is_zero(); }

}  // namespace

K2Elem<GermFn> symbol_preimage(std::vector<CurveTarget> targets, int N) {
  K2Elem<GermFn> out;
  if (targets.empty()) return out;
  long total = 0;
  for (auto& t : targets) {
    t.f = t.f.with_var("s");
    total += t.f.valuation();
  }
  if (total != 0) throw Unbalanced("target valuations sum to " + std::to_string(total) + ", expected 0");
  const Prec2 cap{N, N};
  while (targets.size() > 1) {
    size_t k = 1;
    while (k < targets.size() && !targets[0].curve.transversal(targets[k].curve)) ++k;
    if (k == targets.size()) {
      // all remaining curves share a tangent: route through an auxiliary transversal line
      const bool vertical = targets[0].curve.tangent().first.is_zero();
      const GermCurve aux(vertical ? GermCurve::Kind::TOfU : GermCurve::Kind::UOfT, LSeries("s"), N);
      targets.insert(targets.begin() + 1, CurveTarget{aux, LSeries::constant("s", FieldElem(1))});
      k = 1;
    }
    const GermFn lifted = transport(targets[0], targets[k].curve, N);
    const GermFn uniformizer = GermFn::of(targets[0].curve.equation());
    K2Elem<GermFn> theta;
    theta.add(lifted, uniformizer);
    const LSeries along = tame_along(theta, targets[k].curve, cap);
    targets[k].f = (targets[k].f * inverse(along, N)).truncated(N);
    out.append(theta);
    targets.erase(targets.begin());
  }
  const CurveTarget& last = targets[0];
  if (last.f.valuation() != 0) throw Unbalanced("last target is not a unit");
  if (!is_one(last.f)) {
    const Germ coord = last.curve.kind() == GermCurve::Kind::TOfU ? Germ::u(N) : Germ::t(N);
    out.add(GermFn::of(Germ::substitute(last.f, coord)), GermFn::of(last.curve.equation()));
  }
  return out;
}

SingularReduction reduce_singular_target(const SingularTarget& target, int depth) {
  if (depth <= 0) throw NotRegular("singular reduction depth exhausted");
  const WeierstrassGerm w = weierstrass(target.equation);
  if (w.u_order != 0) throw InvalidArgument("u divides the curve equation");
  if (w.degree < 2) throw InvalidArgument("curve is regular; use symbol_preimage");
  const Germ r1 = weierstrass_divide(target.h1, w.distinguished, w.degree).second;
  const Germ r2 = weierstrass_divide(target.h2, w.distinguished, w.degree).second;
  SingularReduction out;
  K2Elem<GermFn> pair;
  pair.add(GermFn{r1, r2}, GermFn::of(target.equation));
  out.symbol.append(pair);
  const int N = std::min(r1.N(), r2.N());
  const Prec2 cap{N, N};
  std::vector<GermCurve> regular;
  bool u_factor = false;
  for (const auto& [r, sign] : {std::pair{r1, 1}, std::pair{r2, -1}}) {
    if (!r.at(0, 0).is_zero()) continue;
    const WeierstrassGerm f = weierstrass(r);
    if (f.u_order > 0) u_factor = true;
    if (f.degree == 1) {
      const LSeries a0 = f.distinguished.to_l2("s", "t").coeff(0);
      regular.emplace_back(GermCurve::Kind::TOfU, -a0, f.distinguished.N());
    } else if (f.degree >= 2) {
      const Germ one = Germ::constant(FieldElem(1), target.equation.N());
      SingularTarget next{f.distinguished, sign > 0 ? target.equation : one, sign > 0 ? one : target.equation};
      SingularReduction sub = reduce_singular_target(next, depth - 1);
      out.symbol.append(sub.symbol);
      out.residual.insert(out.residual.end(), sub.residual.begin(), sub.residual.end());
    }
  }
  if (u_factor) regular.emplace_back(GermCurve::Kind::UOfT, LSeries("s"), N);
  for (const auto& c : regular) out.residual.push_back({c, inverse(tame_along(pair, c, cap), N)});
  return out;
}

}  // namespace lf2
