#include "lf2/direct_image.hpp"

#include <algorithm>

#include "lf2/errors.hpp"
#include "lf2/symbols.hpp"

namespace lf2 {

namespace {

int inner_floor(const L2Series& a) {
  int m = 0;
  for (const auto& c : a.coeffs())
    if (!c.is_zero()) m = std::min(m, c.first());
  return m;
}

void check_vars(const FlagContext& ctx, const L2Series& a) {
  if (a.inner_var() != ctx.inner || a.outer_var() != ctx.outer)
    throw VariableMismatch("flag expects k((" + ctx.inner + "))((" + ctx.outer + ")), got k((" + a.inner_var() +
                           "))((" + a.outer_var() + "))");
}

// exp res_u(ln(eps) du / u): the inner-constant term of ln(eps), exponentiated.
LSeries e_term(const L2Series& eps, Prec2 work, int cap) {
  const L2Series lg = log(eps, work);
  const L2Series shifted = L2Series::monomial(lg.inner_var(), lg.outer_var(), FieldElem(1), -1, 0) * lg;
  return exp(inner_residues(shifted), cap);
}

LSeries renamed(const LSeries& a, const std::string& var) { return a.with_var(var); }

}  // namespace

FlagContext FlagContext::transverse(std::string inner, std::string outer, std::string base, int e,
                                    ExtPtr residue) {
  L2Series tau = L2Series::monomial(inner, outer, FieldElem(1), e, 0);
  return transverse(std::move(inner), std::move(outer), std::move(base), e, std::move(residue), std::move(tau));
}

FlagContext FlagContext::transverse(std::string inner, std::string outer, std::string base, int e, ExtPtr residue,
                                    L2Series tau) {
  if (tau.inner_var() != inner || tau.outer_var() != outer) throw VariableMismatch("tau image in the wrong field");
  LocalExt ext(std::move(base), inner, e, std::move(residue));
  return FlagContext{Kind::Transverse, std::move(inner), std::move(outer), std::move(ext), std::move(tau)};
}

FlagContext FlagContext::fibre(std::string inner, std::string outer, std::string base, ExtPtr residue) {
  LocalExt ext(std::move(base), outer, 1, std::move(residue));
  L2Series tau = L2Series::monomial(inner, outer, FieldElem(1), 0, 1);
  return FlagContext{Kind::Fibre, std::move(inner), std::move(outer), std::move(ext), std::move(tau)};
}

L2Series embed(const FlagContext& ctx, const LSeries& xi, Prec2 cap) {
  if (xi.var() != ctx.base_var()) throw VariableMismatch("expected a series in " + ctx.base_var() + ", got " + xi.var());
  return pullback(xi, ctx.tau, cap);
}

Form1 di_form(const FlagContext& ctx, const Form2& w) {
  check_vars(ctx, w.g);
  const Form1 r = ctx.kind == FlagContext::Kind::Transverse ? res_outer(w) : res_inner(w);
  return ctx.ext.trace(r);
}

LSeries table_pairing(const L2Series& phi, const L2Series& psi, Prec2 cap) {
  if (phi.inner_var() != psi.inner_var() || phi.outer_var() != psi.outer_var())
    throw VariableMismatch("table pairing arguments live in different fields");
  const std::string& t = phi.outer_var();
  const UnitDecomp a = decompose_unit(phi);
  const UnitDecomp b = decompose_unit(psi);
  const int P = cap.outer;
  // inner padding so that the inner-constant and inner-residue terms survive the products
  const int floor = std::min(inner_floor(a.eps), inner_floor(b.eps));
  const Prec2 work{prec_add(std::max(cap.inner, 2), prec_mul(-floor, P + 1)), P};

  LSeries r = LSeries::monomial(t, FieldElem((a.n * b.n) % 2 ? -1 : 1), a.n * b.m - a.m * b.n);
  r = r * LSeries::constant(t, b.c.pow(a.n) * a.c.pow(-b.n));
  if (a.n != 0 || b.n != 0) {
    const LSeries e2 = e_term(b.eps, work, P), e1 = e_term(a.eps, work, P);
    r = (r * pow(e2, a.n, P) * pow(e1, -b.n, P)).truncated(P);
  }
  const L2Series lg = log(a.eps, work);
  const L2Series dl = div(d_inner(b.eps), b.eps, work);
  const LSeries g = exp(inner_residues((lg * dl).truncated(work)), P);
  return (r * inverse(g, P)).truncated(P);
}

LSeries di_symbol(const FlagContext& ctx, const L2Series& phi, const L2Series& psi, Prec2 cap) {
  check_vars(ctx, phi);
  check_vars(ctx, psi);
  if (ctx.kind == FlagContext::Kind::Transverse) {
    const LSeries ts = tame_symbol(phi, psi, cap.inner);
    return ctx.ext.norm(ts);
  }
  return ctx.ext.norm(renamed(table_pairing(phi, psi, cap), ctx.ext.top_var()));
}

Form1 di_form(const std::vector<Branch>& branches) {
  if (branches.empty()) throw InvalidArgument("no branches");
  LSeries acc(branches.front().ctx.base_var());
  for (const auto& b : branches) acc += di_form(b.ctx, b.w).coeff;
  return Form1{acc};
}

LSeries di_symbol(const std::vector<SymbolBranch>& branches, Prec2 cap) {
  if (branches.empty()) throw InvalidArgument("no branches");
  LSeries acc = LSeries::constant(branches.front().ctx.base_var(), FieldElem(1));
  for (const auto& b : branches) acc = (acc * di_symbol(b.ctx, b.phi, b.psi, cap)).truncated(cap.outer);
  return acc;
}

}  // namespace lf2
