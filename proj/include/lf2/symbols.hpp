#pragma once

#include <vector>

#include "lf2/germ.hpp"
#include "lf2/local2d.hpp"

namespace lf2 {

// mult * {entries[0], ..., entries[m-1]} in K^M_m, written additively.
template <class E>
struct MilnorSymbol {
  std::vector<E> entries;
  long mult = 1;
};

// Formal product of pairs (a, b)^mult.
template <class E>
struct K2Elem {
  struct Pair {
    E a, b;
    long mult = 1;
  };
  std::vector<Pair> pairs;

  void add(E a, E b, long mult = 1) { pairs.push_back({std::move(a), std::move(b), mult}); }
  void append(const K2Elem& o, long sign = 1) {
    for (const auto& p : o.pairs) pairs.push_back({p.a, p.b, p.mult * sign});
  }
};

// (-1)^{ab} phi^b psi^{-a} mod m, a = v(phi), b = v(psi).
FieldElem tame_symbol(const LSeries& phi, const LSeries& psi);
// Along the outer variable; the result lies in k((inner)).
LSeries tame_symbol(const L2Series& phi, const L2Series& psi, int inner_cap);

// Boundary to the residue field with the convention d{pi, u2, ..} = {u2bar, ..}.
std::vector<MilnorSymbol<LSeries>> milnor_boundary(const MilnorSymbol<L2Series>& s);
std::vector<MilnorSymbol<FieldElem>> milnor_boundary(const MilnorSymbol<LSeries>& s);
// Product of entries^mult for a sum of K_1 symbols.
FieldElem evaluate_k1(const std::vector<MilnorSymbol<FieldElem>>& s);

// Inverse of the 1D tame symbol applied to the boundary of {phi, psi, xi}.
FieldElem triple_symbol(const L2Series& phi, const L2Series& psi, const L2Series& xi, int inner_cap);

// res(sigma dlog phi ^ dlog psi)
FieldElem bracket_2d(const L2Series& phi, const L2Series& psi, const L2Series& sigma, Prec2 cap);
// res(zeta dlog xi)
FieldElem bracket_1d(const LSeries& xi, const LSeries& zeta, int cap);

// ---- germs of functions at a point x of a surface with parameters (u, t) ----

// Element num/den of Frac k[[u, t]].
struct GermFn {
  Germ num;
  Germ den;

  static GermFn of(const Germ& g) { return {g, Germ::constant(FieldElem(1), g.N())}; }
};

// Regular curve through x: t = g(u) (coordinate s = u) or u = g(t) (coordinate s = t).
// `equation` is the local equation used as its uniformizer.
class GermCurve {
 public:
  enum class Kind { TOfU, UOfT };

  GermCurve(Kind kind, LSeries g, int N);
  // Regular equation; NotRegular if its linear part vanishes.
  static GermCurve from_equation(const Germ& equation);

  Kind kind() const { return kind_; }
  const LSeries& graph() const { return g_; }
  const Germ& equation() const { return eq_; }
  int N() const { return eq_.N(); }
  // tangent direction (du : dt)
  std::pair<FieldElem, FieldElem> tangent() const;
  bool transversal(const GermCurve& o) const;

  // Expansion in K_{x,C} = k((s))((pi)), pi = t - g(u) or u - g(t).
  L2Series expand(const Germ& f) const;
  L2Series expand(const GermFn& f, Prec2 cap) const;
  LSeries restrict(const Germ& f) const;

 private:
  Kind kind_;
  LSeries g_;
  Germ eq_;
};

// Tame symbol along C of (a, b), an element of k(C)_x = k((s)).
LSeries tame_along(const GermFn& a, const GermFn& b, const GermCurve& c, Prec2 cap);
LSeries tame_along(const K2Elem<GermFn>& f, const GermCurve& c, Prec2 cap);

struct CurveTarget {
  GermCurve curve;
  LSeries f;  // in the variable "s"
};

// Element of K_2(Frac k[[u,t]]) with tame symbol f_C along each target curve and
// trivial tame symbol along every other curve through x.
K2Elem<GermFn> symbol_preimage(std::vector<CurveTarget> targets, int N);

// Target on a singular curve eq = 0 (u does not divide eq): f = (h1 mod eq) / (h2 mod eq).
struct SingularTarget {
  Germ equation;
  Germ h1, h2;
};

struct SingularReduction {
  K2Elem<GermFn> symbol;
  std::vector<CurveTarget> residual;  // regular targets left for symbol_preimage
};

// Reduce h1, h2 modulo the distinguished polynomial of eq and emit (h1'/h2', eq).
// Residual factors of t-degree >= 2 recurse as new singular targets and are
// assumed irreducible; the recursion depth is capped by `depth`.
SingularReduction reduce_singular_target(const SingularTarget& target, int depth = 4);

}  // namespace lf2
