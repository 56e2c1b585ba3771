// One line per acceptance criterion; exit status 0 iff all pass.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lf2/adeles.hpp"
#include "lf2/errors.hpp"
#include "lf2/verify.hpp"

using namespace lf2;

namespace {

const Prec2 P{8, 8};

struct Line {
  bool pass;
  std::string detail;
};

std::string suite_detail(const SuiteReport& r) {
  int ok = 0;
  std::string first_fail;
  for (const auto& c : r.cases) {
    ok += c.pass;
    if (!c.pass && first_fail.empty()) first_fail = "; first failure: " + c.inputs + " -> " + c.residual;
  }
  return r.suite + " " + std::to_string(ok) + "/" + std::to_string(r.cases.size()) + first_fail;
}

Line suites(const std::vector<std::string>& names, size_t min_cases = 0) {
  Line l{true, ""};
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n);
    l.pass = l.pass && r.pass && r.cases.size() >= min_cases;
    l.detail += (l.detail.empty() ? "" : ", ") + suite_detail(r);
  }
  return l;
}

// ---- fibre truncation ----

Line fibre_truncation() {
  const Scenario sc = Scenario::builtin("P1xA1");
  const ExprPtr w = parse_expr("u^-1 + t/(u-1) + t^2/(u-2) + t^3/(u-3) + t^4/(u-4) + t^5/(u-5)");
  std::vector<Flag> flags;
  bool ok = true;
  std::string detail;
  auto check = [&](const Flag& f, const LSeries& want) {
    const Form1 c = di_form(local_flag(sc, f, P).ctx, expand_form_at(sc, w, f, P));
    const LSeries d = c.coeff - want;
    ok = ok && d.is_zero() && d.prec() >= 6;
    detail += f.id() + ": " + to_string(c) + "; ";
  };
  for (int l = 0; l <= 5; ++l) {
    flags.push_back({"x" + std::to_string(l), "F0"});
    check(flags.back(), LSeries::monomial("t", FieldElem(1), l));
  }
  flags.push_back({"xinf", "F0"});
  LSeries partial("t");
  for (int l = 0; l <= 5; ++l) partial -= LSeries::monomial("t", FieldElem(1), l);
  check(flags.back(), partial);
  const Form1 total = global_pushforward_forms(sc, global_form_adele(sc, w, flags, P), Coord::parse("0"), P);
  ok = ok && total.coeff.is_zero() && total.coeff.prec() >= 6;
  return {ok, detail + "sum " + to_string(total)};
}

// ---- independent oracle for the generator table ----

// Finite sums c u^i t^j with 0 <= j < kN and |i| <= kM; other terms are dropped.
constexpr int kN = 8, kM = 12;
using Poly2 = std::map<std::pair<int, int>, Rational>;

void add_term(Poly2& p, int i, int j, const Rational& c) {
  if (j >= kN || j < 0 || i > kM || i < -kM || c == 0) return;
  Rational& x = p[{i, j}];
  x += c;
  if (x == 0) p.erase({i, j});
}
Poly2 operator+(Poly2 a, const Poly2& b) {
  for (const auto& [k, c] : b) add_term(a, k.first, k.second, c);
  return a;
}
Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_term(r, ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}
Poly2 scaled(Poly2 a, const Rational& c) {
  for (auto& [k, x] : a) x *= c;
  return a;
}
Poly2 mono2(int i, int j, const Rational& c = 1) {
  Poly2 p;
  add_term(p, i, j, c);
  return p;
}
// sum_{k >= 1} (-1)^(k+1) x^k / k, x without constant term
Poly2 log1p(const Poly2& x) {
  Poly2 r, xk = x;
  for (int k = 1; k <= kN + kM + 2; ++k) {
    r = r + scaled(xk, Rational(k % 2 ? 1 : -1, k));
    xk = xk * x;
  }
  return r;
}
Poly2 inv1p(const Poly2& x) {
  Poly2 r = mono2(0, 0), xk = mono2(0, 0);
  for (int k = 1; k <= kN + kM + 2; ++k) {
    xk = scaled(xk * x, -1);
    r = r + xk;
  }
  return r;
}
Poly2 du(const Poly2& a) {
  Poly2 r;
  for (const auto& [k, c] : a) add_term(r, k.first - 1, k.second, c * k.first);
  return r;
}
// u^-1 coefficient, as a polynomial in t
std::vector<Rational> res_u(const Poly2& a) {
  std::vector<Rational> r(kN);
  for (const auto& [k, c] : a)
    if (k.first == -1) r[k.second] += c;
  return r;
}
using Ser = std::vector<Rational>;  // t-adic, kN terms
Ser smul(const Ser& a, const Ser& b) {
  Ser r(kN);
  for (int i = 0; i < kN; ++i)
    for (int j = 0; i + j < kN; ++j) r[i + j] += a[i] * b[j];
  return r;
}
Ser sexp(const Ser& x) {
  Ser r(kN), xk(kN);
  r[0] = xk[0] = 1;
  Rational fact = 1;
  for (int k = 1; k < kN; ++k) {
    xk = smul(xk, x);
    fact *= k;
    for (int i = 0; i < kN; ++i) r[i] += xk[i] / fact;
  }
  return r;
}
Ser sinv(const Ser& a) {  // a[0] != 0
  Ser r(kN);
  r[0] = 1 / a[0];
  for (int n = 1; n < kN; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}
Ser sconst(const Rational& c) {
  Ser r(kN);
  r[0] = c;
  return r;
}

// t^m u^n c (1 + x)
struct Gen {
  std::string name;
  int m, n;
  Rational c;
  Poly2 x;
};

// Laurent value t^e * s
struct TVal {
  int e = 0;
  Ser s = sconst(1);
};
TVal tmul(const TVal& a, const TVal& b) { return {a.e + b.e, smul(a.s, b.s)}; }
TVal tpow(const TVal& a, int k) {
  TVal r;
  const TVal base = k >= 0 ? a : TVal{-a.e, sinv(a.s)};
  for (int i = 0; i < std::abs(k); ++i) r = tmul(r, base);
  return r;
}

// exp res_u(ln eps du / u)
TVal E(const Gen& g) { return {0, sexp(res_u(log1p(g.x) * mono2(-1, 0)))}; }
// exp res_u(ln eps1 d_u eps2 / eps2)
TVal G(const Gen& a, const Gen& b) {
  return {0, sexp(res_u(log1p(a.x) * du(b.x) * inv1p(b.x)))};
}

// the table, applied bimultiplicatively to u^n1 t^m1 c1 eps1 and u^n2 t^m2 c2 eps2
TVal oracle(const Gen& a, const Gen& b) {
  TVal r;
  r = tmul(r, tpow({0, sconst(-1)}, a.n * b.n));             // (u, u) = -1
  r = tmul(r, tpow({1, sconst(1)}, a.n * b.m));              // (u, t) = t
  r = tmul(r, tpow({0, sconst(b.c)}, a.n));                  // (u, b) = b
  r = tmul(r, tpow(E(b), a.n));                              // (u, eps)
  r = tmul(r, tpow({-1, sconst(1)}, a.m * b.n));             // (t, u) = t^-1
  r = tmul(r, tpow({0, sconst(a.c)}, -b.n));                 // (a, u) = a^-1
  r = tmul(r, tpow(E(a), -b.n));                             // (eps, u)
  r = tmul(r, tpow(G(a, b), -1));                            // (eps1, eps2)
  return r;
}

std::string show(const TVal& v) {
  std::string r;
  for (int i = 0; i < kN; ++i)
    if (v.s[i] != 0) r += (r.empty() ? "" : " + ") + to_string(v.s[i]) + "*t^" + std::to_string(v.e + i);
  return r.empty() ? "0" : r;
}

Line table() {
  const std::vector<Gen> gens{{"u", 0, 1, 1, {}},
                              {"t", 1, 0, 1, {}},
                              {"2", 0, 0, 2, {}},
                              {"-1", 0, 0, -1, {}},
                              {"1+u", 0, 0, 1, mono2(1, 0)},
                              {"1+t", 0, 0, 1, mono2(0, 1)},
                              {"1+t/u", 0, 0, 1, mono2(-1, 1)}};
  auto series = [](const Gen& g) {
    L2Series x = L2Series::monomial("u", "t", FieldElem(g.c), g.n, g.m);
    L2Series e = L2Series::constant("u", "t", FieldElem(1));
    for (const auto& [k, c] : g.x) e += L2Series::monomial("u", "t", FieldElem(c), k.first, k.second);
    return x * e;
  };
  bool ok = true;
  int count = 0;
  std::string bad;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const TVal want = oracle(a, b);
      LSeries w("t", want.e + kN);
      for (int i = 0; i < kN; ++i) w += LSeries::monomial("t", FieldElem(want.s[i]), want.e + i).truncated(want.e + kN);
      const LSeries got = table_pairing(series(a), series(b), P);
      const LSeries d = got - w;
      const bool good = d.is_zero() && d.prec() >= std::min(want.e + kN, P.outer);
      ok = ok && good;
      ++count;
      if (!good && bad.empty()) bad = "; (" + a.name + ", " + b.name + "): got " + to_string(got) + ", oracle " + show(want);
    }
  // named entries
  auto val = [&](const char* x, const char* y) {
    return to_string(table_pairing(parse_l2series(x, "u", "t", P), parse_l2series(y, "u", "t", P), P));
  };
  const bool named = val("u", "t") == "t" && val("t", "u") == "t^-1" && val("u", "-1") == "-1";
  return {ok && named, std::to_string(count) + " pairs against the oracle; (u,t) = " + val("u", "t") + ", (t,u) = " +
                           val("t", "u") + ", (u,-1) = " + val("u", "-1") + bad};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Line (*run)();
  };
  const Criterion criteria[] = {
      {"fibre truncation with N = 5", fibre_truncation},
      {"table pairing on the generator set", table},
      {"norm of triple symbol vs tame symbol of direct image", [] { return suites({"thm1-d"}, 2 * (64 + 50)); }},
      {"trace of 2D bracket vs 1D bracket of direct image", [] { return suites({"thm1-dd"}, 2 * (64 + 50)); }},
      {"Steinberg and skew-symmetry", [] { return suites({"steinberg"}, 200); }},
      {"residue of xi dlog of tame symbol and of fibre pairing", [] { return suites({"lemma-l4", "lemma-ll"}, 50); }},
      {"reciprocity", [] { return suites({"point-forms", "point-symbols", "fibre-symbols", "fibre-forms"}); }},
      {"Gysin multiplicity", [] { return suites({"gysin"}); }},
      {"morphism of complexes", [] { return suites({"morphism"}); }},
      {"parameter independence", [] { return suites({"param-independence"}, 25); }},
      {"Tate compatibility", [] { return suites({"tate-compat"}); }},
      {"oracle consistency of residues", [] { return suites({"residues"}, 250); }},
  };
  int failed = 0, i = 0;
  for (const auto& c : criteria) {
    Line l;
    try {
      l = c.run();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    failed += !l.pass;
    std::printf("%s  %2d  %s: %s\n", l.pass ? "PASS" : "FAIL", ++i, c.name, l.detail.c_str());
  }
  std::printf("%d/%d criteria pass\n", i - failed, i);
  return failed == 0 ? 0 : 1;
}
