#include "lf2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lf2/errors.hpp"

namespace lf2 {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  std::string residual;
  bool pass;
};

struct Job {
  std::string inputs;
  std::function<Outcome()> check;
};

const Rational kPool[] = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                          Rational(1, 3)};

FieldElem pick(Rng& rng, bool nonzero = false) {
  return FieldElem(nonzero ? kPool[1 + rng() % 6] : kPool[rng() % 7]);
}
int pick_int(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

std::string paren(const Rational& q) { return "(" + to_string(q) + ")"; }
std::string paren(const FieldElem& c) { return paren(c.rational()); }

Rng case_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(i)};
  return Rng(seq);
}

std::vector<CaseResult> run_jobs(const std::vector<Job>& jobs, int threads) {
  std::vector<CaseResult> out(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < jobs.size();) {
      CaseResult& r = out[i];
      r.inputs = jobs[i].inputs;
      try {
        const Outcome o = jobs[i].check();
        r.residual = o.residual;
        r.pass = o.pass;
      } catch (const InsufficientPrecision& e) {
        r.residual = std::string("insufficient precision: ") + e.what();
        r.insufficient_precision = true;
      } catch (const std::exception& e) {
        r.residual = std::string("error: ") + e.what();
      }
    }
  };
  int n = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n = std::min<int>(n, static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

LSeries one(const std::string& var = "t") { return LSeries::constant(var, FieldElem(1)); }
L2Series one2(const std::string& in, const std::string& out) { return L2Series::constant(in, out, FieldElem(1)); }
L2Series mono(const std::string& in, const std::string& out, const FieldElem& c, int i, int j) {
  return L2Series::monomial(in, out, c, i, j);
}

// x - 1 vanishes in a window that reaches the constant term
Outcome expect_one(const LSeries& x) {
  const LSeries d = x - one(x.var());
  return {to_string(d), d.is_zero() && d.prec() >= 1};
}
Outcome expect_zero(const LSeries& x) { return {to_string(x), x.is_zero() && x.prec() >= 1}; }
Outcome expect_equal(const FieldElem& a, const FieldElem& b) { return {to_string(a - b), a == b}; }

Outcome all_of(const std::vector<Outcome>& os) {
  Outcome r{"", true};
  for (const auto& o : os) {
    if (!r.residual.empty()) r.residual += "; ";
    r.residual += o.residual;
    r.pass = r.pass && o.pass;
  }
  return r;
}

// t^m u^n c (1 + ...), exact
L2Series random_elem(Rng& rng, const std::string& in, const std::string& out) {
  const int m = pick_int(rng, -1, 1), n = pick_int(rng, -1, 1);
  L2Series r = mono(in, out, pick(rng, true), n, m);
  for (int i = n + 1; i < n + 3; ++i) r += mono(in, out, pick(rng), i, m);
  for (int i = n - 1; i < n + 2; ++i) r += mono(in, out, pick(rng), i, m + 1);
  return r;
}

LSeries random_regular(Rng& rng, const std::string& var) {
  LSeries r = LSeries::constant(var, pick(rng, true));
  for (int k = 1; k <= 3; ++k) r += LSeries::monomial(var, pick(rng), k);
  return r;
}

std::vector<Flag> flags_of(std::initializer_list<const char*> ids) {
  std::vector<Flag> r;
  for (const char* s : ids) r.push_back(parse_flag(s));
  return r;
}

std::string flag_list(const std::vector<Flag>& fs) {
  std::string r;
  for (const auto& f : fs) r += (r.empty() ? "" : ",") + f.id();
  return r;
}

Outcome reciprocity_outcome(const ReciprocityResult& r) {
  std::string s = "total " + r.total + " [";
  for (size_t i = 0; i < r.parts.size(); ++i) s += (i ? ", " : "") + r.parts[i].flag.id() + ": " + r.parts[i].value;
  return {s + "] at caps " + std::to_string(r.cap.inner) + "," + std::to_string(r.cap.outer), r.pass};
}

// ---- forms ----

std::vector<Job> fibre_forms(const Scenario& sc, const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  for (int N = 1; N <= 5; ++N) {
    std::string w = "u^-1";
    std::vector<Flag> flags{parse_flag("x0@F0")};
    for (int l = 1; l <= N; ++l) {
      w += " + t^" + std::to_string(l) + "/(u-" + std::to_string(l) + ")";
      flags.push_back(parse_flag("x" + std::to_string(l) + "@F0"));
    }
    flags.push_back(parse_flag("xinf@F0"));
    jobs.push_back({"(" + w + ") du^dt over " + flag_list(flags), [=, &sc] {
                      const ReciprocityResult r = reciprocity_forms(sc, parse_expr(w), flags, P);
                      const Form1 total = global_pushforward_forms(sc, global_form_adele(sc, parse_expr(w), flags, P),
                                                                   Coord::parse("0"), P);
                      Outcome o = reciprocity_outcome(r);
                      o.pass = o.pass && total.coeff.is_zero() && total.coeff.prec() >= N + 1;
                      return o;
                    }});
  }
  const auto flags = flags_of({"x0@F0", "x1@F0", "x2@F0", "x3@F0", "xinf@F0"});
  for (int i = 0; i < 20; ++i) {
    Rng rng = case_rng(opt.seed, 1, i);
    std::string w;
    auto term = [&](const std::string& t) { w += (w.empty() ? "" : " + ") + t; };
    for (int l = 0; l <= 3; ++l)
      if (rng() % 3)
        term(paren(pick(rng, true)) + "*t^" + std::to_string(pick_int(rng, -1, 2)) + "/(u-" + std::to_string(l) +
             ")^" + std::to_string(pick_int(rng, 1, 2)));
    for (int k = 0; k <= 2; ++k)
      if (rng() % 2) term(paren(pick(rng, true)) + "*t^" + std::to_string(pick_int(rng, -1, 2)) + "*u^" + std::to_string(k));
    if (w.empty()) w = "0";
    jobs.push_back({"(" + w + ") du^dt over " + flag_list(flags),
                    [=, &sc] { return reciprocity_outcome(reciprocity_forms(sc, parse_expr(w), flags, opt.prec)); }});
  }
  return jobs;
}

// a = u^i t^j (u-t)^k (1+u)^m (1+t)^n
struct Monomials {
  int e[5];
  std::string text() const {
    static const char* base[] = {"u", "t", "(u-t)", "(1+u)", "(1+t)"};
    std::string r;
    for (int k = 0; k < 5; ++k)
      if (e[k]) r += (r.empty() ? "" : "*") + std::string(base[k]) + "^" + std::to_string(e[k]);
    return r.empty() ? "1" : r;
  }
  // (d/du, d/dt) of log
  std::pair<std::string, std::string> dlog() const {
    const std::string i = std::to_string(e[0]), j = std::to_string(e[1]), k = std::to_string(e[2]),
                      m = std::to_string(e[3]), n = std::to_string(e[4]);
    return {"(" + i + "/u + " + k + "/(u-t) + " + m + "/(1+u))", "(" + j + "/t - " + k + "/(u-t) + " + n + "/(1+t))"};
  }
};

Monomials random_monomials(Rng& rng) {
  Monomials a{};
  for (int& x : a.e) x = pick_int(rng, -2, 2);
  return a;
}

std::vector<Job> point_forms(const Scenario& sc, const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const auto flags = flags_of({"x0@U0", "x0@F0", "x0@D"});
  jobs.push_back({"dlog u ^ dlog t over x0@U0,x0@F0", [=, &sc] {
                    return reciprocity_outcome(
                        reciprocity_forms(sc, parse_expr("1/(u*t)"), flags_of({"x0@U0", "x0@F0"}), opt.prec));
                  }});
  jobs.push_back({"0 over " + flag_list(flags), [=, &sc] {
                    return reciprocity_outcome(reciprocity_forms(sc, parse_expr("0"), flags, opt.prec));
                  }});
  for (int i = 0; i < 25; ++i) {
    Rng rng = case_rng(opt.seed, 2, i);
    const Monomials a = random_monomials(rng), b = random_monomials(rng);
    const auto [au, at] = a.dlog();
    const auto [bu, bt] = b.dlog();
    const std::string g = au + "*" + bt + " - " + at + "*" + bu;
    jobs.push_back({"dlog(" + a.text() + ") ^ dlog(" + b.text() + ") over " + flag_list(flags), [=, &sc] {
                      return reciprocity_outcome(reciprocity_forms(sc, parse_expr(g), flags, opt.prec));
                    }});
  }
  for (int i = 0; i < 15; ++i) {
    Rng rng = case_rng(opt.seed, 3, i);
    std::string h;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b)
        if (rng() % 2) h += (h.empty() ? "" : " + ") + paren(pick(rng, true)) + "*u^" + std::to_string(a) + "*t^" + std::to_string(b);
    if (h.empty()) h = "1";
    const std::string g = "(" + h + ")/(u^" + std::to_string(pick_int(rng, 0, 2)) + "*t^" +
                          std::to_string(pick_int(rng, 0, 2)) + "*(u-t)^" + std::to_string(pick_int(rng, 0, 2)) + ")";
    jobs.push_back({"(" + g + ") du^dt over " + flag_list(flags), [=, &sc] {
                      return reciprocity_outcome(reciprocity_forms(sc, parse_expr(g), flags, opt.prec));
                    }});
  }
  return jobs;
}

// ---- symbols on the surface ----

Job symbol_job(const Scenario& sc, const std::string& phi, const std::string& psi, const std::vector<Flag>& flags,
               Prec2 P) {
  return {"(" + phi + ", " + psi + ") over " + flag_list(flags), [=, &sc] {
            return reciprocity_outcome(reciprocity_symbols(sc, parse_expr(phi), parse_expr(psi), flags, P));
          }};
}

std::vector<Job> fibre_symbols(const Scenario& sc, const VerifyOptions& opt) {
  std::vector<Job> jobs;
  jobs.push_back(symbol_job(sc, "u", "1 - u", flags_of({"x0@F0", "x1@F0", "xinf@F0"}), opt.prec));
  jobs.push_back(symbol_job(sc, "u", "t", flags_of({"x0@F0", "xinf@F0"}), opt.prec));
  const auto flags = flags_of({"x0@F0", "x1@F0", "x2@F0", "xinf@F0"});
  auto random_fn = [](Rng& rng) {
    std::string r = paren(pick(rng, true)) + "*t^" + std::to_string(pick_int(rng, -1, 2)) + "*u^" +
                    std::to_string(pick_int(rng, -2, 2)) + "*(u-1)^" + std::to_string(pick_int(rng, -1, 1)) +
                    "*(u-2)^" + std::to_string(pick_int(rng, -1, 1));
    if (rng() % 3 == 0) r += "*(1+t*u)";
    if (rng() % 3 == 0) r += "*(1+t)";
    return r;
  };
  for (int i = 0; i < 30; ++i) {
    Rng rng = case_rng(opt.seed, 4, i);
    const std::string a = random_fn(rng), b = random_fn(rng);
    jobs.push_back(symbol_job(sc, a, b, flags, opt.prec));
  }
  return jobs;
}

std::vector<Job> point_symbols(const Scenario& sc, const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const auto flags = flags_of({"x0@U0", "x0@F0", "x0@D"});
  jobs.push_back(symbol_job(sc, "u", "t", flags_of({"x0@U0", "x0@F0"}), opt.prec));
  jobs.push_back(symbol_job(sc, "u - t", "t*(1+u)", flags, opt.prec));
  for (int i = 0; i < 30; ++i) {
    Rng rng = case_rng(opt.seed, 5, i);
    const std::string a = paren(pick(rng, true)) + "*" + random_monomials(rng).text();
    const std::string b = paren(pick(rng, true)) + "*" + random_monomials(rng).text();
    jobs.push_back(symbol_job(sc, a, b, flags, opt.prec));
  }
  return jobs;
}

// ---- local compatibilities ----

struct Case {
  std::string label;
  FlagContext ctx;
};

std::vector<Case> contexts() {
  return {{"C=F", FlagContext::fibre("u", "t", "t")}, {"C!=F", FlagContext::transverse("t", "u", "t")}};
}

struct Generator {
  std::string name;
  L2Series value;
};

// u, t, 2, -1, 1+u, 1+t, 1+t/u, 1+u+t in the inner/outer variables of the flag
std::vector<Generator> generators(const std::string& in, const std::string& out) {
  const L2Series u = mono(in, out, FieldElem(1), 1, 0), t = mono(in, out, FieldElem(1), 0, 1), e = one2(in, out);
  return {{in, u},
          {out, t},
          {"2", mono(in, out, FieldElem(2), 0, 0)},
          {"-1", mono(in, out, FieldElem(-1), 0, 0)},
          {"1+" + in, e + u},
          {"1+" + out, e + t},
          {"1+" + out + "/" + in, e + mono(in, out, FieldElem(1), -1, 1)},
          {"1+" + in + "+" + out, e + u + t}};
}

Outcome thm1_d(const FlagContext& ctx, const L2Series& a, const L2Series& b, const std::vector<LSeries>& xis, Prec2 P) {
  const LSeries ds = di_symbol(ctx, a, b, P);
  std::vector<Outcome> os;
  for (const auto& xi : xis)
    os.push_back(expect_equal(ctx.ext.norm(triple_symbol(a, b, embed(ctx, xi, P), P.inner)), tame_symbol(ds, xi)));
  return all_of(os);
}

Outcome thm1_dd(const FlagContext& ctx, const L2Series& a, const L2Series& b, const std::vector<LSeries>& zetas,
                Prec2 P) {
  const LSeries ds = di_symbol(ctx, a, b, P);
  std::vector<Outcome> os;
  for (const auto& z : zetas)
    os.push_back(expect_equal(ext_trace(bracket_2d(a, b, embed(ctx, z, P), P), ctx.ext.residue()),
                              bracket_1d(ds, z, P.outer)));
  return all_of(os);
}

std::vector<Job> thm1(const VerifyOptions& opt, bool dd) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  const LSeries tau = LSeries::monomial("t", FieldElem(1), 1);
  const std::vector<LSeries> tests =
      dd ? std::vector<LSeries>{one(), LSeries::monomial("t", FieldElem(1), -1), LSeries::monomial("t", FieldElem(1), -3),
                                one() + tau}
         : std::vector<LSeries>{tau, LSeries::constant("t", FieldElem(3)), one() + tau};
  auto check = [dd](const FlagContext& ctx, const L2Series& a, const L2Series& b, const std::vector<LSeries>& xs,
                    Prec2 P) { return dd ? thm1_dd(ctx, a, b, xs, P) : thm1_d(ctx, a, b, xs, P); };
  const std::string over = dd ? " with zeta in {1, t^-1, t^-3, 1+t}" : " with xi in {t, 3, 1+t}";
  for (const auto& c : contexts()) {
    const auto gens = generators(c.ctx.inner, c.ctx.outer);
    for (const auto& a : gens)
      for (const auto& b : gens)
        jobs.push_back({c.label + ": (" + a.name + ", " + b.name + ")" + over,
                        [=] { return check(c.ctx, a.value, b.value, tests, P); }});
    for (int i = 0; i < 50; ++i) {
      Rng rng = case_rng(opt.seed, dd ? 7 : 6, i + (c.label == "C=F" ? 0 : 1000));
      const L2Series a = random_elem(rng, c.ctx.inner, c.ctx.outer), b = random_elem(rng, c.ctx.inner, c.ctx.outer);
      const int k = dd ? pick_int(rng, -3, 0) : pick_int(rng, -1, 1);
      const LSeries x = pick(rng, true) * random_regular(rng, "t").shifted(k);
      std::vector<LSeries> xs{x};
      if (dd) xs.push_back(one());
      jobs.push_back({c.label + ": (" + to_string(a) + ", " + to_string(b) + ") with " + to_string(x),
                      [=] { return check(c.ctx, a, b, xs, P); }});
    }
  }
  return jobs;
}

std::vector<Job> steinberg(const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  for (const auto& c : contexts()) {
    for (int i = 0; i < 100; ++i) {
      Rng rng = case_rng(opt.seed, 8, i + (c.label == "C=F" ? 0 : 1000));
      L2Series a = random_elem(rng, c.ctx.inner, c.ctx.outer);
      L2Series om = one2(c.ctx.inner, c.ctx.outer) - a;
      while (om.is_zero()) {
        a = random_elem(rng, c.ctx.inner, c.ctx.outer);
        om = one2(c.ctx.inner, c.ctx.outer) - a;
      }
      const L2Series b = random_elem(rng, c.ctx.inner, c.ctx.outer);
      jobs.push_back({c.label + ": phi = " + to_string(a) + ", psi = " + to_string(b), [=] {
                        const LSeries st = di_symbol(c.ctx, a, om, P);
                        const LSeries skew = di_symbol(c.ctx, a, b, P) * di_symbol(c.ctx, b, a, P);
                        return all_of({expect_one(st), expect_one(skew.truncated(P.outer))});
                      }});
    }
  }
  return jobs;
}

LSeries lemma_xi(Rng& rng, int i) {
  if (i % 5 < 4) return LSeries::monomial("t", FieldElem(1), -(i % 5 + 1));
  return random_regular(rng, "t");
}

std::vector<Job> lemma_l4(const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  // K = k((t))((u)): inner t, outer u
  for (int i = 0; i < 50; ++i) {
    Rng rng = case_rng(opt.seed, 9, i);
    const L2Series f = random_elem(rng, "t", "u"), g = random_elem(rng, "t", "u");
    const LSeries xi = lemma_xi(rng, i);
    jobs.push_back({"f = " + to_string(f) + ", g = " + to_string(g) + ", xi = " + to_string(xi), [=] {
                      return expect_equal(bracket_2d(f, g, L2Series::lift(xi, "u"), P),
                                          bracket_1d(tame_symbol(f, g, P.inner), xi, P.inner));
                    }});
  }
  return jobs;
}

std::vector<Job> lemma_ll(const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  const FlagContext F = FlagContext::fibre("u", "t", "t");
  for (int i = 0; i < 50; ++i) {
    Rng rng = case_rng(opt.seed, 10, i);
    const L2Series a = random_elem(rng, "u", "t"), b = random_elem(rng, "u", "t");
    const LSeries xi = lemma_xi(rng, i);
    jobs.push_back({"phi = " + to_string(a) + ", psi = " + to_string(b) + ", xi = " + to_string(xi), [=] {
                      return expect_equal(bracket_2d(a, b, embed(F, xi, P), P),
                                          bracket_1d(table_pairing(a, b, P), xi, P.outer));
                    }});
  }
  return jobs;
}

// ---- cycles ----

std::string cycle_text(const std::map<std::string, long>& c) {
  std::string r;
  for (const auto& [k, v] : c) r += (r.empty() ? "" : " + ") + std::to_string(v) + "[" + k + "]";
  return r.empty() ? "0" : r;
}

std::vector<Job> gysin(const Scenario& sc, const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  auto single = [&](const std::string& flag, const std::string& a, const std::string& b, std::map<std::string, long> cyc,
                    std::map<std::string, long> div) {
    jobs.push_back({"{" + flag + " -> (" + a + ", " + b + ")}", [=, &sc] {
                      K2Elem<ExprPtr> k;
                      k.add(parse_expr(a), parse_expr(b));
                      const K2Adele A = global_k2_adele(sc, k, {parse_flag(flag)}, P);
                      const auto c = cycle_of_adele(sc, A, P), g = gysin_cycle(sc, A, P);
                      return Outcome{"cycle " + cycle_text(c) + ", gysin " + cycle_text(g), c == cyc && g == div};
                    }});
  };
  single("x0@F0", "u", "t", {{"x0", 1}}, {{"0", 1}});
  const Point& xa = sc.point("xa");
  if (xa.field) single("xa@F0", "u - " + xa.field->generator(), "t", {{"xa", 1}}, {{"0", 2}});
  jobs.push_back({"identity adele", [=, &sc] {
                    const K2Adele A;
                    return Outcome{"cycle " + cycle_text(cycle_of_adele(sc, A, P)) + ", gysin " +
                                       cycle_text(gysin_cycle(sc, A, P)),
                                   cycle_of_adele(sc, A, P).empty() && gysin_cycle(sc, A, P).empty()};
                  }});
  const auto flags = flags_of({"x0@F0", "x1@F0", "xa@F0", "x0@U0", "x1@U1", "x0@Q", "x0@D"});
  const std::vector<std::string> fns{"u", "t", "u-1", "u-t", "u^2-2", "t-u^2", "1+u", "2", "-1", "1+t", "t^2*(u-1)"};
  for (int i = 0; i < 20; ++i) {
    Rng rng = case_rng(opt.seed, 11, i);
    std::map<Flag, K2Elem<ExprPtr>> data;
    std::string text;
    for (const auto& f : flags) {
      if (rng() % 2) continue;
      K2Elem<ExprPtr>& k = data[f];
      const int n = pick_int(rng, 1, 2);
      for (int j = 0; j < n; ++j) {
        const std::string a = fns[rng() % fns.size()], b = fns[rng() % fns.size()];
        const long m = pick_int(rng, -2, 2);
        k.add(parse_expr(a), parse_expr(b), m);
        text += (text.empty() ? "" : ", ") + f.id() + " -> (" + a + ", " + b + ")^" + std::to_string(m);
      }
    }
    jobs.push_back({"{" + text + "}", [=, &sc] {
                      K2Adele A;
                      for (const auto& [f, k] : data) A.support[f] = expand_k2_at(sc, k, f, P);
                      const auto c = cycle_of_adele(sc, A, P), g = gysin_cycle(sc, A, P);
                      long deg = 0;
                      for (const auto& [x, n] : c) deg += n * sc.point(x).degree();
                      const long s = g.count("0") ? g.at("0") : 0;
                      return Outcome{"cycle " + cycle_text(c) + ", gysin " + cycle_text(g), deg == s};
                    }});
  }
  return jobs;
}

// ---- parameter independence ----

// T with T (c + extra + T) = x, i.e. the inverse of x = T (c + extra + T)
L2Series solve_unit_change(const L2Series& x, const L2Series& extra, Prec2 P) {
  const L2Series base = one2(x.inner_var(), x.outer_var()) + extra;
  L2Series T = x;
  for (int k = 0; k <= P.outer; ++k) T = (x * inverse(base + T, P)).truncated(P);
  return T;
}

std::vector<Job> param_independence(const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  const FlagContext F = FlagContext::fibre("u", "t", "t"), Tr = FlagContext::transverse("t", "u", "t");
  for (int i = 0; i < 25; ++i) {
    Rng rng = case_rng(opt.seed, 12, i);
    L2Series g("u", "t");
    for (int a = -2; a <= 1; ++a)
      for (int b = -2; b <= 1; ++b)
        if (rng() % 2) g += mono("u", "t", pick(rng), a, b);
    const L2Series a = random_elem(rng, "u", "t"), b = random_elem(rng, "u", "t");
    const L2Series c = random_elem(rng, "t", "u"), d = random_elem(rng, "t", "u");
    jobs.push_back({"w = (" + to_string(g) + ") du^dt; fibre (" + to_string(a) + ", " + to_string(b) +
                        "); transverse (" + to_string(c) + ", " + to_string(d) + ")",
                    [=] {
                      std::vector<Outcome> os;
                      // u = h(u'), u' = u (1 + u)
                      const LSeries h = reversion(LSeries::from_coeffs("u", {{1, FieldElem(1)}, {2, FieldElem(1)}}), P.inner + 4);
                      const Form2 w{g}, wu{(derivative(h) * substitute_inner(g, h, {P.inner + 4, P.outer})).truncated(P)};
                      os.push_back(expect_zero((res_inner(w).coeff - res_inner(wu).coeff)));
                      os.push_back(expect_equal(res_total(w), res_total(wu)));
                      // t = T(u, t'), t' = t (1 + t + u)
                      const L2Series T = solve_unit_change(mono("u", "t", FieldElem(1), 0, 1), mono("u", "t", FieldElem(1), 1, 0), P);
                      const Form2 wt{(substitute_outer(g, T, P) * d_outer(T)).truncated(P)};
                      os.push_back(expect_zero((res_outer(w).coeff - res_outer(wt).coeff).truncated(P.inner - 4)));
                      os.push_back(expect_equal(res_total(w), res_total(wt)));
                      // symbols
                      const Prec2 Q{P.inner + 4, P.outer};
                      const LSeries s0 = di_symbol(F, a, b, P);
                      const LSeries s1 = di_symbol(F, substitute_inner(a, h, Q).truncated(Q), substitute_inner(b, h, Q).truncated(Q), P);
                      os.push_back(expect_one((s0 * inverse(s1, P.outer)).truncated(P.outer)));
                      const L2Series U = solve_unit_change(mono("t", "u", FieldElem(1), 0, 1), mono("t", "u", FieldElem(1), 1, 0), P);
                      const LSeries r0 = di_symbol(Tr, c, d, P);
                      const LSeries r1 = di_symbol(Tr, substitute_outer(c, U, P), substitute_outer(d, U, P), P);
                      os.push_back(expect_one((r0 * inverse(r1, P.outer)).truncated(P.outer)));
                      return all_of(os);
                    }});
  }
  return jobs;
}

// ---- Tate map ----

// Lower bound on nu(dlog a ^ dlog b) by the class of (a, b), or none.
std::optional<int> expected_nu(K2Class c, int level) {
  switch (c) {
    case K2Class::Integral:
      return 0;
    case K2Class::Congruence:
      return level - 1;
    case K2Class::HatInfinity:
      return -1;
    case K2Class::Other:
      return std::nullopt;
  }
  return std::nullopt;
}

Outcome tate_check(const K2Adele& A, int level, Prec2 P) {
  const AdelicK2Report kr = check_adelic_k2(A, level);
  if (!kr.pass) return {"K2 conditions: " + kr.violations.front(), false};
  AdelicFormOptions fo;
  std::string classes;
  for (const auto& e : kr.entries) {
    std::optional<int> nu = 1 << 20;
    bool hat = true;
    for (const auto c : e.pairs) {
      classes += (classes.empty() ? "" : ", ") + e.flag.id() + ":" + to_string(c);
      const auto x = expected_nu(c, level);
      nu = (nu && x) ? std::optional<int>(std::min(*nu, *x)) : std::nullopt;
      hat = hat && c == K2Class::HatInfinity;
    }
    if (nu && !e.pairs.empty()) fo.vanishing_below[e.flag] = *nu;
    if (hat && !e.pairs.empty()) fo.regular_coefficients.insert(e.flag);
  }
  const AdelicFormReport fr = check_adelic_form(tate_map(A, P), fo);
  std::string div;
  for (const auto& [c, n] : fr.divisor) div += (div.empty() ? "" : " + ") + std::to_string(n) + "*" + c;
  return {"classes [" + classes + "], D = " + (div.empty() ? "0" : div) +
              (fr.violations.empty() ? "" : ", " + fr.violations.front()),
          fr.pass};
}

std::vector<Job> tate_compat(const Scenario& sc, const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  const auto flags = flags_of({"x0@F0", "x1@F0", "xinf@F0", "x0@U0", "x0@D", "x0@Q", "xa@F0"});
  const std::vector<std::string> fns{"1+u", "1+t", "1+t^2*u", "1+t*u", "2", "u", "t", "u-t", "1+u+t", "t^2", "(1+u)*t", "u-1"};
  for (int i = 0; i < 30; ++i) {
    Rng rng = case_rng(opt.seed, 13, i);
    const int level = pick_int(rng, 1, 2);
    std::map<Flag, K2Elem<ExprPtr>> data;
    std::string text;
    const bool idele = i >= 20;  // pairing of two multiplicative adeles
    for (const auto& f : flags) {
      if (rng() % 2) continue;
      const int n = idele ? 1 : pick_int(rng, 1, 2);
      for (int j = 0; j < n; ++j) {
        const std::string a = fns[rng() % fns.size()], b = fns[rng() % fns.size()];
        data[f].add(parse_expr(a), parse_expr(b));
        text += (text.empty() ? "" : ", ") + f.id() + " -> (" + a + ", " + b + ")";
      }
    }
    jobs.push_back({std::string(idele ? "pairing of ideles " : "") + "{" + text + "} at level " + std::to_string(level),
                    [=, &sc] {
                      K2Adele A;
                      for (const auto& [f, k] : data) A.support[f] = expand_k2_at(sc, k, f, P);
                      Outcome o = tate_check(A, level, P);
                      if (idele) {
                        // unit against unit lands in K2 of the valuation ring
                        for (const auto& [f, v] : A.support)
                          for (const auto& p : v.pairs) {
                            const K2Class c = classify_pair(p.a, p.b, level);
                            const bool units = p.a.valuation() == 0 && p.b.valuation() == 0;
                            if (units && c != K2Class::Integral && c != K2Class::Congruence) o.pass = false;
                          }
                      }
                      return o;
                    }});
  }
  return jobs;
}

// ---- morphism of complexes ----

const char* const kComplexFlags[] = {"x0@F0", "x1@F0", "xinf@F0", "x0@U0", "x0@D", "x1@U1", "x1@D1", "xinf@Uinf"};

std::vector<Flag> complex_flags() {
  std::vector<Flag> r;
  for (const char* s : kComplexFlags) r.push_back(parse_flag(s));
  return r;
}

std::vector<Job> morphism(const Scenario& sc, const VerifyOptions& opt) {
  std::vector<Job> jobs;
  const Prec2 P = opt.prec;
  const Coord s0 = Coord::parse("0");
  struct FT {
    std::string f0;
    std::map<std::string, std::string> f1, f2;
  };
  const std::vector<FT> forms{
      {"1/(u*t)", {{"F0", "1/(u*(u-1))"}, {"U0", "1/(1+t)"}}, {{"x0", "1/(1+u+t)"}}},
      {"1/(u*(u-1)*t^2) + 1/(u-t)", {{"D", "1/(1-u)"}}, {{"x1", "u/(1+t)"}}},
      {"t/(u^2*(u-1))", {{"U1", "1/t"}, {"F0", "t/u^3"}}, {{"x0", "1 + u*t"}}},
  };
  for (const auto& ft : forms) {
    std::string text = "f0 = " + ft.f0;
    for (const auto& [c, e] : ft.f1) text += ", f1[" + c + "] = " + e;
    for (const auto& [x, e] : ft.f2) text += ", f2[" + x + "] = " + e;
    jobs.push_back({"forms: " + text, [=, &sc] {
                      FormTriple t{parse_expr(ft.f0), {}, {}};
                      for (const auto& [c, e] : ft.f1) t.f1[c] = parse_expr(e);
                      for (const auto& [x, e] : ft.f2) t.f2[x] = parse_expr(e);
                      const auto flags = complex_flags();
                      const FormDegree1 g = boundary_surface(sc, t, flags, P);
                      std::vector<Outcome> os;
                      for (const FormAdele* a : {&g.g1, &g.g2, &g.g3})
                        os.push_back(expect_zero(global_pushforward_forms(sc, *a, s0, P).coeff));
                      // d o d and f_* on a perturbed degree-1 vector
                      for (const auto& [f, w] : boundary_surface(g).support) os.push_back({to_string(w), w.g.is_zero()});
                      const FormAdele h = global_form_adele(sc, parse_expr("1/(u*t^2)"), {flags[0], flags[2]}, P);
                      const FormDegree1 gh{g.g1, add(g.g2, h), g.g3};
                      os.push_back(expect_zero(global_pushforward_forms(sc, boundary_surface(gh), s0, P).coeff -
                                               global_pushforward_forms(sc, h, s0, P).coeff));
                      const LSeries r3 = global_pushforward_forms(sc, scale(g.g3, -1), s0, P).coeff;
                      os.push_back({"regular " + to_string(r3), r3.order() >= 0});
                      return all_of(os);
                    }});
  }
  struct KT {
    std::vector<std::pair<std::string, std::string>> f0;
    std::map<std::string, std::pair<std::string, std::string>> f1, f2;
  };
  const std::vector<KT> k2s{
      {{{"u", "t"}}, {{"U0", {"1+u", "t"}}}, {{"x0", {"1+u", "1+t"}}}},
      {{{"u-t", "t*(1+u)"}}, {{"F0", {"1+t*u", "1-u"}}}, {{"x1", {"u", "1+t"}}}},
      {{{"u", "1-u"}, {"t", "1-u"}}, {{"D1", {"2", "1+t"}}}, {{"xinf", {"1+t", "1+t"}}}},
  };
  auto elem = [](const std::vector<std::pair<std::string, std::string>>& ps) {
    K2Elem<ExprPtr> k;
    for (const auto& [a, b] : ps) k.add(parse_expr(a), parse_expr(b));
    return k;
  };
  for (const auto& kt : k2s) {
    std::string text = "f0 =";
    for (const auto& [a, b] : kt.f0) text += " (" + a + ", " + b + ")";
    for (const auto& [c, p] : kt.f1) text += ", f1[" + c + "] = (" + p.first + ", " + p.second + ")";
    for (const auto& [x, p] : kt.f2) text += ", f2[" + x + "] = (" + p.first + ", " + p.second + ")";
    jobs.push_back({"K2: " + text, [=, &sc] {
                      K2Triple t{elem(kt.f0), {}, {}};
                      for (const auto& [c, p] : kt.f1) t.f1[c] = elem({p});
                      for (const auto& [x, p] : kt.f2) t.f2[x] = elem({p});
                      const auto flags = complex_flags();
                      const K2Degree1 g = boundary_surface(sc, t, flags, P);
                      std::vector<Outcome> os;
                      for (const K2Adele* a : {&g.g1, &g.g2, &g.g3})
                        os.push_back(expect_one(global_pushforward_k2(sc, *a, s0, P)));
                      os.push_back(expect_one(global_pushforward_k2(sc, boundary_surface(g), s0, P)));
                      const LSeries r3 = global_pushforward_k2(sc, g.g3, s0, P);
                      os.push_back({"unit " + to_string(r3), !r3.is_zero() && r3.valuation() == 0});
                      return all_of(os);
                    }});
  }
  jobs.push_back({"point-diagonal form 1/(u*t*(u-t)) at x0", [=, &sc] {
                    const FormAdele a = point_form_adele(sc, {{"x0", parse_expr("1/(u*t*(u-t))")}}, complex_flags(), P);
                    return expect_zero(global_pushforward_forms(sc, a, s0, P).coeff);
                  }});
  jobs.push_back({"point-diagonal symbol (u-t, t*(1+u)) at x0", [=, &sc] {
                    const K2Adele a = point_k2_adele(sc, {{"x0", elem({{"u-t", "t*(1+u)"}})}}, complex_flags(), P);
                    return expect_one(global_pushforward_k2(sc, a, s0, P));
                  }});
  return jobs;
}

// ---- residues ----

std::vector<Job> residues(const VerifyOptions& opt) {
  std::vector<Job> jobs;
  for (int i = 0; i < 200; ++i) {
    Rng rng = case_rng(opt.seed, 14, i);
    L2Series g("u", "t");
    for (int a = -3; a <= 2; ++a)
      for (int b = -3; b <= 2; ++b)
        if (rng() % 3 == 0) g += mono("u", "t", pick(rng), a, b);
    jobs.push_back({"(" + to_string(g) + ") du^dt", [=] {
                      const Form2 w{g};
                      const FieldElem r = res_total(w);
                      return all_of({expect_equal(residue(res_outer(w)), r), expect_equal(residue(res_inner(w)), r)});
                    }});
  }
  for (int i = 0; i < 50; ++i) {
    Rng rng = case_rng(opt.seed, 15, i);
    const int kind = i % 3;
    const FlagContext ctx = kind == 0   ? FlagContext::fibre("u", "t", "t")
                            : kind == 1 ? FlagContext::transverse("s", "pi", "t")
                                        : FlagContext::transverse("s", "pi", "t", 2);
    L2Series g(ctx.inner, ctx.outer);
    for (int a = -3; a <= 2; ++a)
      for (int b = -2; b <= 1; ++b)
        if (rng() % 3 == 0) g += mono(ctx.inner, ctx.outer, pick(rng), a, b);
    jobs.push_back({"di_form at " + std::string(kind == 0 ? "a fibre flag" : kind == 1 ? "a transverse flag"
                                                                                       : "a ramified transverse flag") +
                        ": (" + to_string(g) + ") d" + ctx.inner + "^d" + ctx.outer,
                    [=] { return expect_equal(residue(di_form(ctx, Form2{g})), res_total(Form2{g})); }});
  }
  return jobs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "fibre-forms", "point-forms", "fibre-symbols", "point-symbols",      "thm1-d",      "thm1-dd",  "steinberg",
      "lemma-l4",    "lemma-ll",    "gysin",         "param-independence", "tate-compat", "morphism", "residues"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  const Scenario sc = opt.scenario ? *opt.scenario : Scenario::builtin("P1xA1");
  std::vector<Job> jobs;
  if (name == "fibre-forms") jobs = fibre_forms(sc, opt);
  else if (name == "point-forms") jobs = point_forms(sc, opt);
  else if (name == "fibre-symbols") jobs = fibre_symbols(sc, opt);
  else if (name == "point-symbols") jobs = point_symbols(sc, opt);
  else if (name == "thm1-d") jobs = thm1(opt, false);
  else if (name == "thm1-dd") jobs = thm1(opt, true);
  else if (name == "steinberg") jobs = steinberg(opt);
  else if (name == "lemma-l4") jobs = lemma_l4(opt);
  else if (name == "lemma-ll") jobs = lemma_ll(opt);
  else if (name == "gysin") jobs = gysin(sc, opt);
  else if (name == "param-independence") jobs = param_independence(opt);
  else if (name == "tate-compat") jobs = tate_compat(sc, opt);
  else if (name == "morphism") jobs = morphism(sc, opt);
  else if (name == "residues") jobs = residues(opt);
  else throw InvalidArgument("unknown suite " + name);

  SuiteReport r{name, run_jobs(jobs, opt.threads), true};
  for (const auto& c : r.cases) r.pass = r.pass && c.pass;
  return r;
}

namespace {

nlohmann::json json_of(const SuiteReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) cases.push_back({{"inputs", c.inputs}, {"residual", c.residual}, {"pass", c.pass}});
  return {{"suite", r.suite}, {"cases", cases}, {"pass", r.pass}};
}

}  // namespace

std::string to_json(const SuiteReport& r) { return json_of(r).dump(2); }

std::string to_json(const std::vector<SuiteReport>& rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rs) a.push_back(json_of(r));
  return a.dump(2);
}

}  // namespace lf2
