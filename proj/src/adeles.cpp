#include "lf2/adeles.hpp"

#include <json.hpp>

#include "lf2/errors.hpp"

namespace lf2 {

namespace {

void collect_vars(const ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == Expr::Kind::Var) out.insert(e->var);
  collect_vars(e->a, out);
  collect_vars(e->b, out);
}

void require_only(const ExprPtr& e, const std::string& var, const std::string& what) {
  std::set<std::string> vars;
  collect_vars(e, vars);
  for (const auto& v : vars)
    if (v != var) throw InvalidArgument(what + " may only use " + var + ", found " + v);
}

// Value of a rational function of (u, t) at a rational point; nullopt at a pole.
std::optional<Rational> value_at(const ExprPtr& e, const Rational& u, const Rational& t) {
  const Bindings1 env{{"u", LSeries::constant("z", FieldElem(u))}, {"t", LSeries::constant("z", FieldElem(t))}};
  const LSeries v = evaluate(e, "z", env, 1);
  if (v.is_zero()) return Rational(0);
  if (v.valuation() < 0) return std::nullopt;
  return v.coeff(0).rational();
}

L2Series mono(const std::string& in, const std::string& out, const FieldElem& c, int i, int j) {
  return L2Series::monomial(in, out, c, i, j);
}

L2Series coordinate(const Coord& c, const L2Series& local, Prec2 cap) {
  if (c.infinite) return inverse(local, cap);
  return L2Series::constant(local.inner_var(), local.outer_var(), FieldElem(c.value)) + local;
}

Form2 sum_forms(const Form2& a, const Form2& b) { return Form2{a.g + b.g}; }

}  // namespace

Coord Coord::parse(const std::string& s) {
  if (s == "inf" || s == "infinity") return Coord{true, Rational(0)};
  return Coord{false, parse_rational(s)};
}

std::string to_string(const Coord& c) { return c.infinite ? "inf" : to_string(c.value); }

// ---- scenario ----

Scenario Scenario::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("scenario is not valid JSON: ") + e.what());
  }
  Scenario sc;
  const std::string surface = j.value("surface", "P1xA1");
  if (surface == "P1xA1")
    sc.surface = Surface::P1xA1;
  else if (surface == "P1xP1")
    sc.surface = Surface::P1xP1;
  else
    throw InvalidArgument("unknown surface " + surface);

  auto modulus_of = [](const nlohmann::json& m, const std::string& gen) {
    std::vector<Rational> coeffs;
    for (const auto& c : m) coeffs.push_back(parse_rational(c.is_string() ? c.get<std::string>() : c.dump()));
    return make_extension(coeffs, gen);
  };
  std::map<std::string, ExtPtr> fields;
  for (const auto& e : j.value("extensions", nlohmann::json::array()))
    fields[e.at("name").get<std::string>()] = modulus_of(e.at("modulus"), e.value("generator", "a"));

  for (const auto& p : j.value("points", nlohmann::json::array())) {
    Point x;
    x.name = p.at("name").get<std::string>();
    x.t = Coord::parse(p.value("t", "0"));
    if (p.contains("field")) {
      auto it = fields.find(p.at("field").get<std::string>());
      if (it == fields.end()) throw InvalidArgument("point " + x.name + " names an unknown field");
      x.field = it->second;
    } else if (p.contains("modulus")) {
      x.field = modulus_of(p.at("modulus"), p.value("generator", "a"));
    } else {
      x.u = Coord::parse(p.at("u").get<std::string>());
    }
    sc.points.push_back(x);
  }
  for (const auto& c : j.value("curves", nlohmann::json::array())) {
    Curve k;
    k.name = c.at("name").get<std::string>();
    const std::string type = c.at("type").get<std::string>();
    if (type == "fibre" || type == "fiber") {
      k.kind = Curve::Kind::Fibre;
      k.t0 = Coord::parse(c.at("t").get<std::string>());
      k.text = "t = " + to_string(k.t0);
    } else if (type == "section") {
      k.kind = Curve::Kind::Section;
      k.text = "u = " + c.at("u").get<std::string>();
      const std::string u = c.at("u").get<std::string>();
      if (u == "inf" || u == "infinity")
        k.u0 = Coord{true, Rational(0)};
      else {
        k.g = parse_expr(u);
        require_only(k.g, "t", "a section u = g(t)");
      }
    } else if (type == "graph") {
      k.kind = Curve::Kind::Graph;
      k.g = parse_expr(c.at("t").get<std::string>());
      require_only(k.g, "u", "a graph t = q(u)");
      k.text = "t = " + c.at("t").get<std::string>();
    } else {
      throw InvalidArgument("unknown curve type " + type);
    }
    sc.curves.push_back(k);
  }
  return sc;
}

Scenario Scenario::builtin(const std::string& name) {
  std::string json = R"({"surface": ")" + name + R"(",
    "extensions": [{"name": "k2", "modulus": ["-2", "0", "1"], "generator": "a"}],
    "points": [
      {"name": "x0", "u": "0", "t": "0"}, {"name": "x1", "u": "1", "t": "0"}, {"name": "x2", "u": "2", "t": "0"},
      {"name": "x3", "u": "3", "t": "0"}, {"name": "x4", "u": "4", "t": "0"}, {"name": "x5", "u": "5", "t": "0"},
      {"name": "xinf", "u": "inf", "t": "0"}, {"name": "xa", "field": "k2", "t": "0"},
      {"name": "y0", "u": "0", "t": "1"}, {"name": "y1", "u": "1", "t": "1"})";
  if (name == "P1xP1") json += R"(, {"name": "z0", "u": "0", "t": "inf"}, {"name": "zinf", "u": "inf", "t": "inf"})";
  json += R"(],
    "curves": [
      {"name": "F0", "type": "fibre", "t": "0"}, {"name": "F1", "type": "fibre", "t": "1"},
      {"name": "U0", "type": "section", "u": "0"}, {"name": "U1", "type": "section", "u": "1"},
      {"name": "Uinf", "type": "section", "u": "inf"}, {"name": "D", "type": "section", "u": "t"},
      {"name": "D1", "type": "section", "u": "1 - t"}, {"name": "Q", "type": "graph", "t": "u^2"})";
  if (name == "P1xP1") json += R"(, {"name": "Finf", "type": "fibre", "t": "inf"})";
  json += "]}";
  if (name != "P1xA1" && name != "P1xP1") throw InvalidArgument("unknown built-in scenario " + name);
  return from_json(json);
}

const Point& Scenario::point(const std::string& name) const {
  for (const auto& p : points)
    if (p.name == name) return p;
  throw InvalidArgument("unknown point " + name);
}

const Curve& Scenario::curve(const std::string& name) const {
  for (const auto& c : curves)
    if (c.name == name) return c;
  throw InvalidArgument("unknown curve " + name);
}

bool Scenario::incident(const Point& x, const Curve& c) const {
  if (x.t.infinite && surface == Surface::P1xA1) return false;
  switch (c.kind) {
    case Curve::Kind::Fibre:
      return x.t == c.t0;
    case Curve::Kind::Section:
      if (x.field || x.t.infinite) return false;
      if (!c.g) return x.u == c.u0;
      if (x.u.infinite) return false;
      {
        const auto v = value_at(c.g, Rational(0), x.t.value);
        return v && *v == x.u.value;
      }
    case Curve::Kind::Graph:
      if (x.field || x.u.infinite || x.t.infinite) return false;
      {
        const auto v = value_at(c.g, x.u.value, Rational(0));
        return v && *v == x.t.value;
      }
  }
  return false;
}

Flag parse_flag(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos || at == 0 || at + 1 == text.size())
    throw InvalidArgument("flag must be written point@curve, got '" + text + "'");
  return Flag{text.substr(0, at), text.substr(at + 1)};
}

// ---- local expansions ----

LocalFlag local_flag(const Scenario& sc, const Flag& f, Prec2 cap) {
  const Point& x = sc.point(f.point);
  const Curve& c = sc.curve(f.curve);
  if (!sc.incident(x, c)) throw InvalidArgument("point " + x.name + " does not lie on " + c.name);
  switch (c.kind) {
    case Curve::Kind::Fibre: {
      const std::string in = "u", out = "t";
      const L2Series w = mono(in, out, FieldElem(1), 1, 0), s = mono(in, out, FieldElem(1), 0, 1);
      L2Series U = x.field ? L2Series::constant(in, out, FieldElem::generator(x.field)) + w : coordinate(x.u, w, cap);
      L2Series T = coordinate(x.t, s, cap);
      L2Series jac = d_inner(U) * d_outer(T) - d_outer(U) * d_inner(T);
      return LocalFlag{FlagContext::fibre(in, out, "t", x.field), U, T, jac};
    }
    case Curve::Kind::Section: {
      const std::string in = "t", out = "u";
      const L2Series s = mono(in, out, FieldElem(1), 1, 0), pi = mono(in, out, FieldElem(1), 0, 1);
      const L2Series T = coordinate(x.t, s, cap);
      const L2Series U = c.g ? pi + evaluate(c.g, in, out, Bindings2{{"t", T}}, cap) : coordinate(c.u0, pi, cap);
      L2Series jac = d_inner(U) * d_outer(T) - d_outer(U) * d_inner(T);
      return LocalFlag{FlagContext::transverse(in, out, "t"), U, T, jac};
    }
    case Curve::Kind::Graph: {
      const std::string in = "u", out = "t";
      const L2Series s = mono(in, out, FieldElem(1), 1, 0), pi = mono(in, out, FieldElem(1), 0, 1);
      const L2Series U = coordinate(x.u, s, cap);
      const L2Series q = evaluate(c.g, in, out, Bindings2{{"u", U}}, cap);
      // tau - t0 restricted to C must be s^e
      const L2Series rest = q - L2Series::constant(in, out, FieldElem(x.t.value));
      const LSeries r = rest.coeff(0);
      if (rest.end() > 1 || r.is_zero()) throw InvalidArgument("graph curve " + c.name + " is not of the form t = q(u)");
      const int e = r.valuation();
      if (!(r - LSeries::monomial(in, FieldElem(1), e)).is_zero())
        throw InvalidArgument("curve " + c.name + " at " + x.name + ": t - t0 restricted to C must be s^e");
      const L2Series T = pi + q;
      const L2Series tau = pi + rest;
      L2Series jac = d_inner(U) * d_outer(T) - d_outer(U) * d_inner(T);
      return LocalFlag{FlagContext::transverse(in, out, "t", e, nullptr, tau), U, T, jac};
    }
  }
  throw InvalidArgument("bad curve");
}

namespace {

// u, t and, at a closed point of higher degree, the generator of its residue field
Bindings2 chart_env(const Scenario& sc, const Flag& flag, const LocalFlag& lf) {
  Bindings2 env{{"u", lf.U}, {"t", lf.T}};
  if (const ExtPtr& k = sc.point(flag.point).field)
    env.emplace(k->generator(), L2Series::constant(lf.ctx.inner, lf.ctx.outer, FieldElem::generator(k)));
  return env;
}

}  // namespace

L2Series expand_at(const Scenario& sc, const ExprPtr& f, const Flag& flag, Prec2 cap) {
  const LocalFlag lf = local_flag(sc, flag, cap);
  return evaluate(f, lf.ctx.inner, lf.ctx.outer, chart_env(sc, flag, lf), cap);
}

Form2 expand_form_at(const Scenario& sc, const ExprPtr& g, const Flag& flag, Prec2 cap) {
  const LocalFlag lf = local_flag(sc, flag, cap);
  const L2Series v = evaluate(g, lf.ctx.inner, lf.ctx.outer, chart_env(sc, flag, lf), cap);
  return Form2{(v * lf.jac).truncated(cap)};
}

K2Elem<L2Series> expand_k2_at(const Scenario& sc, const K2Elem<ExprPtr>& f, const Flag& flag, Prec2 cap) {
  K2Elem<L2Series> r;
  for (const auto& p : f.pairs) r.add(expand_at(sc, p.a, flag, cap), expand_at(sc, p.b, flag, cap), p.mult);
  return r;
}

// ---- adele arithmetic ----

FormAdele add(const FormAdele& a, const FormAdele& b) {
  FormAdele r = a;
  for (const auto& [f, w] : b.support) {
    auto it = r.support.find(f);
    if (it == r.support.end())
      r.support.emplace(f, w);
    else
      it->second = sum_forms(it->second, w);
  }
  return r;
}

FormAdele scale(const FormAdele& a, long c) {
  FormAdele r = a;
  for (auto& [f, w] : r.support) w = Form2{FieldElem(Rational(c)) * w.g};
  return r;
}

K2Adele multiply(const K2Adele& a, const K2Adele& b) {
  K2Adele r = a;
  for (const auto& [f, v] : b.support) r.support[f].append(v);
  return r;
}

K2Adele power(const K2Adele& a, long c) {
  K2Adele r;
  r.default_class = a.default_class;
  for (const auto& [f, v] : a.support) r.support[f].append(v, c);
  return r;
}

FormAdele global_form_adele(const Scenario& sc, const ExprPtr& g, const std::vector<Flag>& flags, Prec2 cap) {
  FormAdele r;
  for (const auto& f : flags) r.support[f] = expand_form_at(sc, g, f, cap);
  return r;
}

FormAdele curve_form_adele(const Scenario& sc, const std::map<std::string, ExprPtr>& per_curve,
                           const std::vector<Flag>& flags, Prec2 cap) {
  FormAdele r;
  for (const auto& f : flags)
    if (auto it = per_curve.find(f.curve); it != per_curve.end()) r.support[f] = expand_form_at(sc, it->second, f, cap);
  return r;
}

FormAdele point_form_adele(const Scenario& sc, const std::map<std::string, ExprPtr>& per_point,
                           const std::vector<Flag>& flags, Prec2 cap) {
  FormAdele r;
  for (const auto& f : flags)
    if (auto it = per_point.find(f.point); it != per_point.end()) r.support[f] = expand_form_at(sc, it->second, f, cap);
  return r;
}

K2Adele global_k2_adele(const Scenario& sc, const K2Elem<ExprPtr>& g, const std::vector<Flag>& flags, Prec2 cap) {
  K2Adele r;
  for (const auto& f : flags) r.support[f] = expand_k2_at(sc, g, f, cap);
  return r;
}

K2Adele curve_k2_adele(const Scenario& sc, const std::map<std::string, K2Elem<ExprPtr>>& per_curve,
                       const std::vector<Flag>& flags, Prec2 cap) {
  K2Adele r;
  for (const auto& f : flags)
    if (auto it = per_curve.find(f.curve); it != per_curve.end()) r.support[f] = expand_k2_at(sc, it->second, f, cap);
  return r;
}

K2Adele point_k2_adele(const Scenario& sc, const std::map<std::string, K2Elem<ExprPtr>>& per_point,
                       const std::vector<Flag>& flags, Prec2 cap) {
  K2Adele r;
  for (const auto& f : flags)
    if (auto it = per_point.find(f.point); it != per_point.end()) r.support[f] = expand_k2_at(sc, it->second, f, cap);
  return r;
}

// ---- adelic conditions ----

AdelicFormReport check_adelic_form(const FormAdele& a, const AdelicFormOptions& opt) {
  AdelicFormReport rep;
  for (const auto& [f, w] : a.support) {
    if (w.g.is_zero()) continue;
    FormFlagInfo info{f};
    try {
      info.nu = w.g.valuation();
    } catch (const InsufficientPrecision& e) {
      rep.violations.push_back(f.id() + ": " + e.what());
      continue;
    }
    for (const auto& c : w.g.coeffs()) info.regular_coefficients = info.regular_coefficients && (c.is_zero() || c.first() >= 0);
    int& d = rep.divisor[f.curve];
    d = std::max(d, -info.nu);
    if (auto it = opt.bound.find(f.curve); it != opt.bound.end() && info.nu < -it->second)
      rep.violations.push_back(f.id() + ": valuation " + std::to_string(info.nu) + " below -" +
                               std::to_string(it->second));
    if (opt.regular_coefficients.count(f) && !info.regular_coefficients)
      rep.violations.push_back(f.id() + ": a coefficient form has a pole in the inner variable");
    if (auto it = opt.vanishing_below.find(f); it != opt.vanishing_below.end() && info.nu < it->second)
      rep.violations.push_back(f.id() + ": coefficient of order " + std::to_string(info.nu) + " should vanish");
    rep.entries.push_back(info);
  }
  rep.pass = rep.violations.empty();
  return rep;
}

std::string to_string(K2Class c) {
  switch (c) {
    case K2Class::Integral:
      return "K2(O)";
    case K2Class::Congruence:
      return "K2(O,m^l)";
    case K2Class::HatInfinity:
      return "K2(Ohat(inf C))";
    case K2Class::Other:
      return "other";
  }
  return "?";
}

namespace {

bool is_unit(const L2Series& a) { return a.valuation() == 0; }

bool one_plus(const L2Series& a, int level) {
  const L2Series d = a - L2Series::constant(a.inner_var(), a.outer_var(), FieldElem(1));
  if (d.is_exact_zero()) return true;
  if (d.is_zero()) return d.prec() >= level;
  return d.valuation() >= level;
}

bool hat_unit(const L2Series& a) {
  const int m = a.valuation();
  if (a.coeff(m).valuation() != 0) return false;
  for (const auto& c : a.coeffs())
    if (!c.is_zero() && c.first() < 0) return false;
  return true;
}

}  // namespace

K2Class classify_pair(const L2Series& a, const L2Series& b, int level) {
  const bool ua = is_unit(a), ub = is_unit(b);
  if ((ua && ub) && (one_plus(a, level) || one_plus(b, level))) return K2Class::Congruence;
  if (ua && ub) return K2Class::Integral;
  if (hat_unit(a) && hat_unit(b)) return K2Class::HatInfinity;
  return K2Class::Other;
}

AdelicK2Report check_adelic_k2(const K2Adele& a, int level) {
  AdelicK2Report rep;
  rep.level = level;
  for (const auto& [f, v] : a.support) {
    K2FlagInfo info{f, {}};
    try {
      for (const auto& p : v.pairs) {
        if (p.a.is_exact_zero() || p.b.is_exact_zero()) throw InvalidArgument("zero entry in a symbol");
        info.pairs.push_back(classify_pair(p.a, p.b, level));
        if (info.pairs.back() != K2Class::Integral && info.pairs.back() != K2Class::Congruence)
          rep.non_integral_curves.insert(f.curve);
      }
    } catch (const Error& e) {
      rep.violations.push_back(f.id() + ": " + e.what());
    }
    rep.entries.push_back(info);
  }
  rep.pass = rep.violations.empty();
  return rep;
}

FormAdele tate_map(const K2Adele& a, Prec2 cap) {
  FormAdele r;
  for (const auto& [f, v] : a.support) {
    if (v.pairs.empty()) continue;
    const L2Series& first = v.pairs.front().a;
    L2Series acc(first.inner_var(), first.outer_var());
    for (const auto& p : v.pairs) acc += FieldElem(Rational(p.mult)) * dlog_wedge(p.a, p.b, cap).g;
    r.support[f] = Form2{acc};
  }
  return r;
}

// ---- complexes ----

FormDegree1 boundary_surface(const Scenario& sc, const FormTriple& t, const std::vector<Flag>& flags, Prec2 cap) {
  const FormAdele f0 = t.f0 ? global_form_adele(sc, t.f0, flags, cap) : FormAdele{};
  const FormAdele f1 = curve_form_adele(sc, t.f1, flags, cap);
  const FormAdele f2 = point_form_adele(sc, t.f2, flags, cap);
  FormDegree1 g{add(f2, scale(f0, -1)), add(f0, f1), scale(add(f1, f2), -1)};
  g.g3.default_class = DefaultClass::Regular;
  return g;
}

FormAdele boundary_surface(const FormDegree1& g) { return add(add(g.g1, g.g2), g.g3); }

K2Degree1 boundary_surface(const Scenario& sc, const K2Triple& t, const std::vector<Flag>& flags, Prec2 cap) {
  const K2Adele f0 = global_k2_adele(sc, t.f0, flags, cap);
  const K2Adele f1 = curve_k2_adele(sc, t.f1, flags, cap);
  const K2Adele f2 = point_k2_adele(sc, t.f2, flags, cap);
  K2Degree1 g{multiply(f2, power(f0, -1)), multiply(f0, f1), power(multiply(f1, f2), -1)};
  g.g3.default_class = DefaultClass::Regular;
  return g;
}

K2Adele boundary_surface(const K2Degree1& g) { return multiply(multiply(g.g1, g.g2), g.g3); }

// ---- direct images ----

bool over(const Scenario& sc, const Flag& f, const Coord& s) { return sc.point(f.point).t == s; }

Form1 global_pushforward_forms(const Scenario& sc, const FormAdele& a, const Coord& s, Prec2 cap) {
  LSeries acc("t");
  for (const auto& [f, w] : a.support) {
    if (!over(sc, f, s)) continue;
    acc += di_form(local_flag(sc, f, cap).ctx, w).coeff;
  }
  return Form1{acc};
}

LSeries global_pushforward_k2(const Scenario& sc, const K2Adele& a, const Coord& s, Prec2 cap) {
  LSeries acc = LSeries::constant("t", FieldElem(1));
  for (const auto& [f, v] : a.support) {
    if (!over(sc, f, s)) continue;
    const FlagContext ctx = local_flag(sc, f, cap).ctx;
    for (const auto& p : v.pairs)
      acc = (acc * pow(di_symbol(ctx, p.a, p.b, cap), static_cast<int>(p.mult), cap.outer)).truncated(cap.outer);
  }
  return acc;
}

std::map<std::string, long> cycle_of_adele(const Scenario&, const K2Adele& a, Prec2 cap) {
  std::map<std::string, long> r;
  for (const auto& [f, v] : a.support)
    for (const auto& p : v.pairs) r[f.point] += p.mult * tame_symbol(p.a, p.b, cap.inner).valuation();
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

std::map<std::string, long> gysin_cycle(const Scenario& sc, const K2Adele& a, Prec2 cap) {
  std::map<std::string, Coord> bases;
  for (const auto& [f, v] : a.support) {
    const Coord& s = sc.point(f.point).t;
    bases.emplace(to_string(s), s);
  }
  std::map<std::string, long> r;
  for (const auto& [name, s] : bases) {
    const long n = global_pushforward_k2(sc, a, s, cap).valuation();
    if (n != 0) r[name] = n;
  }
  return r;
}

// ---- reciprocity ----

namespace {

// Contributions with deep poles leave the total known only below t^0; widen the caps
// until the window reaches the constant term.
template <class F>
ReciprocityResult widen_until_decided(F once, Prec2 cap) {
  ReciprocityResult res;
  for (int round = 0; round < 4; ++round) {
    int window = 0;
    res = once(cap, window);
    res.cap = cap;
    if (res.pass || window >= 1) break;
    cap.inner += 1 - window + 2;
    cap.outer += 1 - window + 2;
  }
  return res;
}

}  // namespace

ReciprocityResult reciprocity_forms(const Scenario& sc, const ExprPtr& g, const std::vector<Flag>& flags, Prec2 cap) {
  return widen_until_decided(
      [&](Prec2 P, int& window) {
        ReciprocityResult res;
        LSeries acc("t");
        for (const auto& f : flags) {
          const Form1 c = di_form(local_flag(sc, f, P).ctx, expand_form_at(sc, g, f, P));
          res.parts.push_back({f, to_string(c)});
          acc += c.coeff;
        }
        res.total = to_string(Form1{acc});
        window = acc.is_zero() ? acc.prec() : kExact;
        res.pass = acc.is_zero() && acc.prec() >= 1;
        return res;
      },
      cap);
}

ReciprocityResult reciprocity_symbols(const Scenario& sc, const ExprPtr& phi, const ExprPtr& psi,
                                      const std::vector<Flag>& flags, Prec2 cap) {
  return widen_until_decided(
      [&](Prec2 P, int& window) {
        ReciprocityResult res;
        LSeries acc = LSeries::constant("t", FieldElem(1));
        for (const auto& f : flags) {
          const FlagContext ctx = local_flag(sc, f, P).ctx;
          const LSeries c = di_symbol(ctx, expand_at(sc, phi, f, P), expand_at(sc, psi, f, P), P);
          res.parts.push_back({f, to_string(c)});
          acc = (acc * c).truncated(P.outer);
        }
        res.total = to_string(acc);
        const LSeries d = acc - LSeries::constant("t", FieldElem(1));
        window = d.is_zero() ? d.prec() : kExact;
        res.pass = d.is_zero() && d.prec() >= 1;
        return res;
      },
      cap);
}

}  // namespace lf2
