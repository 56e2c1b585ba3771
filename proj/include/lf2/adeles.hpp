#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lf2/direct_image.hpp"
#include "lf2/expr.hpp"
#include "lf2/symbols.hpp"

namespace lf2 {

// ---- scenario: a fibred surface P1 x A1 -> A1 (or P1 x P1 -> P1), chart coordinates (u, t) ----

struct Coord {
  bool infinite = false;
  Rational value;
  static Coord parse(const std::string& s);
  bool operator==(const Coord& o) const { return infinite == o.infinite && (infinite || value == o.value); }
};
std::string to_string(const Coord& c);

struct Point {
  std::string name;
  Coord u;
  Coord t;
  ExtPtr field;  // when set, u is the generator of this field (a closed point of degree [field : Q])
  int degree() const { return field ? field->degree() : 1; }
};

struct Curve {
  enum class Kind { Fibre, Section, Graph };
  std::string name;
  Kind kind;
  Coord t0;       // Fibre: t = t0
  Coord u0;       // Section u = const (possibly infinite) when g is null
  ExprPtr g;      // Section: u = g(t); Graph: t = g(u)
  std::string text;
};

class Scenario {
 public:
  enum class Surface { P1xA1, P1xP1 };

  Surface surface = Surface::P1xA1;
  std::vector<Point> points;
  std::vector<Curve> curves;

  static Scenario from_json(const std::string& text);
  // "P1xA1" or "P1xP1": points (0,0)..(5,0), (inf,0), (a,0) with a^2 = 2, (0,1), (1,1);
  // curves F0 (t = 0), F1 (t = 1), U0 (u = 0), U1 (u = 1), Uinf (u = inf), D (u = t),
  // D1 (u = 1 - t), Q (t = u^2); P1xP1 adds the fibre Finf (t = inf) with (0,inf), (inf,inf).
  static Scenario builtin(const std::string& name);

  const Point& point(const std::string& name) const;
  const Curve& curve(const std::string& name) const;
  bool incident(const Point& x, const Curve& c) const;
};

struct Flag {
  std::string point;
  std::string curve;
  std::string id() const { return point + "@" + curve; }
  bool operator<(const Flag& o) const { return id() < o.id(); }
  bool operator==(const Flag& o) const { return point == o.point && curve == o.curve; }
};
Flag parse_flag(const std::string& text);  // "x@C"

// K_{x,C} with the images of the chart coordinates and du^dt = jac d(inner)^d(outer).
struct LocalFlag {
  FlagContext ctx;
  L2Series U, T;
  L2Series jac;
};
LocalFlag local_flag(const Scenario& sc, const Flag& f, Prec2 cap);

L2Series expand_at(const Scenario& sc, const ExprPtr& f, const Flag& flag, Prec2 cap);
// g du^dt
Form2 expand_form_at(const Scenario& sc, const ExprPtr& g, const Flag& flag, Prec2 cap);
K2Elem<L2Series> expand_k2_at(const Scenario& sc, const K2Elem<ExprPtr>& f, const Flag& flag, Prec2 cap);

// ---- finite-support adeles ----

enum class DefaultClass { Zero, Regular };

template <class V>
struct AdeleVec {
  std::map<Flag, V> support;
  DefaultClass default_class = DefaultClass::Zero;

  const V* find(const Flag& f) const {
    auto it = support.find(f);
    return it == support.end() ? nullptr : &it->second;
  }
};
using FormAdele = AdeleVec<Form2>;
using K2Adele = AdeleVec<K2Elem<L2Series>>;

FormAdele add(const FormAdele& a, const FormAdele& b);
FormAdele scale(const FormAdele& a, long c);
K2Adele multiply(const K2Adele& a, const K2Adele& b);
K2Adele power(const K2Adele& a, long c);

// Diagonal images of global data, restricted to the declared flags.
FormAdele global_form_adele(const Scenario& sc, const ExprPtr& g, const std::vector<Flag>& flags, Prec2 cap);
FormAdele curve_form_adele(const Scenario& sc, const std::map<std::string, ExprPtr>& per_curve,
                           const std::vector<Flag>& flags, Prec2 cap);
FormAdele point_form_adele(const Scenario& sc, const std::map<std::string, ExprPtr>& per_point,
                           const std::vector<Flag>& flags, Prec2 cap);
K2Adele global_k2_adele(const Scenario& sc, const K2Elem<ExprPtr>& f, const std::vector<Flag>& flags, Prec2 cap);
K2Adele curve_k2_adele(const Scenario& sc, const std::map<std::string, K2Elem<ExprPtr>>& per_curve,
                       const std::vector<Flag>& flags, Prec2 cap);
K2Adele point_k2_adele(const Scenario& sc, const std::map<std::string, K2Elem<ExprPtr>>& per_point,
                       const std::vector<Flag>& flags, Prec2 cap);

// ---- adelic conditions ----

struct FormFlagInfo {
  Flag flag;
  int nu = 0;  // outer valuation of g for w = g d(inner)^d(outer)
  bool regular_coefficients = true;  // every outer coefficient is a power series in the inner variable
};
struct AdelicFormReport {
  bool pass = true;
  std::map<std::string, int> divisor;  // curve -> bound D_C with nu >= -D_C
  std::vector<FormFlagInfo> entries;
  std::vector<std::string> violations;
};
struct AdelicFormOptions {
  std::map<std::string, int> bound;              // required nu >= -bound[C]
  std::set<Flag> regular_coefficients;           // flags where each w_i must be regular in the inner variable
  std::map<Flag, int> vanishing_below;           // flags where w_i = 0 for i < n
};
AdelicFormReport check_adelic_form(const FormAdele& a, const AdelicFormOptions& opt = {});

enum class K2Class { Integral, Congruence, HatInfinity, Other };
std::string to_string(K2Class c);
struct K2FlagInfo {
  Flag flag;
  std::vector<K2Class> pairs;
};
struct AdelicK2Report {
  bool pass = true;
  int level = 1;
  std::vector<K2FlagInfo> entries;
  std::set<std::string> non_integral_curves;
  std::vector<std::string> violations;
};
// Classifies each pair as K2(O) (both units), K2(O, m^l) (1 + m^l against a unit),
// K2(O_hat(inf C)) (both t_C^m times a unit of k[[inner, outer]]) or other.
K2Class classify_pair(const L2Series& a, const L2Series& b, int level);
AdelicK2Report check_adelic_k2(const K2Adele& a, int level);

// Flag-wise Tate map (f, g) -> dlog f ^ dlog g.
FormAdele tate_map(const K2Adele& a, Prec2 cap);

// ---- complexes ----

struct FormTriple {
  ExprPtr f0;                               // global
  std::map<std::string, ExprPtr> f1;        // per curve, regular along it
  std::map<std::string, ExprPtr> f2;        // per point, regular at it
};
struct FormDegree1 {
  FormAdele g1, g2, g3;
};
FormDegree1 boundary_surface(const Scenario& sc, const FormTriple& f, const std::vector<Flag>& flags, Prec2 cap);
FormAdele boundary_surface(const FormDegree1& g);

struct K2Triple {
  K2Elem<ExprPtr> f0;
  std::map<std::string, K2Elem<ExprPtr>> f1;
  std::map<std::string, K2Elem<ExprPtr>> f2;
};
struct K2Degree1 {
  K2Adele g1, g2, g3;
};
K2Degree1 boundary_surface(const Scenario& sc, const K2Triple& f, const std::vector<Flag>& flags, Prec2 cap);
K2Adele boundary_surface(const K2Degree1& g);

// ---- direct images over a point s of the base ----

bool over(const Scenario& sc, const Flag& f, const Coord& s);
Form1 global_pushforward_forms(const Scenario& sc, const FormAdele& a, const Coord& s, Prec2 cap);
LSeries global_pushforward_k2(const Scenario& sc, const K2Adele& a, const Coord& s, Prec2 cap);

// 0-cycle sum_x (sum_C nu_x (a, b)_C) [x], and the divisor s -> nu_s(f_* a).
std::map<std::string, long> cycle_of_adele(const Scenario& sc, const K2Adele& a, Prec2 cap);
std::map<std::string, long> gysin_cycle(const Scenario& sc, const K2Adele& a, Prec2 cap);

// ---- reciprocity ----

struct Contribution {
  Flag flag;
  std::string value;
};
struct ReciprocityResult {
  bool pass = false;
  std::string total;  // sum of forms or product of symbols
  std::vector<Contribution> parts;
  Prec2 cap;  // caps actually used
};
// Sum over the declared flags (all on one fibre, or all through one point) of the direct images.
// The caps are widened (at most three times) while the total is undecided at t^0.
ReciprocityResult reciprocity_forms(const Scenario& sc, const ExprPtr& g, const std::vector<Flag>& flags, Prec2 cap);
ReciprocityResult reciprocity_symbols(const Scenario& sc, const ExprPtr& phi, const ExprPtr& psi,
                                      const std::vector<Flag>& flags, Prec2 cap);

}  // namespace lf2
