#pragma once

#include <map>
#include <memory>
#include <string>

#include "lf2/local2d.hpp"

namespace lf2 {

// expr   := term (('+' | '-') term)*
// term   := factor (('*' | '/') factor)*
// factor := base ('^' int)?
// base   := integer | var | 'O' '(' var ('^' int)? ')' | 'O_' var '(' int ')' | '(' expr ')' | '-' factor
struct Expr {
  enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow, BigO };
  Kind kind;
  Rational num;      // Num
  std::string var;   // Var, BigO
  int exp = 0;       // Pow, BigO
  std::shared_ptr<const Expr> a, b;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(const std::string& text);
// Structural rendering, e.g. Div(1, Sub(u, 1)).
std::string to_debug_string(const ExprPtr& e);

// Coefficient of "du^dt" (two = true) or of "dt" (two = false); no suffix means a function.
struct FormExpr {
  ExprPtr coeff;
  int degree = 0;
  std::string v1, v2;
};
FormExpr parse_form(const std::string& text);

// Values for the variables that may appear; unknown names are an error.
using Bindings1 = std::map<std::string, LSeries>;
using Bindings2 = std::map<std::string, L2Series>;

LSeries evaluate(const ExprPtr& e, const std::string& var, const Bindings1& env, int cap);
L2Series evaluate(const ExprPtr& e, const std::string& inner, const std::string& outer, const Bindings2& env,
                  Prec2 cap);

// Series and forms straight from text in their own variables.
LSeries parse_lseries(const std::string& text, const std::string& var, int cap = 8, ExtPtr ext = nullptr);
L2Series parse_l2series(const std::string& text, const std::string& inner, const std::string& outer,
                        Prec2 cap = {}, ExtPtr ext = nullptr);

}  // namespace lf2
