#include "lf2/expr.hpp"

#include <cctype>
#include <regex>

#include "lf2/errors.hpp"

namespace lf2 {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
  Expr e{k, {}, {}, 0, std::move(a), std::move(b)};
  return node(std::move(e));
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, static_cast<int>(pos_) + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+'))
        e = binary(Expr::Kind::Add, e, term());
      else if (accept('-'))
        e = binary(Expr::Kind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (accept('*'))
        e = binary(Expr::Kind::Mul, e, factor());
      else if (accept('/'))
        e = binary(Expr::Kind::Div, e, factor());
      else
        return e;
    }
  }

  ExprPtr factor() {
    ExprPtr e = base();
    if (accept('^')) {
      Expr p{Expr::Kind::Pow, {}, {}, integer(), e, nullptr};
      return node(std::move(p));
    }
    return e;
  }

  int integer() {
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    return static_cast<int>(neg ? -v : v);
  }

  std::string ident() {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a variable");
    return s_.substr(start, pos_ - start);
  }

  ExprPtr big_o(const std::string& name) {
    if (name == "O") {
      expect('(');
      std::string v = ident();
      int n = 1;
      if (accept('^')) n = integer();
      expect(')');
      return node(Expr{Expr::Kind::BigO, {}, v, n, nullptr, nullptr});
    }
    // O_u(n)
    std::string v = name.substr(2);
    expect('(');
    int n = integer();
    expect(')');
    return node(Expr{Expr::Kind::BigO, {}, v, n, nullptr, nullptr});
  }

  ExprPtr base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (c == '-') {
      ++pos_;
      // -u^2 is -(u^2)
      return node(Expr{Expr::Kind::Neg, {}, {}, 0, factor(), nullptr});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return node(Expr{Expr::Kind::Num, Rational(s_.substr(start, pos_ - start)), {}, 0, nullptr, nullptr});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      if (name == "O" || (name.size() > 2 && name.rfind("O_", 0) == 0)) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') return big_o(name);
      }
      return node(Expr{Expr::Kind::Var, {}, name, 0, nullptr, nullptr});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

template <class V, class Ops>
V eval(const ExprPtr& e, const Ops& ops) {
  switch (e->kind) {
    case Expr::Kind::Num:
      return ops.constant(FieldElem(e->num));
    case Expr::Kind::Var:
      return ops.variable(e->var);
    case Expr::Kind::Add:
      return eval<V>(e->a, ops) + eval<V>(e->b, ops);
    case Expr::Kind::Sub:
      return eval<V>(e->a, ops) - eval<V>(e->b, ops);
    case Expr::Kind::Mul:
      return ops.truncate(eval<V>(e->a, ops) * eval<V>(e->b, ops));
    case Expr::Kind::Div:
      return ops.div(eval<V>(e->a, ops), eval<V>(e->b, ops));
    case Expr::Kind::Neg:
      return -eval<V>(e->a, ops);
    case Expr::Kind::Pow:
      return ops.pow(eval<V>(e->a, ops), e->exp);
    case Expr::Kind::BigO:
      return ops.big_o(e->var, e->exp);
  }
  throw InvalidArgument("bad expression node");
}

struct Ops1 {
  const std::string& var;
  const Bindings1& env;
  int cap;
  ExtPtr ext;

  LSeries constant(const FieldElem& c) const { return LSeries::constant(var, c); }
  LSeries variable(const std::string& name) const {
    if (name == var) return LSeries::monomial(var, FieldElem(1), 1);
    if (auto it = env.find(name); it != env.end()) return it->second;
    if (ext && name == ext->generator()) return LSeries::constant(var, FieldElem::generator(ext));
    throw InvalidArgument("unknown variable '" + name + "'");
  }
  LSeries truncate(const LSeries& a) const { return a.truncated(cap); }
  LSeries div(const LSeries& a, const LSeries& b) const { return lf2::div(a, b, cap); }
  LSeries pow(const LSeries& a, int n) const { return lf2::pow(a, n, cap); }
  LSeries big_o(const std::string& v, int n) const {
    if (v != var) throw VariableMismatch("O(" + v + ") in a series in " + var);
    return LSeries(var, n);
  }
};

struct Ops2 {
  const std::string& inner;
  const std::string& outer;
  const Bindings2& env;
  Prec2 cap;
  ExtPtr ext;

  L2Series constant(const FieldElem& c) const { return L2Series::constant(inner, outer, c); }
  L2Series variable(const std::string& name) const {
    if (auto it = env.find(name); it != env.end()) return it->second;
    if (name == inner) return L2Series::monomial(inner, outer, FieldElem(1), 1, 0);
    if (name == outer) return L2Series::monomial(inner, outer, FieldElem(1), 0, 1);
    if (ext && name == ext->generator()) return constant(FieldElem::generator(ext));
    throw InvalidArgument("unknown variable '" + name + "'");
  }
  L2Series truncate(const L2Series& a) const { return a.truncated(cap); }
  L2Series div(const L2Series& a, const L2Series& b) const { return lf2::div(a, b, cap); }
  L2Series pow(const L2Series& a, int n) const { return lf2::pow(a, n, cap); }
  L2Series big_o(const std::string& v, int n) const {
    if (v == outer) return L2Series(inner, outer, n);
    if (v == inner) return L2Series::inner_big_o(inner, outer, n);
    throw VariableMismatch("O(" + v + ") in a series in " + inner + ", " + outer);
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string to_debug_string(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Num:
      return to_string(e->num);
    case Expr::Kind::Var:
      return e->var;
    case Expr::Kind::Add:
      return "Add(" + to_debug_string(e->a) + ", " + to_debug_string(e->b) + ")";
    case Expr::Kind::Sub:
      return "Sub(" + to_debug_string(e->a) + ", " + to_debug_string(e->b) + ")";
    case Expr::Kind::Mul:
      return "Mul(" + to_debug_string(e->a) + ", " + to_debug_string(e->b) + ")";
    case Expr::Kind::Div:
      return "Div(" + to_debug_string(e->a) + ", " + to_debug_string(e->b) + ")";
    case Expr::Kind::Neg:
      return "Neg(" + to_debug_string(e->a) + ")";
    case Expr::Kind::Pow:
      return "Pow(" + to_debug_string(e->a) + ", " + std::to_string(e->exp) + ")";
    case Expr::Kind::BigO:
      return "O(" + e->var + "^" + std::to_string(e->exp) + ")";
  }
  return "?";
}

FormExpr parse_form(const std::string& text) {
  static const std::regex two(R"(^(.*?)\s*\*?\s*d([A-Za-z]\w*)\s*\^\s*d([A-Za-z]\w*)\s*$)");
  static const std::regex one(R"(^(.*?)\s*\*?\s*d([A-Za-z]\w*)\s*$)");
  std::smatch m;
  FormExpr f;
  std::string body = text;
  if (std::regex_match(text, m, two)) {
    body = m[1];
    f.degree = 2;
    f.v1 = m[2];
    f.v2 = m[3];
  } else if (std::regex_match(text, m, one) && m[1].length() > 0) {
    body = m[1];
    f.degree = 1;
    f.v1 = m[2];
  }
  if (body.find_first_not_of(" \t") == std::string::npos) {
    if (f.degree == 0) throw ParseError("empty expression", 1);
    body = "1";
  }
  f.coeff = parse_expr(body);
  return f;
}

LSeries evaluate(const ExprPtr& e, const std::string& var, const Bindings1& env, int cap) {
  return eval<LSeries>(e, Ops1{var, env, cap, nullptr}).truncated(cap);
}

L2Series evaluate(const ExprPtr& e, const std::string& inner, const std::string& outer, const Bindings2& env,
                  Prec2 cap) {
  return eval<L2Series>(e, Ops2{inner, outer, env, cap, nullptr}).truncated(cap);
}

LSeries parse_lseries(const std::string& text, const std::string& var, int cap, ExtPtr ext) {
  const Bindings1 env;
  return eval<LSeries>(parse_expr(text), Ops1{var, env, cap, std::move(ext)}).truncated(cap);
}

L2Series parse_l2series(const std::string& text, const std::string& inner, const std::string& outer, Prec2 cap,
                        ExtPtr ext) {
  const Bindings2 env;
  return eval<L2Series>(parse_expr(text), Ops2{inner, outer, env, cap, std::move(ext)}).truncated(cap);
}

}  // namespace lf2
