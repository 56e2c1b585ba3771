#pragma once

#include <string>
#include <vector>

#include "lf2/local2d.hpp"

namespace lf2 {

// Power series in two variables (slots u, t) known modulo (u, t)^N.
// This truncation survives any change of regular parameters.
class Germ {
 public:
  explicit Germ(int N = 8);

  static Germ constant(const FieldElem& c, int N);
  static Germ u(int N);
  static Germ t(int N);
  // Entries of f must be power series; N is capped by the known window.
  static Germ from_l2(const L2Series& f, int N);

  int N() const { return n_; }
  FieldElem at(int i, int j) const;
  void set(int i, int j, const FieldElem& c);
  bool is_zero() const;
  int order() const;      // total degree of the lowest term (N for zero)
  int u_order() const;    // largest k with u^k dividing (N for zero)

  Germ truncated(int N) const;
  Germ divided_by_u(int k) const;
  Germ divided_by_t(int k) const;
  // t-degree < d part and the quotient of the rest by t^d
  std::pair<Germ, Germ> split_t(int d) const;

  Germ operator-() const;
  friend Germ operator+(const Germ& a, const Germ& b);
  friend Germ operator-(const Germ& a, const Germ& b);
  friend Germ operator*(const Germ& a, const Germ& b);
  friend Germ operator*(const FieldElem& c, const Germ& a);

  Germ inverse() const;  // NotAUnit for a non-unit
  // this(U, T) for U, T without constant term
  Germ compose(const Germ& U, const Germ& T) const;
  // t-slot coefficient of a one-slot series in s: F(G), F a power series.
  static Germ substitute(const LSeries& F, const Germ& G);

  L2Series to_l2(const std::string& inner = "u", const std::string& outer = "t") const;

 private:
  int n_;
  std::vector<FieldElem> c_;  // index j * n_ + i, only i + j < n_ used
};

Germ pow(const Germ& a, int k);

struct WeierstrassGerm {
  Germ unit;
  int u_order = 0;
  Germ distinguished;  // t^d + lower terms with coefficients in (u)
  int degree = 0;
};
WeierstrassGerm weierstrass(const Germ& f);
// f = q g + r with deg_t r < deg g, for a distinguished g of degree d.
std::pair<Germ, Germ> weierstrass_divide(const Germ& f, const Germ& g, int d);

// f = unit * inner^{u_order} * distinguished for f in k[[inner, outer]].
struct Weierstrass {
  L2Series unit;
  int u_order = 0;
  L2Series distinguished;
  int degree = 0;
};
Weierstrass weierstrass_prepare(const L2Series& f, Prec2 cap);

}  // namespace lf2
