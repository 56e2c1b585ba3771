#pragma once

#include <string>
#include <vector>

#include "lf2/laurent.hpp"

namespace lf2 {

// Truncation caps for infinite expansions: absolute exponents in each variable.
struct Prec2 {
  int inner = 8;
  int outer = 8;
};

// Element of k((inner))((outer)): sum_j c_j(inner) outer^j + O(outer^prec).
// Entries are LSeries in the inner variable, each with its own precision.
class L2Series {
 public:
  L2Series(std::string inner = "u", std::string outer = "t", int prec = kExact);
  L2Series(std::string inner, std::string outer, int val, std::vector<LSeries> coeffs, int prec = kExact);

  static L2Series constant(std::string inner, std::string outer, const FieldElem& c);
  static L2Series monomial(std::string inner, std::string outer, const FieldElem& c, int i, int j);
  // c(inner) * outer^j
  static L2Series lift(const LSeries& c, std::string outer, int j = 0);
  // inner-variable zero known modulo inner^p in the outer^0 slot
  static L2Series inner_big_o(std::string inner, std::string outer, int p);

  const std::string& inner_var() const { return inner_; }
  const std::string& outer_var() const { return outer_; }
  int prec() const { return prec_; }
  int first() const { return val_; }
  int end() const { return val_ + static_cast<int>(coeffs_.size()); }
  const std::vector<LSeries>& coeffs() const { return coeffs_; }
  bool is_exact() const;

  bool is_zero() const;
  bool is_exact_zero() const { return coeffs_.empty() && prec_ >= kExact; }
  int valuation() const;  // outer valuation
  LSeries leading() const;
  LSeries coeff(int j) const;
  ExtPtr field() const;
  // Smallest inner precision among stored entries.
  int inner_prec() const;

  L2Series truncated(Prec2 cap) const;
  L2Series truncated_outer(int prec) const;
  L2Series shifted(int k) const;
  // Swap in new variable names (no reordering of the expansion).
  L2Series renamed(std::string inner, std::string outer) const;

  L2Series operator-() const;
  L2Series& operator+=(const L2Series& o);
  L2Series& operator-=(const L2Series& o);
  friend L2Series operator+(L2Series a, const L2Series& b) { return a += b; }
  friend L2Series operator-(L2Series a, const L2Series& b) { return a -= b; }
  friend L2Series operator*(const L2Series& a, const L2Series& b);
  friend L2Series operator*(const FieldElem& c, const L2Series& a);
  friend L2Series operator*(const LSeries& c, const L2Series& a);

 private:
  void normalize();
  void check_compatible(const L2Series& o) const;

  std::string inner_, outer_;
  int val_ = 0;
  std::vector<LSeries> coeffs_;
  int prec_ = kExact;
};

bool agree(const L2Series& a, const L2Series& b);

L2Series inverse(const L2Series& a, Prec2 cap);
L2Series div(const L2Series& a, const L2Series& b, Prec2 cap);
L2Series pow(const L2Series& a, int n, Prec2 cap);
L2Series d_inner(const L2Series& a);
L2Series d_outer(const L2Series& a);
L2Series exp(const L2Series& a, Prec2 cap);
L2Series log(const L2Series& a, Prec2 cap);

// f(g(inner), outer) with val(g) >= 1 in the same inner variable name.
L2Series substitute_inner(const L2Series& f, const LSeries& g, Prec2 cap);
// f(inner, T) with T of outer valuation >= 1 (same variables as f).
L2Series substitute_outer(const L2Series& f, const L2Series& T, Prec2 cap);
// xi(T) for a one-variable series xi; T nonzero.
L2Series pullback(const LSeries& xi, const L2Series& T, Prec2 cap);

// g d(inner) ^ d(outer)
struct Form2 {
  L2Series g;
};

Form1 res_outer(const Form2& w);  // over k((inner)), a multiple of d(inner)
Form1 res_inner(const Form2& w);  // over k((outer)), a multiple of d(outer)
FieldElem res_total(const Form2& w);
Form2 dlog_wedge(const L2Series& phi, const L2Series& psi, Prec2 cap);

// phi = outer^m inner^n c eps, eps a principal unit.
struct UnitDecomp {
  int m = 0;
  int n = 0;
  FieldElem c;
  L2Series eps;
};
UnitDecomp decompose_unit(const L2Series& phi);

// The inner^-1 coefficient of every outer-power: the map behind res_inner.
LSeries inner_residues(const L2Series& g);

std::string to_string(const L2Series& a);
std::string to_string(const Form2& w);

}  // namespace lf2
