#pragma once

#include <string>
#include <vector>

#include "lf2/coeff.hpp"

namespace lf2 {

// Precision value meaning "known exactly".
inline constexpr int kExact = 1 << 28;

constexpr int prec_add(int a, int b) { return (a >= kExact || b >= kExact) ? kExact : a + b; }
constexpr int prec_mul(int a, int k) { return a >= kExact ? kExact : a * k; }

// sum_{j >= val} c_j x^j + O(x^prec).
// Coefficients past the stored range and below prec are zero.
class LSeries {
 public:
  explicit LSeries(std::string var = "t", int prec = kExact);
  LSeries(std::string var, int val, std::vector<FieldElem> coeffs, int prec = kExact);

  static LSeries constant(std::string var, const FieldElem& c);
  static LSeries monomial(std::string var, const FieldElem& c, int exp);
  static LSeries from_coeffs(std::string var, const std::vector<std::pair<int, FieldElem>>& terms,
                             int prec = kExact);

  const std::string& var() const { return var_; }
  int prec() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  int first() const { return val_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  int end() const { return val_ + static_cast<int>(coeffs_.size()); }

  // No nonzero coefficient below prec.
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }
  int valuation() const;  // InsufficientPrecision for zero
  // valuation(), or prec for zero
  int order() const { return coeffs_.empty() ? prec_ : val_; }
  FieldElem leading() const;
  FieldElem coeff(int exp) const;  // InsufficientPrecision past prec

  ExtPtr field() const;

  LSeries truncated(int prec) const;
  LSeries shifted(int k) const;
  LSeries with_var(std::string var) const;

  LSeries operator-() const;
  LSeries& operator+=(const LSeries& o);
  LSeries& operator-=(const LSeries& o);
  friend LSeries operator+(LSeries a, const LSeries& b) { return a += b; }
  friend LSeries operator-(LSeries a, const LSeries& b) { return a -= b; }
  friend LSeries operator*(const LSeries& a, const LSeries& b);
  friend LSeries operator*(const FieldElem& c, const LSeries& a);
  friend bool operator==(const LSeries& a, const LSeries& b);

 private:
  void normalize();

  std::string var_;
  int val_ = 0;
  std::vector<FieldElem> coeffs_;
  int prec_ = kExact;
};

// Agreement on every exponent known in both.
bool agree(const LSeries& a, const LSeries& b);

// Infinite expansions are cut at the absolute exponent `cap`.
LSeries inverse(const LSeries& a, int cap);
LSeries div(const LSeries& a, const LSeries& b, int cap);
LSeries pow(const LSeries& a, int n, int cap);
LSeries derivative(const LSeries& a);
LSeries exp(const LSeries& a, int cap);
LSeries log(const LSeries& a, int cap);
// f(g); g must have positive valuation unless f is an exact Laurent polynomial.
LSeries compose(const LSeries& f, const LSeries& g, int cap);
// Power series inverse under composition; g = c x + ...
LSeries reversion(const LSeries& g, int cap);

// coeff * d(var)
struct Form1 {
  LSeries coeff;
  const std::string& var() const { return coeff.var(); }
};

Form1 d(const LSeries& f);
Form1 dlog(const LSeries& f, int cap);
FieldElem residue(const Form1& w);

std::string to_string(const LSeries& a);
std::string to_string(const Form1& w);

}  // namespace lf2
