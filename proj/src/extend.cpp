#include "lf2/extend.hpp"

#include "lf2/errors.hpp"

namespace lf2 {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

using Matrix = std::vector<std::vector<LSeries>>;

Matrix mat_mul(const Matrix& a, const Matrix& b, const std::string& var) {
  const size_t n = a.size();
  Matrix c(n, std::vector<LSeries>(n, LSeries(var)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_exact_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!b[k][j].is_exact_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Faddeev-LeVerrier: only divisions by integers, so no precision is lost.
LSeries determinant(const Matrix& a, const std::string& var) {
  const size_t n = a.size();
  if (n == 1) return a[0][0];
  Matrix m(n, std::vector<LSeries>(n, LSeries(var)));
  LSeries c = LSeries::constant(var, FieldElem(1));
  for (size_t k = 1; k <= n; ++k) {
    Matrix am = mat_mul(a, m, var);
    for (size_t i = 0; i < n; ++i) am[i][i] += c;
    m = std::move(am);
    Matrix prod = mat_mul(a, m, var);
    LSeries tr(var);
    for (size_t i = 0; i < n; ++i) tr += prod[i][i];
    c = FieldElem(Rational(-1, static_cast<long>(k))) * tr;
  }
  return n % 2 ? -c : c;
}

void check_field(const LSeries& a, const ExtPtr& residue) {
  const ExtPtr f = a.field();
  if (f && !same_field(f, residue)) throw TowerMismatch("coefficients of " + to_string(a) + " lie outside k'");
}

}  // namespace

LocalExt::LocalExt(std::string base_var, std::string top_var, int e, ExtPtr residue)
    : base_(std::move(base_var)), top_(std::move(top_var)), e_(e), residue_(std::move(residue)) {
  if (e_ < 1) throw InvalidArgument("ramification index must be positive");
}

LSeries LocalExt::embed(const LSeries& f) const {
  if (f.var() != base_) throw VariableMismatch("embedding expects a series in " + base_ + ", got " + f.var());
  std::vector<FieldElem> c;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) c.insert(c.end(), e_ - 1, FieldElem(0));
    c.push_back(f.coeffs()[i].lift_to(residue_));
  }
  return LSeries(top_, f.first() * e_, std::move(c), prec_mul(f.prec(), e_));
}

LSeries LocalExt::trace(const LSeries& a) const {
  if (a.var() != top_) throw VariableMismatch("trace expects a series in " + top_ + ", got " + a.var());
  check_field(a, residue_);
  std::vector<FieldElem> c;
  int lo = 0;
  bool started = false;
  for (int exp = a.first(); exp < a.end(); ++exp) {
    if (floor_div(exp, e_) * e_ != exp) continue;
    if (!started) {
      lo = exp / e_;
      started = true;
    }
    c.push_back(FieldElem(e_) * ext_trace(a.coeffs()[exp - a.first()], residue_));
  }
  const int prec = a.is_exact() ? kExact : floor_div(a.prec() + e_ - 1, e_);
  return LSeries(base_, lo, std::move(c), prec);
}

LSeries LocalExt::norm(const LSeries& a) const {
  if (a.var() != top_) throw VariableMismatch("norm expects a series in " + top_ + ", got " + a.var());
  check_field(a, residue_);
  const int d = residue_degree();
  const int n = e_ * d;
  // a = sum_r top^r A_r(base)
  std::vector<LSeries> parts;
  for (int r = 0; r < e_; ++r) {
    std::vector<std::pair<int, FieldElem>> terms;
    for (int exp = a.first(); exp < a.end(); ++exp)
      if (exp - floor_div(exp, e_) * e_ == r) terms.push_back({floor_div(exp, e_), a.coeffs()[exp - a.first()]});
    const int prec = a.is_exact() ? kExact : floor_div(a.prec() - r + e_ - 1, e_);
    parts.push_back(LSeries::from_coeffs(base_, terms, prec));
  }
  const LSeries tau = LSeries::monomial(base_, FieldElem(1), 1);
  const FieldElem gen = residue_ ? FieldElem::generator(residue_) : FieldElem(1);
  Matrix m(n, std::vector<LSeries>(n, LSeries(base_)));
  for (int i = 0; i < e_; ++i)
    for (int r2 = 0; r2 < e_; ++r2) {
      const LSeries b = r2 >= i ? parts[r2 - i] : tau * parts[r2 - i + e_];
      FieldElem aj = FieldElem(1);
      for (int j = 0; j < d; ++j, aj *= gen) {
        // coordinates of b * gen^j, one series per coordinate
        std::vector<std::vector<FieldElem>> coords(d);
        for (const auto& x : b.coeffs()) {
          FieldElem y = (x * aj).lift_to(residue_);
          for (int p = 0; p < d; ++p) coords[p].push_back(FieldElem(y.coords()[p]));
        }
        for (int p = 0; p < d; ++p) m[r2 * d + p][i * d + j] = LSeries(base_, b.first(), coords[p], b.prec());
      }
    }
  return determinant(m, base_);
}

Form1 LocalExt::trace(const Form1& w) const {
  const LSeries h = FieldElem(Rational(1, e_)) * w.coeff.shifted(1 - e_);
  return Form1{trace(h)};
}

}  // namespace lf2
