#include "lf2/local2d.hpp"

#include <algorithm>
#include <sstream>

#include "lf2/errors.hpp"

namespace lf2 {

namespace {

// Lowest known inner exponent over the stored entries (0 if none is negative).
int inner_floor(const L2Series& a) {
  int m = 0;
  for (const auto& c : a.coeffs())
    if (!c.is_zero()) m = std::min(m, c.first());
  return m;
}

LSeries one(const std::string& var) { return LSeries::constant(var, FieldElem(1)); }

}  // namespace

L2Series::L2Series(std::string inner, std::string outer, int prec)
    : inner_(std::move(inner)), outer_(std::move(outer)), prec_(prec) {}

L2Series::L2Series(std::string inner, std::string outer, int val, std::vector<LSeries> coeffs, int prec)
    : inner_(std::move(inner)), outer_(std::move(outer)), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
  for (const auto& c : coeffs_)
    if (c.var() != inner_) throw VariableMismatch("entry in " + c.var() + " inside a series over " + inner_);
  normalize();
}

L2Series L2Series::constant(std::string inner, std::string outer, const FieldElem& c) {
  return monomial(std::move(inner), std::move(outer), c, 0, 0);
}

L2Series L2Series::monomial(std::string inner, std::string outer, const FieldElem& c, int i, int j) {
  LSeries e = LSeries::monomial(inner, c, i);
  return L2Series(std::move(inner), std::move(outer), j, {e});
}

L2Series L2Series::lift(const LSeries& c, std::string outer, int j) { return L2Series(c.var(), std::move(outer), j, {c}); }

L2Series L2Series::inner_big_o(std::string inner, std::string outer, int p) {
  LSeries z(inner, p);
  return L2Series(std::move(inner), std::move(outer), 0, {z});
}

void L2Series::normalize() {
  if (prec_ < kExact && end() > prec_) coeffs_.resize(std::max(0, prec_ - val_), LSeries(inner_));
  while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_exact_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) val_ = 0;
}

void L2Series::check_compatible(const L2Series& o) const {
  if (inner_ != o.inner_ || outer_ != o.outer_)
    throw VariableMismatch("cannot combine k((" + inner_ + "))((" + outer_ + ")) with k((" + o.inner_ + "))((" +
                           o.outer_ + "))");
}

bool L2Series::is_exact() const {
  if (prec_ < kExact) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LSeries& c) { return c.is_exact(); });
}

bool L2Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LSeries& c) { return c.is_zero(); });
}

int L2Series::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return val_ + static_cast<int>(i);
    if (!coeffs_[i].is_exact())
      throw InsufficientPrecision("leading " + outer_ + "-coefficient is only known as " + to_string(coeffs_[i]));
  }
  throw InsufficientPrecision("valuation of " + to_string(*this) + " is not determined");
}

LSeries L2Series::leading() const { return coeff(valuation()); }

LSeries L2Series::coeff(int j) const {
  if (j >= prec_)
    throw InsufficientPrecision("coefficient of " + outer_ + "^" + std::to_string(j) + " unknown in " +
                                to_string(*this));
  if (j < val_ || j >= end()) return LSeries(inner_);
  return coeffs_[j - val_];
}

ExtPtr L2Series::field() const {
  ExtPtr e;
  for (const auto& c : coeffs_) e = common_ext(e, c.field());
  return e;
}

int L2Series::inner_prec() const {
  int p = kExact;
  for (const auto& c : coeffs_) p = std::min(p, c.prec());
  return p;
}

L2Series L2Series::truncated_outer(int prec) const {
  if (prec >= prec_) return *this;
  if (prec_ >= kExact && end() <= prec) return *this;
  L2Series r = *this;
  r.prec_ = prec;
  r.normalize();
  return r;
}

L2Series L2Series::truncated(Prec2 cap) const {
  L2Series r = truncated_outer(cap.outer);
  for (auto& c : r.coeffs_) c = c.truncated(cap.inner);
  r.normalize();
  return r;
}

L2Series L2Series::shifted(int k) const {
  L2Series r = *this;
  if (!r.coeffs_.empty()) r.val_ += k;
  r.prec_ = prec_add(prec_, k);
  return r;
}

L2Series L2Series::renamed(std::string inner, std::string outer) const {
  L2Series r = *this;
  r.inner_ = inner;
  r.outer_ = std::move(outer);
  for (auto& c : r.coeffs_) c = c.with_var(inner);
  return r;
}

L2Series L2Series::operator-() const {
  L2Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

L2Series& L2Series::operator+=(const L2Series& o) {
  check_compatible(o);
  const int prec = std::min(prec_, o.prec_);
  if (o.coeffs_.empty()) {
    prec_ = prec;
    normalize();
    return *this;
  }
  if (coeffs_.empty()) {
    coeffs_ = o.coeffs_;
    val_ = o.val_;
    prec_ = prec;
    normalize();
    return *this;
  }
  const int lo = std::min(val_, o.val_);
  const int hi = std::min(std::max(end(), o.end()), prec);
  std::vector<LSeries> c;
  c.reserve(std::max(0, hi - lo));
  for (int j = lo; j < hi; ++j) {
    LSeries x(inner_);
    if (j >= val_ && j < end()) x = coeffs_[j - val_];
    if (j >= o.val_ && j < o.end()) x += o.coeffs_[j - o.val_];
    c.push_back(std::move(x));
  }
  coeffs_ = std::move(c);
  val_ = lo;
  prec_ = prec;
  normalize();
  return *this;
}

L2Series& L2Series::operator-=(const L2Series& o) { return *this += -o; }

L2Series operator*(const L2Series& a, const L2Series& b) {
  a.check_compatible(b);
  if (a.is_exact_zero() || b.is_exact_zero()) return L2Series(a.inner_, a.outer_);
  const int ao = a.coeffs_.empty() ? a.prec_ : a.val_;
  const int bo = b.coeffs_.empty() ? b.prec_ : b.val_;
  const int prec = std::min(prec_add(ao, b.prec_), prec_add(bo, a.prec_));
  if (a.coeffs_.empty() || b.coeffs_.empty()) return L2Series(a.inner_, a.outer_, prec);
  const int lo = a.val_ + b.val_;
  const int hi = std::min(a.end() + b.end() - 1, prec);
  std::vector<LSeries> c(std::max(0, hi - lo), LSeries(a.inner_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_exact_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      const int k = static_cast<int>(i + j);
      if (lo + k >= hi) break;
      if (b.coeffs_[j].is_exact_zero()) continue;
      c[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return L2Series(a.inner_, a.outer_, lo, std::move(c), prec);
}

L2Series operator*(const FieldElem& c, const L2Series& a) {
  if (c.is_zero()) return L2Series(a.inner_, a.outer_);
  L2Series r = a;
  for (auto& x : r.coeffs_) x = c * x;
  return r;
}

L2Series operator*(const LSeries& c, const L2Series& a) {
  if (c.var() != a.inner_) throw VariableMismatch("scalar in " + c.var() + " for a series over " + a.inner_);
  if (c.is_exact_zero()) return L2Series(a.inner_, a.outer_);
  L2Series r = a;
  for (auto& x : r.coeffs_) x = c * x;
  r.normalize();
  return r;
}

bool agree(const L2Series& a, const L2Series& b) {
  if (a.inner_var() != b.inner_var() || a.outer_var() != b.outer_var()) return false;
  const int p = std::min(a.prec(), b.prec());
  return (a.truncated_outer(p) - b.truncated_outer(p)).is_zero();
}

L2Series inverse(const L2Series& a, Prec2 cap) {
  const int m = a.valuation();
  const LSeries inv = inverse(a.coeff(m), cap.inner);
  const std::string& in = a.inner_var();
  const std::string& out = a.outer_var();
  if (a.prec() >= kExact && a.end() == m + 1) return L2Series(in, out, -m, {inv});
  const int prec = std::min(prec_add(a.prec(), -2 * m), cap.outer);
  const int n = prec + m;
  std::vector<LSeries> b;
  b.reserve(std::max(0, n));
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      b.push_back(inv);
      continue;
    }
    LSeries s(in);
    for (int j = 1; j <= k && m + j < a.end(); ++j) {
      const LSeries& aj = a.coeffs()[m + j - a.first()];
      if (aj.is_exact_zero()) continue;
      s += aj * b[k - j];
    }
    b.push_back((-(inv * s)).truncated(cap.inner));
  }
  return L2Series(in, out, -m, std::move(b), prec);
}

L2Series div(const L2Series& a, const L2Series& b, Prec2 cap) {
  if (a.is_exact_zero()) return a;
  const int ao = a.coeffs().empty() ? a.prec() : a.first();
  Prec2 c{prec_add(cap.inner, -inner_floor(a)), prec_add(cap.outer, -ao)};
  return (a * inverse(b, c)).truncated(cap);
}

L2Series pow(const L2Series& a, int n, Prec2 cap) {
  if (n == 0) return L2Series::constant(a.inner_var(), a.outer_var(), FieldElem(1));
  if (n < 0) {
    const int v = a.valuation();
    const int in_margin = -inner_floor(a) * (-n);
    return pow(inverse(a, {prec_add(cap.inner, in_margin), prec_add(cap.outer, (-n - 1) * v)}), -n, cap);
  }
  const int ao = a.coeffs().empty() ? a.prec() : a.first();
  const Prec2 work{prec_add(cap.inner, -inner_floor(a) * n), prec_add(cap.outer, std::max(0, -ao) * n)};
  L2Series r = a, b = a;
  --n;
  while (n) {
    if (n & 1) r = (r * b).truncated(work);
    n >>= 1;
    if (n) b = (b * b).truncated(work);
  }
  return r.truncated(cap);
}

L2Series d_inner(const L2Series& a) {
  std::vector<LSeries> c;
  for (const auto& x : a.coeffs()) c.push_back(derivative(x));
  return L2Series(a.inner_var(), a.outer_var(), a.first(), std::move(c), a.prec());
}

L2Series d_outer(const L2Series& a) {
  std::vector<LSeries> c;
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    c.push_back(FieldElem(a.first() + static_cast<long>(i)) * a.coeffs()[i]);
  return L2Series(a.inner_var(), a.outer_var(), a.first() - 1, std::move(c), prec_add(a.prec(), -1));
}

// exp and log split off the outer-constant term: for x = x0(inner) + x1 with
// x1 divisible by outer, exp(x) = exp(x0) exp(x1), and the series in x1 stops
// once the outer valuation reaches the window.

L2Series log(const L2Series& a, Prec2 cap) {
  const std::string& in = a.inner_var();
  const std::string& out = a.outer_var();
  if (a.valuation() != 0) throw NotAUnit("log needs a principal unit, got " + to_string(a));
  const LSeries e0 = a.coeff(0);
  if (e0.valuation() != 0 || !e0.leading().is_one())
    throw NotAUnit("log needs a principal unit, got " + to_string(a));
  const int prec = std::min(a.prec(), cap.outer);
  const int guard = -inner_floor(a) * std::max(prec, 0);
  const Prec2 work{prec_add(cap.inner, guard), prec};
  const LSeries l0 = log(e0, work.inner);
  const LSeries inv0 = inverse(e0, work.inner);
  const L2Series x = (inv0 * a).truncated(work) - L2Series::constant(in, out, FieldElem(1));
  L2Series sum = L2Series::lift(l0, out).truncated_outer(prec);
  if (x.is_exact_zero()) return sum.truncated(cap);
  L2Series p = L2Series::constant(in, out, FieldElem(1));
  for (int n = 1; n < prec; ++n) {
    p = (p * x).truncated(work);
    sum += FieldElem(Rational(n % 2 ? 1 : -1, n)) * p;
  }
  return sum.truncated(cap);
}

L2Series exp(const L2Series& a, Prec2 cap) {
  const std::string& in = a.inner_var();
  const std::string& out = a.outer_var();
  for (int j = a.first(); j < std::min(0, a.end()); ++j) {
    const LSeries& c = a.coeffs()[j - a.first()];
    if (!c.is_zero()) throw NonpositiveValuation("exp argument has a negative " + out + "-power");
    if (!c.is_exact()) throw InsufficientPrecision("exp argument has an undetermined negative " + out + "-power");
  }
  const int prec = std::min(a.prec(), cap.outer);
  const int guard = -inner_floor(a) * std::max(prec, 0);
  const Prec2 work{prec_add(cap.inner, guard), prec};
  const LSeries x0 = 0 < a.prec() ? a.coeff(0) : LSeries(in, kExact);
  if (!x0.is_zero() && x0.valuation() < 1)
    throw NonpositiveValuation("exp argument must lie in the maximal ideal, got " + to_string(a));
  const L2Series x1 = a - L2Series::lift(x0, out);
  L2Series sum = L2Series::constant(in, out, FieldElem(1)).truncated_outer(prec);
  L2Series term = L2Series::constant(in, out, FieldElem(1));
  if (!x1.is_exact_zero())
    for (int n = 1; n < prec; ++n) {
      term = (FieldElem(Rational(1, n)) * (term * x1)).truncated(work);
      sum += term;
    }
  return (exp(x0, work.inner) * sum).truncated(cap);
}

L2Series substitute_inner(const L2Series& f, const LSeries& g, Prec2 cap) {
  if (g.var() != f.inner_var()) throw VariableMismatch("substitution must stay in " + f.inner_var());
  std::vector<LSeries> c;
  for (const auto& x : f.coeffs()) c.push_back(compose(x, g, cap.inner));
  return L2Series(f.inner_var(), f.outer_var(), f.first(), std::move(c), f.prec()).truncated(cap);
}

L2Series substitute_outer(const L2Series& f, const L2Series& T, Prec2 cap) {
  const int vT = T.valuation();
  if (vT < 1) throw NonpositiveValuation("substituted outer parameter must have positive valuation");
  const int prec = std::min(cap.outer, prec_mul(f.prec(), vT));
  L2Series r(f.inner_var(), f.outer_var(), prec);
  if (f.coeffs().empty()) return r;
  const Prec2 work{cap.inner, prec};
  L2Series p = pow(T, f.first(), work);
  for (int j = f.first(); j < f.end(); ++j) {
    r += f.coeffs()[j - f.first()] * p;
    p = (p * T).truncated(work);
  }
  return r.truncated(cap);
}

L2Series pullback(const LSeries& xi, const L2Series& T, Prec2 cap) {
  const std::string& in = T.inner_var();
  const std::string& out = T.outer_var();
  const bool plain = T.is_exact() && T.first() == 1 && T.coeffs().size() == 1 && T.coeffs()[0] == one(in);
  if (plain) {
    std::vector<LSeries> c;
    for (const auto& x : xi.coeffs()) c.push_back(LSeries::constant(in, x));
    return L2Series(in, out, xi.first(), std::move(c), xi.prec()).truncated(cap);
  }
  L2Series r(in, out);
  if (!xi.coeffs().empty()) {
    L2Series p = pow(T, xi.first(), cap);
    for (int j = xi.first(); j < xi.end(); ++j) {
      const FieldElem& c = xi.coeffs()[j - xi.first()];
      if (!c.is_zero()) r += c * p;
      if (j + 1 < xi.end()) p = (p * T).truncated(cap);
    }
  }
  if (!xi.is_exact()) {
    const int vT = T.valuation();
    if (vT >= 1) {
      r = r.truncated_outer(prec_mul(xi.prec(), vT));
    } else {
      // T in the maximal ideal of k[[inner, outer]]: the tail is T^P times an unknown power series.
      const LSeries lead = T.coeff(vT);
      bool integral = lead.valuation() >= 1;
      for (const auto& c : T.coeffs()) integral = integral && (c.is_zero() || c.first() >= 0);
      if (vT != 0 || !integral) throw InvalidArgument("cannot bound the tail of a pullback along " + to_string(T));
      std::vector<LSeries> z;
      for (int j = 0; j < cap.outer; ++j) z.push_back(LSeries(in, 0));
      L2Series unknown(in, out, 0, std::move(z), cap.outer);
      r += pow(T, xi.prec(), cap) * unknown;
    }
  }
  return r.truncated(cap);
}

Form1 res_outer(const Form2& w) { return Form1{w.g.coeff(-1)}; }

LSeries inner_residues(const L2Series& g) {
  std::vector<FieldElem> c;
  int prec = g.prec();
  for (int j = g.first(); j < g.end(); ++j) {
    const LSeries& x = g.coeffs()[j - g.first()];
    if (x.prec() <= -1) {
      prec = j;
      break;
    }
    c.push_back(x.coeff(-1));
  }
  return LSeries(g.outer_var(), g.first(), std::move(c), prec);
}

Form1 res_inner(const Form2& w) { return Form1{inner_residues(w.g)}; }

FieldElem res_total(const Form2& w) { return w.g.coeff(-1).coeff(-1); }

Form2 dlog_wedge(const L2Series& phi, const L2Series& psi, Prec2 cap) {
  const L2Series num = d_inner(phi) * d_outer(psi) - d_outer(phi) * d_inner(psi);
  return Form2{div(num, phi * psi, cap)};
}

UnitDecomp decompose_unit(const L2Series& phi) {
  UnitDecomp d;
  d.m = phi.valuation();
  const LSeries lead = phi.coeff(d.m);
  d.n = lead.valuation();
  d.c = lead.leading();
  d.eps = L2Series::monomial(phi.inner_var(), phi.outer_var(), d.c.inverse(), -d.n, -d.m) * phi;
  return d;
}

std::string to_string(const L2Series& a) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const LSeries& c = a.coeffs()[i];
    if (c.is_exact_zero()) continue;
    const int j = a.first() + static_cast<int>(i);
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (j != 0) os << "*" << a.outer_var() << (j == 1 ? "" : "^" + std::to_string(j));
  }
  if (a.prec() < kExact) {
    os << (first ? "" : " + ") << "O(" << a.outer_var();
    if (a.prec() != 1) os << "^" << a.prec();
    os << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(const Form2& w) {
  return "(" + to_string(w.g) + ") d" + w.g.inner_var() + "^d" + w.g.outer_var();
}

}  // namespace lf2
