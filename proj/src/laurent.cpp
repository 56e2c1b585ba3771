#include "lf2/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "lf2/errors.hpp"

namespace lf2 {

LSeries::LSeries(std::string var, int prec) : var_(std::move(var)), val_(0), prec_(prec) {}

LSeries::LSeries(std::string var, int val, std::vector<FieldElem> coeffs, int prec)
    : var_(std::move(var)), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
  normalize();
}

LSeries LSeries::constant(std::string var, const FieldElem& c) { return LSeries(std::move(var), 0, {c}); }

LSeries LSeries::monomial(std::string var, const FieldElem& c, int exp) {
  return LSeries(std::move(var), exp, {c});
}

LSeries LSeries::from_coeffs(std::string var, const std::vector<std::pair<int, FieldElem>>& terms, int prec) {
  LSeries r(var, prec);
  for (const auto& [e, c] : terms) r += monomial(var, c, e).truncated(prec);
  return r;
}

void LSeries::normalize() {
  if (prec_ < kExact && end() > prec_) coeffs_.resize(std::max(0, prec_ - val_));
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) val_ = 0;
}

int LSeries::valuation() const {
  if (coeffs_.empty()) throw InsufficientPrecision("valuation of " + to_string(*this) + " is not determined");
  return val_;
}

FieldElem LSeries::leading() const { return coeffs_.empty() ? coeff(valuation()) : coeffs_.front(); }

FieldElem LSeries::coeff(int exp) const {
  if (exp >= prec_)
    throw InsufficientPrecision("coefficient of " + var_ + "^" + std::to_string(exp) + " unknown in " +
                                to_string(*this));
  if (exp < val_ || exp >= end()) return FieldElem(0);
  return coeffs_[exp - val_];
}

ExtPtr LSeries::field() const {
  ExtPtr e;
  for (const auto& c : coeffs_) e = common_ext(e, c.ext());
  return e;
}

LSeries LSeries::truncated(int prec) const {
  if (prec >= prec_) return *this;
  if (is_exact() && end() <= prec) return *this;
  LSeries r = *this;
  r.prec_ = prec;
  r.normalize();
  return r;
}

LSeries LSeries::shifted(int k) const {
  LSeries r = *this;
  if (!r.coeffs_.empty()) r.val_ += k;
  r.prec_ = prec_add(prec_, k);
  return r;
}

LSeries LSeries::with_var(std::string var) const {
  LSeries r = *this;
  r.var_ = std::move(var);
  return r;
}

LSeries LSeries::operator-() const {
  LSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LSeries& LSeries::operator+=(const LSeries& o) {
  if (var_ != o.var_) throw VariableMismatch("cannot combine series in " + var_ + " and " + o.var_);
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
  std::vector<FieldElem> c(std::max(0, hi - lo));
  for (int e = lo; e < hi; ++e) {
    FieldElem x;
    if (e >= val_ && e < end()) x = coeffs_[e - val_];
    if (e >= o.val_ && e < o.end()) x += o.coeffs_[e - o.val_];
    c[e - lo] = std::move(x);
  }
  coeffs_ = std::move(c);
  val_ = lo;
  prec_ = prec;
  normalize();
  return *this;
}

LSeries& LSeries::operator-=(const LSeries& o) { return *this += -o; }

LSeries operator*(const LSeries& a, const LSeries& b) {
  if (a.var_ != b.var_) throw VariableMismatch("cannot multiply series in " + a.var_ + " and " + b.var_);
  if (a.is_exact_zero() || b.is_exact_zero()) return LSeries(a.var_);
  const int prec = std::min(prec_add(a.order(), b.prec_), prec_add(b.order(), a.prec_));
  if (a.coeffs_.empty() || b.coeffs_.empty()) return LSeries(a.var_, prec);
  const int lo = a.val_ + b.val_;
  const int hi = std::min(a.end() + b.end() - 1, prec);
  std::vector<FieldElem> c(std::max(0, hi - lo));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      const int k = static_cast<int>(i + j);
      if (lo + k >= hi) break;
      c[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LSeries(a.var_, lo, std::move(c), prec);
}

LSeries operator*(const FieldElem& c, const LSeries& a) {
  if (c.is_zero()) return LSeries(a.var_);
  LSeries r = a;
  for (auto& x : r.coeffs_) x = c * x;
  return r;
}

bool operator==(const LSeries& a, const LSeries& b) {
  if (a.var_ != b.var_ || a.prec_ != b.prec_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  if (a.coeffs_.empty()) return true;
  return a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
}

bool agree(const LSeries& a, const LSeries& b) {
  if (a.var() != b.var()) return false;
  const int p = std::min(a.prec(), b.prec());
  return (a.truncated(p) - b.truncated(p)).is_zero();
}

LSeries inverse(const LSeries& a, int cap) {
  const int v = a.valuation();
  const FieldElem inv = a.leading().inverse();
  if (a.is_exact() && a.coeffs().size() == 1) return LSeries::monomial(a.var(), inv, -v);
  const int prec = std::min(prec_add(a.prec(), -2 * v), cap);
  const int n = prec + v;  // number of coefficients from -v
  std::vector<FieldElem> b(std::max(0, n));
  const auto& c = a.coeffs();
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      b[0] = inv;
      continue;
    }
    FieldElem s;
    for (int j = 1; j <= k && j < static_cast<int>(c.size()); ++j) s += c[j] * b[k - j];
    b[k] = -(inv * s);
  }
  return LSeries(a.var(), -v, std::move(b), prec);
}

LSeries div(const LSeries& a, const LSeries& b, int cap) {
  if (a.is_exact_zero()) return LSeries(a.var());
  return (a * inverse(b, prec_add(cap, -a.order()))).truncated(cap);
}

LSeries pow(const LSeries& a, int n, int cap) {
  if (n == 0) return LSeries::constant(a.var(), FieldElem(1));
  if (n < 0) {
    const int v = a.valuation();
    return pow(inverse(a, prec_add(cap, (-n - 1) * v)), -n, cap);
  }
  const int margin = std::max(0, -a.order()) * n;
  LSeries r = a, b = a;
  --n;
  while (n) {
    if (n & 1) r = (r * b).truncated(prec_add(cap, margin));
    n >>= 1;
    if (n) b = (b * b).truncated(prec_add(cap, margin));
  }
  return r.truncated(cap);
}

LSeries derivative(const LSeries& a) {
  std::vector<FieldElem> c;
  c.reserve(a.coeffs().size());
  for (size_t i = 0; i < a.coeffs().size(); ++i) c.push_back(FieldElem(a.first() + static_cast<long>(i)) * a.coeffs()[i]);
  return LSeries(a.var(), a.first() - 1, std::move(c), prec_add(a.prec(), -1));
}

LSeries exp(const LSeries& a, int cap) {
  const LSeries one = LSeries::constant(a.var(), FieldElem(1));
  if (a.is_zero()) return one.truncated(std::min(a.prec(), cap));
  const int v = a.valuation();
  if (v < 1) throw NonpositiveValuation("exp needs positive valuation, got " + std::to_string(v));
  const int prec = std::min(a.prec(), cap);
  LSeries sum = one.truncated(prec), term = one;
  for (int n = 1; n * v < prec; ++n) {
    term = (FieldElem(Rational(1, n)) * (term * a)).truncated(prec);
    sum += term;
  }
  return sum;
}

LSeries log(const LSeries& a, int cap) {
  if (a.is_zero() || a.valuation() != 0 || !a.leading().is_one())
    throw NotAUnit("log needs a principal unit, got " + to_string(a));
  const LSeries x = a - LSeries::constant(a.var(), FieldElem(1));
  if (x.is_zero()) return LSeries(a.var(), std::min(x.prec(), cap));
  const int v = x.valuation();
  const int prec = std::min(a.prec(), cap);
  LSeries sum(a.var(), prec), p = LSeries::constant(a.var(), FieldElem(1));
  for (int n = 1; n * v < prec; ++n) {
    p = (p * x).truncated(prec);
    sum += FieldElem(Rational(n % 2 ? 1 : -1, n)) * p;
  }
  return sum;
}

LSeries compose(const LSeries& f, const LSeries& g, int cap) {
  if (f.is_exact_zero()) return LSeries(g.var());
  if (f.is_exact()) {
    LSeries r(g.var());
    for (int j = f.first(); j < f.end(); ++j) {
      const FieldElem& c = f.coeffs()[j - f.first()];
      if (c.is_zero()) continue;
      r += c * pow(g, j, cap);
    }
    return r.truncated(cap);
  }
  const int vg = g.valuation();
  if (vg < 1) throw NonpositiveValuation("substituted series must have positive valuation");
  const int prec = std::min(cap, prec_mul(f.prec(), vg));
  LSeries r(g.var(), prec);
  if (f.is_zero()) return r;
  LSeries p = pow(g, f.first(), prec);
  for (int j = f.first(); j < f.end(); ++j) {
    r += f.coeffs()[j - f.first()] * p;
    p = (p * g).truncated(prec);
  }
  return r;
}

LSeries reversion(const LSeries& g, int cap) {
  if (g.valuation() != 1) throw InvalidArgument("reversion needs valuation 1");
  const FieldElem c = g.leading().inverse();
  const LSeries x = LSeries::monomial(g.var(), FieldElem(1), 1);
  LSeries h = c * x;
  for (int i = 0; i < cap; ++i) h = (h - c * (compose(g, h, cap) - x)).truncated(cap);
  return h;
}

Form1 d(const LSeries& f) { return Form1{derivative(f)}; }

Form1 dlog(const LSeries& f, int cap) { return Form1{div(derivative(f), f, cap)}; }

FieldElem residue(const Form1& w) { return w.coeff.coeff(-1); }

namespace {

std::string monomial_text(const FieldElem& c, const std::string& var, int e, bool first) {
  std::string body;
  bool neg = false;
  std::string cs;
  if (c.is_rational()) {
    Rational q = c.rational();
    neg = q < 0;
    cs = to_string(Rational(abs(q)));
  } else {
    cs = to_string(c);
  }
  std::string mono;
  if (e != 0) mono = var + (e == 1 ? "" : "^" + std::to_string(e));
  if (mono.empty())
    body = cs;
  else if (cs == "1")
    body = mono;
  else
    body = cs + "*" + mono;
  if (first) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

}  // namespace

std::string to_string(const LSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const FieldElem& c = a.coeffs()[i];
    if (c.is_zero()) continue;
    os << monomial_text(c, a.var(), a.first() + static_cast<int>(i), first);
    first = false;
  }
  if (!a.is_exact()) {
    os << (first ? "" : " + ") << "O(" << a.var();
    if (a.prec() != 1) os << "^" << a.prec();
    os << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(const Form1& w) { return "(" + to_string(w.coeff) + ") d" + w.var(); }

}  // namespace lf2
