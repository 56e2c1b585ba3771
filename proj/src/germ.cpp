#include "lf2/germ.hpp"

#include <algorithm>

#include "lf2/errors.hpp"

namespace lf2 {

Germ::Germ(int N) : n_(std::max(N, 0)), c_(static_cast<size_t>(n_) * n_) {}

Germ Germ::constant(const FieldElem& c, int N) {
  Germ g(N);
  if (N > 0) g.set(0, 0, c);
  return g;
}

Germ Germ::u(int N) {
  Germ g(N);
  if (N > 1) g.set(1, 0, FieldElem(1));
  return g;
}

Germ Germ::t(int N) {
  Germ g(N);
  if (N > 1) g.set(0, 1, FieldElem(1));
  return g;
}

Germ Germ::from_l2(const L2Series& f, int N) {
  if (!f.coeffs().empty() && f.first() < 0) throw InvalidArgument("not a power series: " + to_string(f));
  N = std::min(N, f.prec());
  for (int j = f.first(); j < f.end(); ++j) {
    const LSeries& c = f.coeffs()[j - f.first()];
    if (!c.is_zero() && c.first() < 0) throw InvalidArgument("not a power series: " + to_string(f));
    N = std::min(N, prec_add(c.prec(), j));
  }
  Germ g(N);
  for (int j = f.first(); j < f.end() && j < N; ++j) {
    const LSeries& c = f.coeffs()[j - f.first()];
    for (int i = c.first(); i < c.end() && i + j < N; ++i) g.set(i, j, c.coeffs()[i - c.first()]);
  }
  return g;
}

FieldElem Germ::at(int i, int j) const {
  if (i < 0 || j < 0) return FieldElem(0);
  if (i + j >= n_) throw InsufficientPrecision("germ coefficient beyond total degree " + std::to_string(n_));
  return c_[j * n_ + i];
}

void Germ::set(int i, int j, const FieldElem& c) {
  if (i + j < n_) c_[j * n_ + i] = c;
}

bool Germ::is_zero() const { return order() >= n_; }

int Germ::order() const {
  for (int s = 0; s < n_; ++s)
    for (int j = 0; j <= s; ++j)
      if (!c_[j * n_ + (s - j)].is_zero()) return s;
  return n_;
}

int Germ::u_order() const {
  int best = n_;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i + j < n_ && i < best; ++i)
      if (!c_[j * n_ + i].is_zero()) best = i;
  return best;
}

Germ Germ::truncated(int N) const {
  if (N >= n_) return *this;
  Germ g(N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i + j < N; ++i) g.set(i, j, at(i, j));
  return g;
}

Germ Germ::divided_by_u(int k) const {
  Germ g(n_ - k);
  for (int j = 0; j < g.n_; ++j)
    for (int i = 0; i + j < g.n_; ++i) g.set(i, j, at(i + k, j));
  return g;
}

Germ Germ::divided_by_t(int k) const {
  Germ g(n_ - k);
  for (int j = 0; j < g.n_; ++j)
    for (int i = 0; i + j < g.n_; ++i) g.set(i, j, at(i, j + k));
  return g;
}

std::pair<Germ, Germ> Germ::split_t(int d) const {
  Germ low(n_);
  for (int j = 0; j < std::min(d, n_); ++j)
    for (int i = 0; i + j < n_; ++i) low.set(i, j, at(i, j));
  return {low, divided_by_t(d)};
}

Germ Germ::operator-() const {
  Germ g = *this;
  for (auto& c : g.c_) c = -c;
  return g;
}

Germ operator+(const Germ& a, const Germ& b) {
  Germ g(std::min(a.n_, b.n_));
  for (int j = 0; j < g.n_; ++j)
    for (int i = 0; i + j < g.n_; ++i) g.set(i, j, a.at(i, j) + b.at(i, j));
  return g;
}

Germ operator-(const Germ& a, const Germ& b) { return a + (-b); }

Germ operator*(const Germ& a, const Germ& b) {
  const int oa = a.order(), ob = b.order();
  const int N = std::min(oa + b.n_, ob + a.n_);
  Germ g(N);
  for (int j1 = 0; j1 < a.n_; ++j1)
    for (int i1 = 0; i1 + j1 < a.n_; ++i1) {
      const FieldElem& x = a.c_[j1 * a.n_ + i1];
      if (x.is_zero()) continue;
      for (int j2 = 0; j2 < b.n_ && i1 + j1 + j2 < N; ++j2)
        for (int i2 = 0; i2 + j2 < b.n_ && i1 + i2 + j1 + j2 < N; ++i2) {
          const FieldElem& y = b.c_[j2 * b.n_ + i2];
          if (!y.is_zero()) g.c_[(j1 + j2) * N + (i1 + i2)] += x * y;
        }
    }
  return g;
}

Germ operator*(const FieldElem& c, const Germ& a) {
  Germ g = a;
  for (auto& x : g.c_) x = c * x;
  return g;
}

Germ pow(const Germ& a, int k) {
  if (k < 0) return pow(a.inverse(), -k);
  Germ r = Germ::constant(FieldElem(1), a.N());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Germ Germ::inverse() const {
  if (n_ == 0) return *this;
  const FieldElem c = at(0, 0);
  if (c.is_zero()) throw NotAUnit("germ is not a unit");
  const FieldElem ci = c.inverse();
  const Germ x = ci * *this - constant(FieldElem(1), n_);
  Germ sum = constant(FieldElem(1), n_), p = sum;
  for (int k = 1; k < n_; ++k) {
    p = -(p * x);
    sum = sum + p;
  }
  return ci * sum;
}

Germ Germ::compose(const Germ& U, const Germ& T) const {
  if (U.n_ > 0 && !U.at(0, 0).is_zero()) throw InvalidArgument("substituted germ has a constant term");
  if (T.n_ > 0 && !T.at(0, 0).is_zero()) throw InvalidArgument("substituted germ has a constant term");
  const int N = std::min({n_, U.n_, T.n_});
  std::vector<Germ> up{constant(FieldElem(1), N)}, tp{constant(FieldElem(1), N)};
  for (int k = 1; k < N; ++k) {
    up.push_back((up.back() * U).truncated(N));
    tp.push_back((tp.back() * T).truncated(N));
  }
  Germ r(N);
  for (int j = 0; j < N; ++j) {
    Germ inner(N);
    bool any = false;
    for (int i = 0; i + j < N; ++i) {
      const FieldElem& c = at(i, j);
      if (c.is_zero()) continue;
      inner = inner + c * up[i];
      any = true;
    }
    if (any) r = r + (inner * tp[j]).truncated(N);
  }
  return r;
}

Germ Germ::substitute(const LSeries& F, const Germ& G) {
  if (!F.is_zero() && F.first() < 0) throw InvalidArgument("substituted series has a pole: " + to_string(F));
  if (G.n_ > 0 && !G.at(0, 0).is_zero()) throw InvalidArgument("substituted germ has a constant term");
  const int og = std::max(1, G.order());
  const int N = std::min(G.n_, prec_mul(F.prec(), og));
  Germ r(N), p = constant(FieldElem(1), N);
  for (int k = 0; k < F.end() && k * og < N; ++k) {
    if (k >= F.first()) r = r + F.coeffs()[k - F.first()] * p;
    p = (p * G).truncated(N);
  }
  return r;
}

L2Series Germ::to_l2(const std::string& inner, const std::string& outer) const {
  std::vector<LSeries> entries;
  for (int j = 0; j < n_; ++j) {
    std::vector<FieldElem> c;
    for (int i = 0; i + j < n_; ++i) c.push_back(at(i, j));
    entries.emplace_back(inner, 0, std::move(c), n_ - j);
  }
  return L2Series(inner, outer, 0, std::move(entries), n_);
}

namespace {

// Division by f' = t^d W + R (W a unit, R of t-degree < d in (u)).
std::pair<Germ, Germ> divide_regular(Germ F, const Germ& W, const Germ& R, int d) {
  const Germ winv = W.inverse();
  Germ q(F.N()), r(F.N());
  for (int it = 0; !F.is_zero() && it < 8 * (F.N() + 1); ++it) {
    auto [B, A] = F.split_t(d);
    const Germ a = A * winv;
    q = q + a;
    r = r + B;
    F = -(a * R);
  }
  // the leftover F lies in m^N, so q is off by m^{N-d} and r by m^N
  return {q.truncated(F.N() - d), r.truncated(F.N())};
}

}  // namespace

WeierstrassGerm weierstrass(const Germ& f) {
  WeierstrassGerm w;
  w.u_order = f.u_order();
  if (w.u_order >= f.N()) throw InsufficientPrecision("germ is zero in its window");
  const Germ fp = f.divided_by_u(w.u_order);
  int d = 0;
  while (d < fp.N() && fp.at(0, d).is_zero()) ++d;
  if (d >= fp.N()) throw InsufficientPrecision("t-order of the germ exceeds its window");
  w.degree = d;
  auto [R, W] = fp.split_t(d);
  Germ td(fp.N());
  td.set(0, d, FieldElem(1));
  auto [q, r] = divide_regular(td, W, R, d);
  w.distinguished = td.truncated(r.N()) - r;
  w.unit = q.inverse();
  return w;
}

std::pair<Germ, Germ> weierstrass_divide(const Germ& f, const Germ& g, int d) {
  auto [R, W] = g.split_t(d);
  return divide_regular(f, W, R, d);
}

Weierstrass weierstrass_prepare(const L2Series& f, Prec2 cap) {
  const int N = std::min(cap.inner, cap.outer);
  const WeierstrassGerm w = weierstrass(Germ::from_l2(f, N));
  Weierstrass r;
  r.unit = w.unit.to_l2(f.inner_var(), f.outer_var());
  r.u_order = w.u_order;
  r.degree = w.degree;
  // the distinguished polynomial has only finitely many t-powers
  const L2Series g = w.distinguished.to_l2(f.inner_var(), f.outer_var());
  std::vector<LSeries> entries;
  for (int j = 0; j < w.degree; ++j) entries.push_back(g.coeff(j));
  entries.push_back(LSeries::constant(f.inner_var(), FieldElem(1)));
  r.distinguished = L2Series(f.inner_var(), f.outer_var(), 0, std::move(entries));
  return r;
}

}  // namespace lf2
