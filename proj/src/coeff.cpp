#include "lf2/coeff.hpp"

#include <algorithm>
#include <sstream>

#include "lf2/errors.hpp"

namespace lf2 {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Remainder and quotient of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

bool has_rational_root(const Poly& m) {
  mpz_class den = 1;
  for (const auto& c : m) den = lcm(den, c.get_den());
  std::vector<mpz_class> z;
  for (const auto& c : m) z.push_back(mpz_class(c * den));
  if (z.front() == 0) return true;
  for (const auto& p : divisors(z.front()))
    for (const auto& q : divisors(z.back()))
      for (int s : {1, -1}) {
        Rational x(s * p, q);
        Rational acc = 0;
        for (size_t i = m.size(); i-- > 0;) acc = acc * x + m[i];
        if (acc == 0) return true;
      }
  return false;
}

Rational det(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Columns are the coordinates of a * gen^j.
std::vector<std::vector<Rational>> regular_matrix(const FieldElem& a) {
  const int d = a.degree();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  FieldElem x = a;
  FieldElem g = a.ext() ? FieldElem::generator(a.ext()) : FieldElem(1);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = x.coords()[i];
    x *= g;
  }
  return m;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InvalidArgument("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Extension::Extension(std::vector<Rational> modulus, std::string generator)
    : modulus_(std::move(modulus)), generator_(std::move(generator)) {}

ExtPtr make_extension(std::vector<Rational> modulus, std::string generator) {
  trim(modulus);
  if (modulus.size() < 2) throw InvalidArgument("extension modulus must have degree >= 1");
  if (modulus.back() != 1) throw InvalidArgument("extension modulus must be monic");
  if (modulus.size() > 2 && has_rational_root(modulus))
    throw InvalidArgument("extension modulus has a rational root");
  return std::make_shared<const Extension>(std::move(modulus), std::move(generator));
}

bool same_field(const ExtPtr& a, const ExtPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->modulus() == b->modulus();
}

ExtPtr common_ext(const ExtPtr& a, const ExtPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (same_field(a, b)) return a;
  throw TowerMismatch("elements live in different extensions");
}

FieldElem::FieldElem(ExtPtr ext, std::vector<Rational> coords) : ext_(std::move(ext)), c_(std::move(coords)) {
  const size_t d = static_cast<size_t>(degree());
  if (!ext_ && c_.size() > 1) throw InvalidArgument("coordinates given without an extension");
  if (c_.size() > d) {
    Poly r = poly_divmod(c_, ext_->modulus()).second;
    c_ = std::move(r);
  }
  c_.resize(d, Rational(0));
}

FieldElem FieldElem::generator(const ExtPtr& ext) {
  std::vector<Rational> c(ext->degree(), Rational(0));
  if (ext->degree() == 1)
    c[0] = -ext->modulus()[0];
  else
    c[1] = 1;
  return FieldElem(ext, std::move(c));
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElem::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElem::is_one() const { return is_rational() && c_[0] == 1; }

Rational FieldElem::rational() const {
  if (!is_rational()) throw InvalidArgument("element is not rational: " + to_string(*this));
  return c_[0];
}

FieldElem FieldElem::lift_to(const ExtPtr& ext) const {
  ExtPtr e = common_ext(ext_, ext);
  if (e == ext_ || !e) return *this;
  std::vector<Rational> c(e->degree(), Rational(0));
  c[0] = c_[0];
  return FieldElem(e, std::move(c));
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (ext_ != o.ext_) {
    ExtPtr e = common_ext(ext_, o.ext_);
    *this = lift_to(e);
    FieldElem b = o.lift_to(e);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  ExtPtr e = common_ext(ext_, o.ext_);
  if (!e) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.ext_ == nullptr || o.is_rational()) {
    Rational f = o.c_[0];
    *this = lift_to(e);
    for (auto& q : c_) q *= f;
    return *this;
  }
  FieldElem a = lift_to(e);
  FieldElem b = o.lift_to(e);
  Poly p = poly_mul(a.c_, b.c_);
  *this = FieldElem(e, poly_divmod(p, e->modulus()).second);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (!ext_ || is_rational()) {
    FieldElem r = *this;
    r.c_[0] = 1 / c_[0];
    for (size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = 0;
    return r;
  }
  // extended Euclid: s * a + t * m = g
  Poly r0 = ext_->modulus(), r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw DivisionByZero("element is a zero divisor modulo the extension");
  for (auto& q : s0) q /= r0[0];
  return FieldElem(ext_, s0);
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElem r = FieldElem(1).lift_to(ext_), b = *this;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.ext_ == b.ext_) return a.c_ == b.c_;
  ExtPtr e = common_ext(a.ext_, b.ext_);
  return a.lift_to(e).c_ == b.lift_to(e).c_;
}

FieldElem ext_trace(const FieldElem& a, const ExtPtr& over) {
  FieldElem x = a.lift_to(over);
  auto m = regular_matrix(x);
  Rational t = 0;
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return FieldElem(t);
}

FieldElem ext_norm(const FieldElem& a, const ExtPtr& over) {
  FieldElem x = a.lift_to(over);
  return FieldElem(det(regular_matrix(x)));
}

std::string to_string(const FieldElem& a) {
  if (a.is_rational()) return to_string(a.coords()[0]);
  std::ostringstream os;
  os << '(';
  bool first = true;
  const std::string& g = a.ext()->generator();
  for (size_t i = 0; i < a.coords().size(); ++i) {
    const Rational& q = a.coords()[i];
    if (q == 0) continue;
    std::string mag = to_string(abs(q));
    if (!first) os << (q < 0 ? " - " : " + ");
    else if (q < 0) os << '-';
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (abs(q) != 1) os << mag << '*';
    os << g;
    if (i > 1) os << '^' << i;
  }
  os << ')';
  return os.str();
}

}  // namespace lf2
