#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lf2 {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Q[a]/(m(a)) for a monic m without rational roots.
class Extension {
 public:
  Extension(std::vector<Rational> modulus, std::string generator);

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Rational>& modulus() const { return modulus_; }
  const std::string& generator() const { return generator_; }

 private:
  std::vector<Rational> modulus_;  // low degree first, leading 1
  std::string generator_;
};

using ExtPtr = std::shared_ptr<const Extension>;

ExtPtr make_extension(std::vector<Rational> modulus, std::string generator = "a");
bool same_field(const ExtPtr& a, const ExtPtr& b);

class FieldElem {
 public:
  FieldElem() : c_{Rational(0)} {}
  FieldElem(long v) : c_{Rational(v)} {}
  FieldElem(const Rational& q) : c_{q} {}
  FieldElem(ExtPtr ext, std::vector<Rational> coords);

  static FieldElem generator(const ExtPtr& ext);

  const ExtPtr& ext() const { return ext_; }
  int degree() const { return ext_ ? ext_->degree() : 1; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational() const;

  FieldElem lift_to(const ExtPtr& ext) const;
  FieldElem inverse() const;
  FieldElem pow(long n) const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

 private:
  ExtPtr ext_;
  std::vector<Rational> c_;
};

// Smallest field holding both; throws TowerMismatch for two unrelated extensions.
ExtPtr common_ext(const ExtPtr& a, const ExtPtr& b);

// Trace and norm down to Q. With `over` given, a rational argument is
// regarded as an element of that extension first.
FieldElem ext_trace(const FieldElem& a, const ExtPtr& over = nullptr);
FieldElem ext_norm(const FieldElem& a, const ExtPtr& over = nullptr);

std::string to_string(const FieldElem& a);

}  // namespace lf2
