#pragma once

#include <initializer_list>
#include <tuple>

#include "lf2/local2d.hpp"

namespace test {

using namespace lf2;

inline FieldElem q(long n, long d = 1) { return FieldElem(Rational(n, d)); }

struct Term1 {
  int e;
  FieldElem c;
};

inline LSeries ls(const std::string& var, std::initializer_list<Term1> terms, int prec = kExact) {
  LSeries r(var, prec);
  for (const auto& t : terms) r += LSeries::monomial(var, t.c, t.e).truncated(prec);
  return r;
}

struct Term2 {
  int i;  // inner exponent
  int j;  // outer exponent
  FieldElem c;
};

inline L2Series l2(std::initializer_list<Term2> terms, int prec = kExact, const std::string& in = "u",
                   const std::string& out = "t") {
  L2Series r(in, out, prec);
  for (const auto& t : terms) r += L2Series::monomial(in, out, t.c, t.i, t.j).truncated_outer(prec);
  return r;
}

}  // namespace test
