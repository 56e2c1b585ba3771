#pragma once

#include <string>

#include "lf2/laurent.hpp"

namespace lf2 {

// L = k'((top)) over K = k((base)) with base = top^e; k' = Q or a simple extension.
class LocalExt {
 public:
  LocalExt(std::string base_var, std::string top_var, int e = 1, ExtPtr residue = nullptr);

  int e() const { return e_; }
  const ExtPtr& residue() const { return residue_; }
  int residue_degree() const { return residue_ ? residue_->degree() : 1; }
  int degree() const { return e_ * residue_degree(); }
  const std::string& base_var() const { return base_; }
  const std::string& top_var() const { return top_; }

  LSeries embed(const LSeries& f) const;
  FieldElem norm(const FieldElem& c) const { return ext_norm(c, residue_); }
  LSeries norm(const LSeries& a) const;
  LSeries trace(const LSeries& a) const;
  // Tr(h d top) = Tr(h top^{1-e} / e) d base
  Form1 trace(const Form1& w) const;

 private:
  std::string base_, top_;
  int e_;
  ExtPtr residue_;
};

}  // namespace lf2
