#pragma once

#include <string>
#include <vector>

#include "lf2/extend.hpp"
#include "lf2/local2d.hpp"

namespace lf2 {

// The local field K_{x,C} of a flag x in C on a surface fibred over a curve with
// parameter tau, together with the finite extension over K_s = k((tau)) through
// which residues and symbols are pushed down.
//   transverse (C != F): K_{x,C} = k'((s))((t_C)), inner s along C, outer t_C;
//                        ext is k'((s)) / k((tau)) with tau = s^e.
//   fibre (C = F):       K_{x,F} = k'((w))((t)), inner w along the fibre, outer t = tau;
//                        ext is k'((t)) / k((t)).
struct FlagContext {
  enum class Kind { Transverse, Fibre };
  Kind kind;
  std::string inner;
  std::string outer;
  LocalExt ext;
  L2Series tau;  // f^*(tau) as an element of K_{x,C}

  // tau defaults to inner^e; a caller with a curve not of the form tau = s^e + O(t_C) passes its own
  static FlagContext transverse(std::string inner, std::string outer, std::string base, int e = 1,
                                ExtPtr residue = nullptr);
  static FlagContext transverse(std::string inner, std::string outer, std::string base, int e, ExtPtr residue,
                                L2Series tau);
  static FlagContext fibre(std::string inner, std::string outer, std::string base, ExtPtr residue = nullptr);

  const std::string& base_var() const { return ext.base_var(); }
};

// f^*(xi) in K_{x,C}
L2Series embed(const FlagContext& ctx, const LSeries& xi, Prec2 cap);

// f_*^{x,C}: trace of res_{t_C} (transverse) or of res_w (fibre), over K_s.
Form1 di_form(const FlagContext& ctx, const Form2& w);

// Fibre symbol (phi, psi)_{f,F} in k'((t)) from the generator table.
LSeries table_pairing(const L2Series& phi, const L2Series& psi, Prec2 cap);

// Norm down to K_s of the tame symbol (transverse) or the table pairing (fibre).
LSeries di_symbol(const FlagContext& ctx, const L2Series& phi, const L2Series& psi, Prec2 cap);

// Branches of a singular curve: sum of forms, product of symbols.
struct Branch {
  FlagContext ctx;
  Form2 w;
};
Form1 di_form(const std::vector<Branch>& branches);

struct SymbolBranch {
  FlagContext ctx;
  L2Series phi, psi;
};
LSeries di_symbol(const std::vector<SymbolBranch>& branches, Prec2 cap);

}  // namespace lf2
