#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lf2/adeles.hpp"

namespace lf2 {

struct VerifyOptions {
  std::uint64_t seed = 1;
  Prec2 prec{8, 8};
  std::optional<Scenario> scenario;  // defaults to the built-in P1xA1
  int threads = 0;                   // 0: hardware concurrency
};

struct CaseResult {
  std::string inputs;
  std::string residual;
  bool pass = false;
  bool insufficient_precision = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool pass = false;
};

// fibre-forms, point-forms, fibre-symbols, point-symbols, thm1-d, thm1-dd, steinberg,
// lemma-l4, lemma-ll, gysin, param-independence, tate-compat, plus morphism and residues.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

std::string to_json(const SuiteReport& r);
std::string to_json(const std::vector<SuiteReport>& rs);

}  // namespace lf2
