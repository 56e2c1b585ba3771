#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lf2/adeles.hpp"
#include "lf2/errors.hpp"
#include "lf2/verify.hpp"

using namespace lf2;

namespace {

Prec2 parse_prec(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      const int p = std::stoi(s);
      return {p, p};
    }
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidArgument("bad --prec '" + s + "', expected Pu,Pt");
  }
}

Scenario load_scenario(const std::string& path) {
  if (path.empty()) return Scenario::builtin("P1xA1");
  if (path == "P1xA1" || path == "P1xP1") return Scenario::builtin(path);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Scenario::from_json(ss.str());
}

L2Series local_series(const std::string& text, Prec2 P) { return parse_l2series(text, "u", "t", P); }

void print_suite(const SuiteReport& r) {
  int passed = 0;
  bool precision = false;
  for (const auto& c : r.cases) {
    passed += c.pass;
    precision = precision || c.insufficient_precision;
    if (!c.pass) std::cout << "  FAIL " << c.inputs << "\n       " << c.residual << "\n";
  }
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << " (" << passed << "/" << r.cases.size() << " cases)\n";
  if (precision) std::cerr << "InsufficientPrecision in suite " << r.suite << "; try a larger --prec\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in two-dimensional local fields"};
  app.require_subcommand(1);
  std::string prec_text = "8,8", scenario_path;
  app.add_option("--scenario", scenario_path, "scenario JSON file, or P1xA1 / P1xP1");

  auto* expand = app.add_subcommand("expand", "expand a function at a flag");
  std::string func, flag;
  expand->add_option("--func", func, "function of u, t")->required();
  expand->add_option("--flag", flag, "flag x@C")->required();
  expand->add_option("--prec", prec_text, "Pu,Pt");

  auto* res = app.add_subcommand("res", "residues of a 2-form in k((u))((t))");
  std::string kind, form;
  res->add_option("--kind", kind, "inner | outer | total")->required()->check(CLI::IsMember({"inner", "outer", "total"}));
  res->add_option("--form", form, "g du^dt (a bare g means g du^dt)")->required();
  res->add_option("--prec", prec_text, "Pu,Pt");
  res->add_option("--flag", flag, "expand a global form at this flag first");

  auto* symbol = app.add_subcommand("symbol", "symbols of elements of k((u))((t))");
  std::vector<std::string> args;
  symbol->add_option("--kind", kind, "tame | triple | table | pushforward")
      ->required()
      ->check(CLI::IsMember({"tame", "triple", "table", "pushforward"}));
  symbol->add_option("--args", args, "comma separated elements")->required()->delimiter(',');
  symbol->add_option("--prec", prec_text, "Pu,Pt");
  symbol->add_option("--flag", flag, "pushforward: global functions at this flag");

  auto* push = app.add_subcommand("pushforward", "direct image of a global 2-form at a flag");
  push->add_option("--form", form, "g du^dt (a bare g means g du^dt)")->required();
  push->add_option("--flag", flag, "flag x@C")->required();
  push->add_option("--prec", prec_text, "Pu,Pt");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t seed = 1;
  std::string json_path;
  int threads = 0;
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--prec", prec_text, "Pu,Pt");
  verify->add_option("--json", json_path, "also write the JSON report here");
  verify->add_option("--threads", threads, "worker threads (0: all cores)");

  auto* report = app.add_subcommand("report", "run every suite and write a JSON report");
  report->add_option("--json", json_path, "output path")->required();
  report->add_option("--seed", seed, "random seed");
  report->add_option("--prec", prec_text, "Pu,Pt");
  report->add_option("--threads", threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Prec2 P = parse_prec(prec_text);
    if (P.inner < 1 || P.outer < 1) throw InvalidArgument("--prec must be positive");
    if (*expand) {
      const Scenario sc = load_scenario(scenario_path);
      std::cout << to_string(expand_at(sc, parse_expr(func), parse_flag(flag), P)) << "\n";
      return 0;
    }
    if (*res) {
      const FormExpr fe = parse_form(form);
      if (fe.degree == 1) throw InvalidArgument("--form needs a 2-form 'g du^dt'");
      Form2 w;
      if (!flag.empty())
        w = expand_form_at(load_scenario(scenario_path), fe.coeff, parse_flag(flag), P);
      else
        w = Form2{evaluate(fe.coeff, "u", "t", {}, P)};
      if (kind == "total") std::cout << to_string(res_total(w)) << "\n";
      if (kind == "inner") std::cout << to_string(res_inner(w)) << "\n";
      if (kind == "outer") std::cout << to_string(res_outer(w)) << "\n";
      return 0;
    }
    if (*symbol) {
      const std::size_t want = kind == "triple" ? 3 : 2;
      if (args.size() != want)
        throw InvalidArgument("--kind " + kind + " takes " + std::to_string(want) + " arguments");
      if (kind == "pushforward" && !flag.empty()) {
        const Scenario sc = load_scenario(scenario_path);
        const Flag f = parse_flag(flag);
        const LocalFlag lf = local_flag(sc, f, P);
        std::cout << to_string(di_symbol(lf.ctx, expand_at(sc, parse_expr(args[0]), f, P),
                                         expand_at(sc, parse_expr(args[1]), f, P), P))
                  << "\n";
        return 0;
      }
      std::vector<L2Series> xs;
      for (const auto& a : args) xs.push_back(local_series(a, P));
      if (kind == "tame") std::cout << to_string(tame_symbol(xs[0], xs[1], P.inner)) << "\n";
      if (kind == "triple") std::cout << to_string(triple_symbol(xs[0], xs[1], xs[2], P.inner)) << "\n";
      if (kind == "table") std::cout << to_string(table_pairing(xs[0], xs[1], P)) << "\n";
      if (kind == "pushforward")
        std::cout << to_string(di_symbol(FlagContext::fibre("u", "t", "t"), xs[0], xs[1], P)) << "\n";
      return 0;
    }
    if (*push) {
      const Scenario sc = load_scenario(scenario_path);
      const FormExpr fe = parse_form(form);
      if (fe.degree == 1) throw InvalidArgument("--form needs a 2-form 'g du^dt'");
      const Flag f = parse_flag(flag);
      std::cout << to_string(di_form(local_flag(sc, f, P).ctx, expand_form_at(sc, fe.coeff, f, P))) << "\n";
      return 0;
    }
    if (*verify || *report) {
      VerifyOptions opt;
      opt.seed = seed;
      opt.prec = P;
      opt.threads = threads;
      if (!scenario_path.empty()) opt.scenario = load_scenario(scenario_path);
      std::vector<std::string> names;
      if (*report || suite == "all")
        names = suite_names();
      else
        names = {suite};
      for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
          throw InvalidArgument("unknown suite '" + n + "'");
      std::vector<SuiteReport> reports;
      bool ok = true;
      for (const auto& n : names) {
        reports.push_back(run_suite(n, opt));
        print_suite(reports.back());
        ok = ok && reports.back().pass;
      }
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw InvalidArgument("cannot write " + json_path);
        out << (reports.size() == 1 ? to_json(reports.front()) : to_json(reports)) << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const InsufficientPrecision& e) {
    std::cerr << "InsufficientPrecision: " << e.what() << "; try a larger --prec\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
