// Acceptance criteria 1-11. Every suite runs through the command driver with
// --json so that criterion 11 can also validate each emitted report and exit
// code. Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "golden.hpp"
#include "schema_validator.hpp"
#include "tcalg/cli/commands.hpp"
#include "tcalg/cli/interpreter.hpp"
#include "tcalg/cli/parser.hpp"

using tcalg::cli::format;
using tcalg::cli::format_value;
using tcalg::cli::parse;
namespace tt = tcalg::testing;

namespace {

struct Invocation {
  std::vector<std::string> args;
  int code;
  std::string out;
  std::string err;
};

std::vector<Invocation> g_invocations;

std::string joined(const std::vector<std::string>& args) {
  std::string s = "tcalg";
  for (const auto& a : args) s += " " + a;
  return s;
}

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tcalg::cli::run(args, out, err);
  g_invocations.push_back({args, code, out.str(), err.str()});
  return g_invocations.back();
}

/// Runs `check <suite> <flags> --json`; the run passes when the exit code is
/// 0, the report says passed, and every identity was exercised.
struct Criterion {
  std::vector<std::string> failures;
  std::uint64_t cases = 0;

  void check_suite(const std::string& suite, std::vector<std::string> flags, std::uint64_t min_cases = 1) {
    std::vector<std::string> args{"check", suite};
    args.insert(args.end(), flags.begin(), flags.end());
    args.push_back("--json");
    Invocation r = invoke(args);
    std::string what = joined(args);
    if (r.code != 0) failures.push_back(what + ": exit code " + std::to_string(r.code) + " " + r.err);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(r.out);
    } catch (const std::exception& e) {
      failures.push_back(what + ": unparsable report");
      return;
    }
    if (j["passed"] != true) failures.push_back(what + ": report not passed");
    std::uint64_t total = 0;
    for (const auto& c : j["checks"]) {
      total += c["cases"].get<std::uint64_t>();
      if (c["passed"] != true)
        failures.push_back(what + ": FAIL " + c["identity"].get<std::string>() + ": " +
                           c["certificate"].get<std::string>());
      if (c["cases"] == 0) failures.push_back(what + ": no cases for " + c["identity"].get<std::string>());
    }
    if (j["checks"].empty()) failures.push_back(what + ": no identities checked");
    if (total < min_cases)
      failures.push_back(what + ": " + std::to_string(total) + " cases, expected at least " + std::to_string(min_cases));
    cases += total;
  }

  void require_identity(const std::string& suite_output_marker, bool present) {
    if (!present) failures.push_back("missing identity: " + suite_output_marker);
  }
};

bool report_has_identity(const Invocation& r, const std::string& prefix) {
  auto j = nlohmann::json::parse(r.out, nullptr, false);
  if (j.is_discarded()) return false;
  for (const auto& c : j["checks"])
    if (c["identity"].get<std::string>().rfind(prefix, 0) == 0) return true;
  return false;
}

using CriterionFn = std::function<Criterion()>;

Criterion weyl_oracle() {
  Criterion c;
  for (const char* n : {"1", "2"})
    for (const char* N : {"1", "2"}) c.check_suite("weyl", {"--n", n, "--N", N, "--degree-bound", "3"});
  // 100 + 1600 + 1225 + 19600 monomial pairs over the four configurations.
  if (c.cases < 10000) c.failures.push_back("only " + std::to_string(c.cases) + " monomial pairs");
  return c;
}

Criterion hopf_suite() {
  Criterion c;
  for (const char* n : {"1", "2", "3"}) {
    c.check_suite("hopf", {"--n", n, "--degree-bound", "5"});
    const Invocation& r = g_invocations.back();
    for (const char* id : {"(Delta (x) id) Delta", "tau Delta", "(eps (x) id) Delta", "S(f_(1)) f_(2)",
                           "<x y, f>", "Phi Phi^-1"})
      c.require_identity(id, report_has_identity(r, id));
  }
  return c;
}

Criterion evaluation_identity() {
  Criterion c;
  c.check_suite("eval", {"--backend", "cend", "--n", "1", "--N", "1", "--samples", "200"}, 200);
  c.check_suite("eval", {"--backend", "cend", "--n", "1", "--N", "2", "--samples", "200"}, 200);
  for (const char* n : {"1", "2"})
    for (const char* N : {"1", "2"}) c.check_suite("eval", {"--backend", "cur", "--n", n, "--N", N, "--samples", "200"}, 200);
  return c;
}

Criterion conformal_axioms() {
  Criterion c;
  for (const char* N : {"1", "2"}) {
    c.check_suite("C", {"--backend", "cend", "--n", "1", "--N", N, "--degree-bound", "2"});
    c.check_suite("H", {"--backend", "cend", "--n", "1", "--N", N, "--degree-bound", "2"});
    const Invocation& r = g_invocations.back();
    c.require_identity("(H0)", report_has_identity(r, "(s a + t a')_(f) b"));
    c.require_identity("(H2) left", report_has_identity(r, "(h a)_(x) b"));
    c.require_identity("(H2) right", report_has_identity(r, "a_(x) (h b)"));
  }
  return c;
}

Criterion locality() {
  Criterion c;
  c.check_suite("locality", {"--backend", "cend", "--n", "1", "--N", "2"});
  const Invocation& r = g_invocations.back();
  c.require_identity("current algebra table", report_has_identity(r, "a[E_ij]_(t^l) a[E_kl]"));
  c.require_identity("probe past the bound", report_has_identity(r, "a_(x) b = 0 one degree past the bound"));
  c.check_suite("locality", {"--backend", "cur", "--n", "2", "--N", "2"});
  return c;
}

Criterion residue() {
  Criterion c;
  c.check_suite("residue", {"--ring", "all", "--samples", "200"}, 4 * 200);
  const Invocation& r = g_invocations.back();
  for (const char* ring : {"rational", "matrix", "weyl", "laurent"})
    c.require_identity(std::string(ring) + " ring", report_has_identity(r, std::string(ring) + ": "));
  return c;
}

Criterion operad() {
  Criterion c;
  for (const char* v : {"free", "assoc"}) {
    c.check_suite("A", {"--variety", v, "--degree-bound", "4"});
    const Invocation& r = g_invocations.back();
    c.require_identity("dimension enumeration", report_has_identity(r, "dim C(n) by enumeration"));
  }
  return c;
}

Criterion lie() {
  Criterion c;
  c.check_suite("poisson", {"--n", "2", "--degree-bound", "3", "--samples", "100"});
  c.check_suite("poisson", {"--n", "4", "--degree-bound", "3", "--samples", "100"});
  return c;
}

Criterion tc_witness() {
  Criterion c;
  c.check_suite("tc-witness", {"--backend", "cend", "--n", "2", "--N", "2", "--degree-bound", "3"});
  return c;
}

Criterion reconstruct() {
  Criterion c;
  c.check_suite("reconstruct", {"--backend", "cend", "--n", "1", "--N", "2", "--samples", "100"}, 100);
  c.check_suite("reconstruct", {"--backend", "cend", "--n", "2", "--N", "2", "--samples", "100"}, 100);
  c.check_suite("reconstruct", {"--backend", "cur", "--n", "1", "--N", "2", "--samples", "100"}, 100);
  c.check_suite("reconstruct", {"--backend", "cur", "--n", "2", "--N", "2", "--samples", "100"}, 100);
  return c;
}

Criterion cli() {
  Criterion c;
  auto corpus = tt::load_golden(TCALG_SOURCE_DIR "/tests/golden");
  if (corpus.size() != 20) c.failures.push_back("golden corpus has " + std::to_string(corpus.size()) + " files");
  for (const auto& g : corpus) {
    try {
      tcalg::cli::Session s = tt::session_from_flags(g.flags);
      auto in = parse(g.input, s), out = parse(g.output, s);
      if (!(parse(format(in), s) == in) || !(parse(format(out), s) == out))
        c.failures.push_back(g.name + ": parse(format(e)) != e");
      std::string value = format_value(tcalg::cli::evaluate(in, s), s);
      if (value != g.output) c.failures.push_back(g.name + ": evaluates to '" + value + "'");
      std::string again = format_value(tcalg::cli::evaluate(out, s), s);
      if (again != g.output) c.failures.push_back(g.name + ": output re-evaluates to '" + again + "'");
    } catch (const std::exception& e) {
      c.failures.push_back(g.name + ": " + e.what());
    }
    std::vector<std::string> args = g.flags;
    args.insert(args.end(), {"simplify", "--", g.input});
    Invocation text = invoke(args);
    if (text.code != 0 || text.out != g.output + "\n")
      c.failures.push_back(g.name + ": CLI printed '" + text.out + "' with exit code " + std::to_string(text.code));
    args.insert(args.begin(), "--json");
    Invocation json = invoke(args);
    if (json.code != 0) c.failures.push_back(g.name + ": --json exit code " + std::to_string(json.code));
  }

  std::ifstream schema_file(TCALG_SOURCE_DIR "/schema/report.schema.json");
  tt::SchemaValidator validator(nlohmann::json::parse(schema_file));
  std::size_t checks = 0, reports = 0;
  for (const auto& r : g_invocations) {
    if (!r.args.empty() && r.args[0] == "check") {
      ++checks;
      if (r.code != 0) c.failures.push_back(joined(r.args) + ": exit code " + std::to_string(r.code));
    }
    if (std::find(r.args.begin(), r.args.end(), "--json") == r.args.end()) continue;
    ++reports;
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    if (j.is_discarded()) {
      c.failures.push_back(joined(r.args) + ": output is not JSON");
      continue;
    }
    auto errors = validator.validate(j);
    if (!errors.empty()) c.failures.push_back(joined(r.args) + ": schema: " + errors.front());
  }
  if (checks == 0) c.failures.push_back("no check commands were run before the CLI criterion");
  // The validator must reject a broken report, or the schema check is vacuous.
  auto broken = nlohmann::json::parse(g_invocations.back().out, nullptr, false);
  if (broken.is_discarded() || !broken["result"].is_object()) {
    c.failures.push_back("last golden report has no result object");
  } else {
    broken["result"].erase("text");
    if (validator.validate(broken).empty()) c.failures.push_back("schema accepts a report without result text");
  }
  c.cases = corpus.size() + checks + reports;
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, CriterionFn>> criteria{
      {"1 weyl oracle equivalence", weyl_oracle},
      {"2 hopf suite", hopf_suite},
      {"3 evaluation identity", evaluation_identity},
      {"4 conformal axioms C2 C3 H0 H2", conformal_axioms},
      {"5 locality", locality},
      {"6 residue suite", residue},
      {"7 operad suite", operad},
      {"8 lie suite", lie},
      {"9 tc-witness", tc_witness},
      {"10 reconstruct after eval", reconstruct},
      {"11 cli golden corpus, exit codes, schema", cli},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS " : "FAIL ") << "criterion " << name << " (" << c.cases << " cases, " << std::fixed
              << std::setprecision(1) << secs << " s)\n";
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "    " << c.failures[i] << "\n";
    if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
