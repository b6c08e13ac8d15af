#pragma once

// Batch verification suites behind `tcalg check`. Every suite only drives the
// module verifiers over an enumerated or seeded family of inputs and tallies
// the outcomes per identity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcalg/check.hpp"
#include "tcalg/confalg.hpp"
#include "tcalg/operad.hpp"

namespace tcalg::cli {

struct SuiteOptions {
  std::size_t n = 1;
  std::size_t N = 1;
  BackendKind backend = BackendKind::CendWeyl;
  Variety variety = Variety::Free;
  /// rational, matrix, weyl, laurent or all.
  std::string ring = "all";
  std::uint64_t seed = 1;
  /// Overrides the suite's default enumeration degree.
  std::optional<std::uint64_t> degree_bound;
  /// Overrides the suite's default sample count.
  std::optional<std::size_t> samples;
};

/// Outcome of one identity over all tested cases; the certificate belongs to
/// the first failing case.
struct CheckSummary {
  std::string identity;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string certificate;
};

/// Collects CheckResults into per-identity summaries, in first-seen order.
class Tally {
 public:
  void add(const CheckResult& r);
  void add(const std::string& identity, bool passed, const std::string& certificate = "");
  void add_all(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) add(r);
  }
  const std::vector<CheckSummary>& summaries() const { return out_; }

 private:
  std::vector<CheckSummary> out_;
};

bool all_passed(const std::vector<CheckSummary>& s);

/// hopf, weyl, eval, C, H, locality, residue, A, poisson, tc-witness,
/// reconstruct.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or options the suite
/// cannot honour.
std::vector<CheckSummary> run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace tcalg::cli
