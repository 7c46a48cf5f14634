#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kwise/verify/json_io.hpp"

namespace kwise::verify {

using io::Json;

/// One checked property. Non-gating verdicts are recorded observations
/// that do not affect the suite outcome.
struct Verdict {
  std::string id;
  std::string description;
  bool passed = false;
  bool gating = true;
  Json detail = Json::object();
};

struct SuiteReport {
  std::string suite;
  Json params = Json::object();
  Json rows = Json::array();
  std::vector<Verdict> verdicts;

  bool passed() const;
  const Verdict* find(const std::string& id) const;
  Json verdicts_json() const;
};

struct SuiteOptions {
  /// Sweep bound: n for most suites, k for `appendix`.
  int n_max = 12;
  int jobs = 1;
  /// Gram-Schmidt comparison degree cap.
  int deg_cap = 30;
  /// Random pairs per n for `moments`.
  int pairs_per_n = 1000;
  std::uint64_t seed = 20240611;
  /// Slack exponent cap for the upper bound.
  int slack_cap = 4;
};

/// Gram oracle equivalence, orthogonality, leading-coefficient identity and
/// its polynomial-slack sandwich.
SuiteReport run_orthogonality(const SuiteOptions& opt);
/// Minimax hardness/achievability bracket for monomials.
SuiteReport run_hardness(const SuiteOptions& opt);
/// Symmetrized tests: degree, range, partition of unity, zero sets, closed
/// form of the leading coefficient, and its argmax.
SuiteReport run_symmetrize(const SuiteOptions& opt);
/// LP strong duality between pair advantage and minimax error.
SuiteReport run_duality(const SuiteOptions& opt);
/// Upper/lower bound comparison with measured slack.
SuiteReport run_sandwich(const SuiteOptions& opt);
/// Factorial-moment indistinguishability test vs. the subset oracle.
SuiteReport run_moments(const SuiteOptions& opt);
/// Range of the Wallis-type product for k <= n_max.
SuiteReport run_appendix(const SuiteOptions& opt);

std::vector<std::string> suite_names();
/// Runs one named suite, or every suite for "all". Throws DomainError for
/// unknown names.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace kwise::verify
