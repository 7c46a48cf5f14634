// Runs one acceptance criterion and prints a single PASS/FAIL line.
//   acceptance --criterion N [--jobs J] [--verbose]

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kwise/extremal.hpp"
#include "kwise/verify/suites.hpp"

namespace {

using kwise::verify::SuiteOptions;
using kwise::verify::SuiteReport;

struct Criterion {
  const char* title;
  const char* suite;
  int n_max;
  std::vector<std::string> verdicts;
  double budget_s;  // 0 = no runtime target
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"Gram recurrence equals Gram-Schmidt, n <= 60", "orthogonality", 60,
       {"gram-oracle-equivalence"}, 120},
      {"leading Gram coefficient identity and n^4 slack, n <= 60", "orthogonality", 60,
       {"leading-coefficient-identity", "leading-coefficient-slack", "leading-coefficient-anchor"}, 0},
      {"minimax hardness/achievability bracket, n <= 24", "hardness", 24,
       {"gram-orthogonality-hardness", "shift-monotonicity", "truncation-vs-optimum",
        "shift-reduction-soundness", "certificate-integrity", "hardness-anchors"}, 0},
      {"symmetrized tests p_w, n <= 30", "symmetrize", 30,
       {"pw-degree", "pw-probability-range", "pw-partition-of-unity", "pw-zero-sets", "cw-closed-form",
        "cw-anchor"}, 300},
      {"argmax_w |C_w| = k/2, even n <= 30", "symmetrize", 30, {"cw-argmax"}, 0},
      {"strong duality lp = 2 eps, n <= 16", "duality", 16, {"strong-duality", "duality-anchor"}, 900},
      {"constant-free lower bound at w = k/2, even n, k <= 20", "sandwich", 20,
       {"lower-bound-constant-free", "sandwich-anchors"}, 0},
      {"TV* <= n^4 B and decomposition, n <= 20", "sandwich", 20,
       {"upper-bound-slack", "upper-bound-decomposition", "tv-range", "sandwich-anchors",
        "alternate-below-enumerate"}, 0},
      {"factorial moments vs subset oracle, n <= 8", "moments", 8, {"moment-characterization"}, 0},
      {"Wallis-type product range, k <= 10^4", "appendix", 10000,
       {"wallis-decreasing", "wallis-range", "wallis-upper-one", "wallis-reciprocal-square"}, 10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int which = 0;
  int jobs = 1;
  bool verbose = false;
  app.add_option("--criterion", which)->required()->check(CLI::Range(1, 10));
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  app.add_flag("--verbose", verbose);
  CLI11_PARSE(app, argc, argv);

  const Criterion& c = criteria()[static_cast<std::size_t>(which - 1)];
  SuiteOptions opt;
  opt.n_max = c.n_max;
  opt.jobs = jobs;
  opt.pairs_per_n = 1000;

  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;
  try {
    report = kwise::verify::run_suite(c.suite, opt).front();
  } catch (const std::exception& e) {
    std::cout << "criterion " << which << ": FAIL  " << c.title << "  (error: " << e.what() << ")\n";
    return 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool ok = true;
  std::vector<std::string> failed;
  for (const auto& id : c.verdicts) {
    const auto* v = report.find(id);
    if (v == nullptr || !v->passed) {
      ok = false;
      failed.push_back(id);
      if (v != nullptr) std::cerr << id << ": " << v->detail.dump() << "\n";
    } else if (verbose) {
      std::cerr << id << ": " << v->detail.dump() << "\n";
    }
  }
  // Criterion 9 requires at least 10^3 pairs per n.
  if (which == 9) {
    const auto* v = report.find("moment-characterization");
    if (v == nullptr || v->detail.value("min_pairs_per_n", 0) < 1000) ok = false;
  }
  const bool in_time = c.budget_s <= 0 || secs <= c.budget_s;
  if (!in_time) failed.push_back("runtime");

  std::cout << "criterion " << which << ": " << (ok && in_time ? "PASS" : "FAIL") << "  " << c.title
            << "  (" << static_cast<long>(secs * 1000) << " ms";
  if (c.budget_s > 0) std::cout << ", budget " << c.budget_s << " s";
  std::cout << ")";
  for (const auto& f : failed) std::cout << " [" << f << "]";
  std::cout << "\n";
  return ok && in_time ? 0 : 1;
}
