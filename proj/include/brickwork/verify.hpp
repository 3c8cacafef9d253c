#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brickwork {

// One named check inside a verification suite. `criterion` tags the check
// with the acceptance-criterion number it backs (1..9); 0 marks supporting
// diagnostics that gate nothing.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string measured;  // values, tolerances, counts
  double seconds = 0.0;
  int criterion = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int workers = 0;  // 0 = available parallelism
};

int resolved_workers(int requested);

// Exact character-table identities (criterion 1).
SuiteReport verify_characters(const VerifyOptions& options = {});
// Character-sum counts against brute-force enumeration (criteria 2 and 3).
SuiteReport verify_hurwitz_vs_oracle(const VerifyOptions& options = {});
// Closed forms, exact unitarity sums, sampled monomials (criterion 4).
SuiteReport verify_weingarten(const VerifyOptions& options = {});
// Split formula for s_lambda(U A U* B) against sampling (criterion 5).
SuiteReport verify_prop1_mc(const VerifyOptions& options = {});
// Gaussian Schur averages: closed form, rejected variants, MC (criterion 6).
SuiteReport verify_gaussian_schur(const VerifyOptions& options = {});
// Coefficient-form agreement and normalization calibration (criterion 7).
SuiteReport verify_series_calibration(const VerifyOptions& options = {});
// Normal-matrix model: brick-profile form vs brute force, sampler checks
// (criterion 8).
SuiteReport verify_normal_model(const VerifyOptions& options = {});
// Bit-identical reruns of every sampled estimator (criterion 9).
SuiteReport verify_reproducibility(const VerifyOptions& options = {});

const std::vector<std::string>& verify_suite_names();
// Dispatch by suite name; throws validation_error on an unknown name.
SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace brickwork
