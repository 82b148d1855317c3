#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdx/json_out.hpp"

namespace rdx {

// One verified claim: an exhaustive or randomized sweep with a pass/fail
// verdict. A failing claim always carries machine-readable counterexamples
// (graph edge lists plus the observed values) sufficient to replay offline.
struct ClaimResult {
  std::string suite;
  std::string claim;
  int max_n = 0;      // sweep cap actually used (0 when not n-parameterized)
  long instances = 0; // objects checked
  long failures = 0;
  double seconds = 0.0;
  std::vector<Json> counterexamples;  // capped at 8, deterministic order
  std::vector<std::string> notes;     // frozen discrepancies, scope remarks
};

struct VerifyOptions {
  int jobs = 1;          // worker threads for the big tree sweeps
  std::uint64_t seed = 0;
  int max_n = 0;         // 0 = per-claim default; otherwise clamped per claim
  long samples = 0;      // 0 = per-claim default for randomized claims
};

// Suites: oracle, lemmas, theorem-main, classes, extremal, cea, minedge,
// mincycle; "all" runs every suite in that order.
std::vector<std::string> verify_suite_names();
bool is_verify_suite(const std::string& name);
std::vector<ClaimResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt);

Json claim_json(const ClaimResult& r);
// CSV columns: suite,claim,n,instances,failures,seconds
std::string claim_csv_header();
std::string claim_csv_row(const ClaimResult& r);

}  // namespace rdx
