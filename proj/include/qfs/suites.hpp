#pragma once

// Invariant batteries of every module, collected into deterministic JSON reports.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfs/superspace.hpp"

namespace qfs {

struct SuiteParams {
  int p = 3;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double lambda_plus = 1.0;
  /// Random instances per identity where a suite samples (superspace, hopf-ufs).
  int instances = 200;
};

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct SuiteCheck {
  std::string id;
  CheckStatus status = CheckStatus::Skipped;
  long long cases = 0;
  bool has_deviation = false;
  double max_deviation = 0.0;
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  int p = 3;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<SuiteCheck> checks;
  /// Verdicts and diagnostics that are not pass/fail entries.
  nlohmann::json metadata = nlohmann::json::object();

  bool passed() const;
  const SuiteCheck* find(const std::string& id) const;
};

nlohmann::json to_json(const SuiteReport& r);

const std::vector<std::string>& suite_names();

/// Random field plus top-degree and z+ z- components, so that S is nonzero for C1, C2 and id.
SuperField sample_superfield(int p, std::uint64_t seed);

/// Runs one battery. Symbolic suites (hopf-ufs, hopf-afs, pairing, superspace, action) accept p in {3, 5, 7}.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace qfs
