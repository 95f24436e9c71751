#ifndef PAPERLAB_EXPERIMENTS_HPP
#define PAPERLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace paperlab {

/// Parameters left at -1 fall back to the experiment's documented default;
/// values outside an experiment's feasibility envelope raise
/// FeasibilityRefused with the envelope in the message.
struct ExperimentParams {
  int n = -1;
  int k = -1;
  int trunc = -1;
  int bound = -1;
  std::uint64_t seed = 1;
};

struct ExperimentInfo {
  std::string name;
  int criterion = 0;  // acceptance criterion number; 0 = informational only
  std::string summary;
  std::string claim;             // the paper-side expectation
  std::string expected_verdict;  // "match" or "mismatch"
};

const std::vector<ExperimentInfo>& experiment_catalog();
const ExperimentInfo& experiment_info(const std::string& name);

struct ExperimentReport {
  std::string check;
  nlohmann::json inputs;
  std::string left;
  std::string right;
  std::string verdict;  // "match" | "mismatch" between the two computed sides
  nlohmann::json witness;
  /// Whether the verdict (and any side conditions) agree with the paper's
  /// stated conclusion; this drives the process exit code.
  bool agrees_with_claim = false;
};

ExperimentReport run_experiment(const std::string& name, const ExperimentParams& p);

/// The report in the documented six-key JSON schema
/// { check, inputs, left, right, verdict, witness }.
nlohmann::json report_to_json(const ExperimentReport& r);

}  // namespace paperlab

#endif
