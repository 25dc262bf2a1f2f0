#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sweeplab/stats.hpp"

namespace sweeplab {

struct CampaignConfig {
  std::string suite;  // "bijectivity", "equivalence:<map>", "conjecture:<name>", "inversion:<method>",
                      // "control:wrong-order" (expected to fail)
  std::int64_t rmax = 3;
  std::int64_t smax = 3;
  std::int64_t sizemax = 8;
  std::int64_t kmax = 2;
  std::int64_t mmax = 2;
  std::int64_t wmax = 2;  // letter weights in [-wmax, wmax] for 3-letter sweeps
  std::uint64_t budget = 10'000'000;
  std::uint64_t samples = 0;  // 0 = exhaustive; otherwise random domain elements per point
  std::uint64_t seed = 1;
  unsigned parallelism = 1;
  std::string format = "json";
  ParamList point;  // run only the point with these parameters
};

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct ReportEntry {
  ParamList params;
  PointStatus status = PointStatus::kPass;
  std::uint64_t checked = 0;
  Counterexample counterexample;  // set when status is kFail
  std::string replay;             // CLI command reproducing the failure
  std::string note;
};

struct VerificationReport {
  std::string campaign;
  CampaignConfig config;
  std::vector<ReportEntry> entries;
  double wall_seconds = 0;

  std::size_t count(PointStatus s) const;
  std::uint64_t checked() const;
  bool passed() const { return count(PointStatus::kFail) == 0; }
};

// Every suite name accepted by run_campaign.
std::vector<std::string> suite_names();

using ProgressFn = std::function<void(std::size_t done, std::size_t total, const ReportEntry&)>;

// Runs every parameter point of the suite. Points are distributed over
// `parallelism` workers and stored by point index, so the entries do not
// depend on scheduling. Throws ParseError for unknown suites.
VerificationReport run_campaign(const CampaignConfig& config, const ProgressFn& progress = {});

// Serializations. Wall time is only written when `timing` is set so that
// repeated runs produce identical bytes.
std::string report_json(const VerificationReport& report, bool timing = false);
std::string report_csv(const VerificationReport& report);
std::string report_text(const VerificationReport& report, bool timing = false);

std::string format_params(const ParamList& params, char sep = ',');

}  // namespace sweeplab
