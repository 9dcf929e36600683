#pragma once

// Verification suites over a grid of keys and the JSON report they produce.

#include "reflekt/group.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace reflekt {

inline constexpr const char* kReportSchema = "reflekt-report/1";
inline constexpr const char* kToolVersion = "0.3.0";

enum class CheckStatus { Pass, Fail, Skipped };
const char* status_name(CheckStatus s) noexcept;

struct CheckResult {
  GroupKey key;
  std::string name;   // unique per key, "suite.check"
  std::string claim;  // what is being verified, as a short tag
  CheckStatus status = CheckStatus::Pass;
  std::string reason;  // set for skipped and failed checks
  nlohmann::json details = nlohmann::json::object();
  std::optional<double> elapsed_ms;
};

struct SuiteOptions {
  std::uint64_t budget = kDefaultBudget;
  bool timing = false;
  /// Restrict to these check names (empty = all).
  std::set<std::string> only;
};

struct VerificationReport {
  std::vector<GroupKey> grid;
  std::vector<std::string> suites;
  SuiteOptions options;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
  nlohmann::json to_json() const;
  std::string table() const;
};

const std::vector<std::string>& all_suites();

/// Throws ErrorCode::Usage for unknown suite names.
VerificationReport run_suite(const std::vector<GroupKey>& grid, const std::vector<std::string>& suites,
                             const SuiteOptions& options = {});

/// r <= 6, p | r, n <= 3 plus (4,2,4), (2,2,4), (1,1,6), (8,2,3).
std::vector<GroupKey> default_grid();
/// "r<=R,p|r,n<=N" optionally followed by ";r,p,n;..." extra keys, or a
/// plain list "r,p,n;r,p,n". Throws ErrorCode::Usage.
std::vector<GroupKey> parse_grid(const std::string& text);

}  // namespace reflekt
