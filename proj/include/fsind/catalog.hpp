#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsind/indicators.hpp"

namespace fsind {

enum class ClaimStatus { pass, fail, skipped };
std::string to_string(ClaimStatus status);

using ClaimParams = std::map<std::string, long long>;

struct ClaimInfo {
  std::string id;
  /// The mathematical statement being checked.
  std::string statement;
  std::vector<std::string> params;
  /// Values used when a parameter is not given.
  ClaimParams defaults;
};

/// The fixed registry, in a stable order.
const std::vector<ClaimInfo>& claim_registry();

struct VerificationReport {
  std::string claim_id;
  std::string statement;
  ClaimParams params;
  ClaimStatus status = ClaimStatus::skipped;
  /// One line: what was found, or which bound stopped the check.
  std::string detail;
  /// Counts and other data supporting the outcome.
  nlohmann::json evidence = nlohmann::json::object();
  /// Offending entries; non-empty whenever status is fail.
  std::vector<std::string> counterexamples;
  double runtime_seconds = 0;
};

struct CatalogOptions {
  ScanOptions scan;
};

/**
 * Runs one claim. Unknown ids, missing or out-of-range parameters throw
 * std::invalid_argument; an instance too large for the configured limits is
 * reported as skipped with the bound named.
 */
VerificationReport verify(const std::string& claim_id, const ClaimParams& params = {},
                          const CatalogOptions& options = {});

struct ClaimInstance {
  std::string claim_id;
  ClaimParams params;
};

/// "quick" (n <= 7) or "full" (adds instances up to S_12). Throws on other names.
/// Both profiles include instances whose stated outcome is known not to hold.
std::vector<ClaimInstance> profile_instances(const std::string& profile);
std::vector<VerificationReport> run_all(const std::string& profile, const CatalogOptions& options = {});

}  // namespace fsind
