#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace moorekit::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "moorekit.report/1";

/// Outcome of one verification campaign.
struct VerificationReport {
  std::string identity_id;
  int n = 0;
  int m = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::string mode = "exact";  // "exact" or "randomized"
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<json> witness;  // set exactly when failures > 0
  double elapsed_ms = 0;
  std::vector<std::string> notes;
  std::uint64_t degenerate_resamples = 0;
  std::uint32_t extension_degree = 0;  // t of F_{q^t}, randomized mode only
  std::uint64_t degree_bound = 0;
  double false_pass_bound_per_trial = 0;

  bool passed() const noexcept { return failures == 0 && trials > 0; }
  /// Records a failure, keeping the first witness.
  void record_failure(json w);
};

json to_json(const VerificationReport& r);

/// Recursively drops every "elapsed_ms" key, for determinism comparisons.
json strip_timing(json j);

/// 64-bit mixer used to derive per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// FNV-1a hash of a campaign label.
std::uint64_t label_hash(const std::string& label) noexcept;
/// Seed for trial `trial` of the campaign `label`.
std::uint64_t trial_seed(std::uint64_t seed, const std::string& label, std::uint64_t trial) noexcept;

}  // namespace moorekit::report
