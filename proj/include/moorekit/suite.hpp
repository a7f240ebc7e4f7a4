#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "moorekit/report.hpp"

// The desk-scale acceptance matrix: one campaign per criterion, each returning
// a JSON record, aggregated by `verify all --suite desk`.
namespace moorekit::suite {

using report::json;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double elapsed_ms = 0;
  json details = json::object();
  std::vector<json> reports;  // VerificationReport records, when any
  std::vector<std::string> failure_messages;

  json to_json() const;
};

struct Criterion {
  int id;
  const char* title;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

/// Criteria 1 to 11 in order.
const std::vector<Criterion>& desk_criteria();

CriterionResult moore_cross_oracle(std::uint64_t seed);
CriterionResult independence_equivalences(std::uint64_t seed);
CriterionResult minor_determinant_identities(std::uint64_t seed);
CriterionResult signed_cofactor_identity(std::uint64_t seed);
CriterionResult cofactor_matrix(std::uint64_t seed);
CriterionResult block_matrix(std::uint64_t seed);
CriterionResult lq_spaces(std::uint64_t seed);
CriterionResult gamma_divisibility(std::uint64_t seed);
CriterionResult pairing_agreement(std::uint64_t seed);
CriterionResult phi_map(std::uint64_t seed);
CriterionResult artin_schreier(std::uint64_t seed);

/// {"schema", "command", "seed", "status", "elapsed_ms", "reports": [...]}.
json run_desk(std::uint64_t seed);

}  // namespace moorekit::suite
