#include "moorekit/report.hpp"

namespace moorekit::report {

void VerificationReport::record_failure(json w) {
  ++failures;
  if (!witness) witness = std::move(w);
}

json to_json(const VerificationReport& r) {
  json j;
  j["identity_id"] = r.identity_id;
  j["parameters"] = {{"n", r.n}, {"m", r.m}, {"q", r.q}, {"p", r.p}, {"s", r.s}};
  j["mode"] = r.mode;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  if (r.witness) j["witness"] = *r.witness;
  j["degenerate_resamples"] = r.degenerate_resamples;
  if (r.mode == "randomized") {
    j["extension_degree"] = r.extension_degree;
    j["degree_bound"] = r.degree_bound;
    j["false_pass_bound_per_trial"] = r.false_pass_bound_per_trial;
  }
  j["notes"] = r.notes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t label_hash(const std::string& label) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& label, std::uint64_t trial) noexcept {
  return splitmix64(splitmix64(seed ^ label_hash(label)) + trial);
}

}  // namespace moorekit::report
