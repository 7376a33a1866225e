#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "gvm/coeff_space.hpp"
#include "gvm/harness/config.hpp"

namespace gvm::harness {

inline constexpr int kReportSchemaVersion = 1;

struct TheoremReport {
  std::string suite;
  std::string anchor;  // the statement under test
  std::size_t instances = 0;
  std::size_t violations = 0;   // certified: LHS.lower > RHS.upper + tol_bracket, or exact residual > tol_exact
  std::size_t near_misses = 0;  // brackets overlap, so the comparison is undecided
  std::size_t skipped = 0;
  double max_residual = 0.0;
  double elapsed_ms = 0.0;
  std::vector<std::string> notes;
};

/// Accumulates checks for one suite.
class Tally {
 public:
  Tally(TheoremReport& rep, const RunConfig& cfg) : rep_(rep), cfg_(cfg) {}

  /// An identity that must hold to tol_exact.
  bool exact(double residual) {
    rep_.max_residual = std::max(rep_.max_residual, residual);
    if (!(residual <= cfg_.tol_exact)) {
      ++rep_.violations;
      return false;
    }
    return true;
  }

  /// lhs <= rhs, certified when lhs.lower > rhs.upper + tol_bracket (relative to the scale of rhs).
  bool at_most(const NormEstimate& lhs, const NormEstimate& rhs) {
    const double tol = cfg_.tol_bracket * std::max(1.0, std::abs(rhs.upper));
    rep_.max_residual = std::max(rep_.max_residual, lhs.lower - rhs.upper);
    if (lhs.lower > rhs.upper + tol) {
      ++rep_.violations;
      return false;
    }
    if (lhs.upper > rhs.lower + tol) ++rep_.near_misses;
    return true;
  }
  bool at_most(double lhs, const NormEstimate& rhs) { return at_most(NormEstimate::exact_value(lhs), rhs); }
  bool at_most(const NormEstimate& lhs, double rhs) { return at_most(lhs, NormEstimate::exact_value(rhs)); }

  /// A condition that is either met or certifiably not.
  void require(bool ok) {
    if (!ok) ++rep_.violations;
  }
  void near_miss() { ++rep_.near_misses; }
  void instance() { ++rep_.instances; }
  void skip(const std::string& why) {
    ++rep_.skipped;
    note(why);
  }
  void note(const std::string& s) {
    if (std::find(rep_.notes.begin(), rep_.notes.end(), s) == rep_.notes.end()) rep_.notes.push_back(s);
  }

 private:
  TheoremReport& rep_;
  const RunConfig& cfg_;
};

inline std::size_t total_violations(const std::vector<TheoremReport>& reps) {
  std::size_t v = 0;
  for (const auto& r : reps) v += r.violations;
  return v;
}

inline int exit_code(const std::vector<TheoremReport>& reps) { return total_violations(reps) == 0 ? 0 : 1; }

inline nlohmann::ordered_json to_json(const std::vector<TheoremReport>& reps, const RunConfig& cfg,
                                      bool include_timing = true) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["seed"] = cfg.seed;
  ordered_json c;
  c["groups"] = cfg.groups;
  c["spaces"] = cfg.spaces;
  c["trials"] = cfg.trials;
  c["tol_exact"] = cfg.tol_exact;
  c["tol_bracket"] = cfg.tol_bracket;
  c["restarts"] = cfg.restarts;
  c["fault"] = fault_name(cfg.fault);
  doc["config"] = c;
  ordered_json arr = ordered_json::array();
  std::size_t near = 0;
  for (const auto& r : reps) {
    ordered_json j;
    j["suite"] = r.suite;
    j["anchor"] = r.anchor;
    j["instances"] = r.instances;
    j["violations"] = r.violations;
    j["near_misses"] = r.near_misses;
    j["skipped"] = r.skipped;
    j["max_residual"] = r.max_residual;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    j["notes"] = r.notes;
    arr.push_back(std::move(j));
    near += r.near_misses;
  }
  doc["suites"] = std::move(arr);
  doc["total_violations"] = total_violations(reps);
  doc["total_near_misses"] = near;
  doc["pass"] = total_violations(reps) == 0;
  return doc;
}

inline std::string to_markdown(const std::vector<TheoremReport>& reps, const RunConfig& cfg) {
  std::string s = "# Verification report\n\n";
  s += "seed " + std::to_string(cfg.seed) + ", fault " + fault_name(cfg.fault) + "\n\n";
  s += "| suite | statement | instances | violations | near-misses | skipped | max residual | ms |\n";
  s += "|---|---|---:|---:|---:|---:|---:|---:|\n";
  char buf[64];
  for (const auto& r : reps) {
    std::snprintf(buf, sizeof buf, "%.3g", r.max_residual);
    std::string res = buf;
    std::snprintf(buf, sizeof buf, "%.1f", r.elapsed_ms);
    s += "| " + r.suite + " | " + r.anchor + " | " + std::to_string(r.instances) + " | " +
         std::to_string(r.violations) + " | " + std::to_string(r.near_misses) + " | " + std::to_string(r.skipped) +
         " | " + res + " | " + buf + " |\n";
  }
  s += "\n";
  for (const auto& r : reps)
    for (const auto& n : r.notes) s += "- " + r.suite + ": " + n + "\n";
  s += std::string("\n**") + (total_violations(reps) == 0 ? "PASS" : "FAIL") + "**: " +
       std::to_string(total_violations(reps)) + " certified violation(s)\n";
  return s;
}

}  // namespace gvm::harness
