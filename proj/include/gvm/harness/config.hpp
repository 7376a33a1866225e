#pragma once

// Run configuration: "key = value" lines, '#' comments, lists comma-separated.
//
//   groups      = Z2, S3, Q8
//   spaces      = scalar, linf:2, matop:2, wl1:2
//   suites      = all            # or a list of suite ids
//   trials      = 0              # 0: each suite's default count
//   seed        = 20240601
//   tol_exact   = 1e-10
//   tol_bracket = 1e-8
//   restarts    = 64
//   jobs        = 1              # suites run concurrently when > 1
//   format      = json           # or markdown
//   out         = report.json
//   fault       = none           # drop-dim-conv6 | drop-dim-conv8 | drop-inv-dim-ft | perturbed-irrep

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvm::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Fault { None, DropDimConv6, DropDimConv8, DropInvDimFt, PerturbedIrrep };

inline const char* fault_name(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::DropDimConv6: return "drop-dim-conv6";
    case Fault::DropDimConv8: return "drop-dim-conv8";
    case Fault::DropInvDimFt: return "drop-inv-dim-ft";
    case Fault::PerturbedIrrep: return "perturbed-irrep";
  }
  return "?";
}

inline Fault parse_fault(const std::string& s) {
  for (Fault f : {Fault::None, Fault::DropDimConv6, Fault::DropDimConv8, Fault::DropInvDimFt, Fault::PerturbedIrrep})
    if (s == fault_name(f)) return f;
  throw ConfigError("unknown fault '" + s + "'");
}

enum class ReportFormat { Json, Markdown };

struct RunConfig {
  std::vector<std::string> groups{"Z2", "Z3", "Z4", "Z2xZ2", "D4", "S3", "S4", "Q8"};
  std::vector<std::string> spaces{"scalar", "linf:2", "matop:2", "wl1:2"};
  std::vector<std::string> suites{};  // empty: every suite
  int trials = 0;                     // 0: suite default
  std::uint64_t seed = 20240601;
  double tol_exact = 1e-10;
  double tol_bracket = 1e-8;
  int restarts = 64;
  int jobs = 1;
  ReportFormat format = ReportFormat::Json;
  std::string out;  // empty: stdout
  Fault fault = Fault::None;

  void validate() const {
    if (groups.empty()) throw ConfigError("at least one group is required");
    if (spaces.empty()) throw ConfigError("at least one space is required");
    if (trials < 0) throw ConfigError("trials must be >= 1 (or 0 for suite defaults)");
    if (!(tol_exact > 0.0) || !(tol_bracket > 0.0)) throw ConfigError("tolerances must be positive");
    if (restarts < 0) throw ConfigError("restarts must be non-negative");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  std::istringstream ss(v);
  T out{};
  if (!(ss >> out) || !(ss >> std::ws).eof()) throw ConfigError("bad value for '" + key + "': '" + v + "'");
  return out;
}

}  // namespace detail

inline RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    raw = detail::trim(raw);
    if (raw.empty()) continue;
    auto eq = raw.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(no) + ": expected 'key = value'");
    std::string key = detail::trim(raw.substr(0, eq));
    std::string val = detail::trim(raw.substr(eq + 1));
    if (key == "groups") cfg.groups = detail::split_list(val);
    else if (key == "spaces") cfg.spaces = detail::split_list(val);
    else if (key == "suites") {
      cfg.suites = detail::split_list(val);
      if (cfg.suites.size() == 1 && cfg.suites[0] == "all") cfg.suites.clear();
    } else if (key == "trials") cfg.trials = detail::parse_number<int>(key, val);
    else if (key == "seed") cfg.seed = detail::parse_number<std::uint64_t>(key, val);
    else if (key == "tol_exact") cfg.tol_exact = detail::parse_number<double>(key, val);
    else if (key == "tol_bracket") cfg.tol_bracket = detail::parse_number<double>(key, val);
    else if (key == "restarts") cfg.restarts = detail::parse_number<int>(key, val);
    else if (key == "jobs") cfg.jobs = detail::parse_number<int>(key, val);
    else if (key == "out") cfg.out = val;
    else if (key == "format") {
      if (val == "json") cfg.format = ReportFormat::Json;
      else if (val == "markdown" || val == "md") cfg.format = ReportFormat::Markdown;
      else throw ConfigError("unknown format '" + val + "'");
    } else if (key == "fault") cfg.fault = parse_fault(val);
    else throw ConfigError("line " + std::to_string(no) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

/// Directory for reports when `out` is a bare file name; from GVM_REPORT_DIR, else ".".
inline std::string default_report_dir() {
  const char* d = std::getenv("GVM_REPORT_DIR");
  return d && *d ? d : ".";
}

}  // namespace gvm::harness
