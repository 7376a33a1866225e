// Acceptance battery: one PASS/FAIL line per criterion. Runs the full default suite battery once
// and grades each criterion from its reports, plus a few targeted runs.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "gvm.hpp"

using namespace gvm;
using namespace gvm::harness;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void verdict(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  [%2d] %s -- %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

int main() {
  // 1. dual validation, timed on its own
  {
    auto t0 = Clock::now();
    RunConfig cfg;
    auto rep = run_suite("dual-validation", cfg);
    double s = seconds_since(t0);
    bool completeness = true;
    for (const auto& name : builtin_group_names()) {
      auto g = build_group(name);
      std::size_t sum = 0;
      auto dual = unitary_dual(g);
      for (const auto& pi : dual->irreps) sum += pi.dim * pi.dim;
      completeness &= sum == g->order();
    }
    verdict(1, rep.violations == 0 && rep.instances == 8 && rep.max_residual <= 1e-10 && completeness && s < 1.0,
            "dual validation on all built-ins",
            "max residual " + fmt("%.2e", rep.max_residual) + ", " + fmt("%.3f", s) + " s");
  }

  // The full default battery.
  auto t0 = Clock::now();
  RunConfig cfg;
  auto reps = run_suites(cfg);
  const double battery_s = seconds_since(t0);
  std::map<std::string, TheoremReport> by;
  for (const auto& r : reps) by[r.suite] = r;

  auto clean = [&](std::initializer_list<const char*> ids, std::size_t min_instances, double max_res, std::string& d) {
    bool ok = true;
    for (const char* id : ids) {
      const auto& r = by.at(id);
      ok &= r.violations == 0 && r.instances >= min_instances && r.max_residual <= max_res;
      d += std::string(d.empty() ? "" : "; ") + id + ": " + std::to_string(r.instances) + " inst, " +
           std::to_string(r.violations) + " viol";
      if (max_res < 1.0) d += ", res " + fmt("%.1e", r.max_residual);
    }
    return ok;
  };

  {
    std::string d;
    bool ok = clean({"plancherel"}, 1000, 1e-10, d);
    verdict(2, ok, "Plancherel and inversion", d);
  }
  {
    std::string d;
    bool ok = clean({"bounds-4.4", "bounds-4.8", "bounds-7"}, 4 * 1000, 1e300, d);
    // exact spaces: the comparison must be exact against exact (no bracket ambiguity)
    RunConfig ex;
    ex.spaces = {"scalar", "linf:2"};
    ex.trials = 200;
    ex.suites = {"bounds-4.4", "bounds-4.8", "bounds-7"};
    std::size_t near = 0, viol = 0;
    for (const auto& r : run_suites(ex)) near += r.near_misses, viol += r.violations;
    ok &= near == 0 && viol == 0;
    verdict(3, ok, "transform norm bounds", d + "; exact spaces near-misses " + std::to_string(near));
  }
  {
    std::string d;
    verdict(4, clean({"cb-4.4", "cb-7"}, 200, 1e300, d), "complete boundedness at levels 1..3", d);
  }
  {
    std::string d;
    bool ok = clean({"pairing-4.9", "ft-measure-7.3", "scalarization-6.8", "ft-conv-6", "ft-conv-8", "pettis-6.9",
                     "duality-6.6"},
                    200, 1e-10, d);
    verdict(5, ok, "exact identities", d);
  }
  {
    std::string d;
    verdict(6, clean({"uniqueness-4.10", "uniqueness-7.5"}, 32, 1e300, d), "uniqueness (kernel dimension 0)", d);
  }
  {
    std::string d;
    bool ok = clean({"young-6.2", "young-6.4", "young-6.5", "dunford-6.10", "dunford-6.11", "young-9.1", "young-9.2",
                     "young-9.3", "young-9.4"},
                    1000, 1e300, d);
    verdict(7, ok, "Young-type inequalities", d);
  }
  {
    std::string d;
    bool ok = clean({"invariance-5.2"}, 32, 1e-10, d);
    ok &= clean({"inclusion-5.5"}, 500, 1e300, d);
    verdict(8, ok, "invariance and inclusion", d);
  }
  {
    const auto& r = by.at("commutativity-8.5");
    bool ok = r.violations == 0 && r.max_residual <= 1e-12;
    std::string found;
    for (const char* g : {"S3", "D4", "Q8"}) {
      bool hit = false;
      for (const auto& n : r.notes) hit |= n.rfind(std::string(g) + ":", 0) == 0;
      ok &= hit;
      found += hit ? std::string(g) + " " : "";
    }
    verdict(9, ok, "noncommutative witnesses and abelian commutation",
            "witnesses on " + found + "; abelian residual " + fmt("%.1e", r.max_residual));
  }
  {
    std::string d;
    bool ok = clean({"calibration"}, 200, 1e300, d);
    ok &= battery_s <= 60.0;
    verdict(10, ok, "estimator calibration and battery runtime", d + "; battery " + fmt("%.1f", battery_s) + " s");
  }
  {
    const std::vector<std::pair<Fault, const char*>> cases{
        {Fault::DropDimConv6, "ft-conv-6"}, {Fault::DropDimConv8, "ft-conv-8"}, {Fault::DropInvDimFt, "pairing-4.9"}};
    bool ok = true;
    std::string d;
    for (const auto& [f, suite] : cases) {
      RunConfig fc;
      fc.trials = 10;
      fc.fault = f;
      auto r = run_suite(suite, fc);
      ok &= r.violations >= 1;
      d += std::string(d.empty() ? "" : "; ") + fault_name(f) + " -> " + std::to_string(r.violations) + " viol";
    }
    verdict(11, ok, "fault injection", d);
  }

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
