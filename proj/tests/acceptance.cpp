// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff every line passes.
// Criteria 1-12 read the measured values of the verification checks and compare them with the
// criterion's own tolerance and time limit; criterion 13 times the installed driver end to end.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cylgabor/verify.hpp"

#ifndef CYLGABOR_CLI_PATH
#error "CYLGABOR_CLI_PATH must name the cylgabor executable"
#endif

namespace {

using cylgabor::verify::Check;
using cylgabor::verify::SuiteReport;

std::map<std::string, SuiteReport> g_reports;

const SuiteReport& suite(const std::string& name) {
  auto it = g_reports.find(name);
  if (it == g_reports.end()) it = g_reports.emplace(name, cylgabor::verify::run_suite(name)).first;
  return it->second;
}

struct Requirement {
  std::string suite;
  std::string check;
  std::string relation;  // "<=" or ">="
  double bound;
};

struct Outcome {
  bool passed = true;
  std::string detail;
  double seconds = 0.0;
};

void add_detail(Outcome& o, const std::string& text) {
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += text;
}

Outcome evaluate(const std::vector<Requirement>& reqs, double time_limit) {
  Outcome o;
  for (const auto& r : reqs) {
    const Check* c = suite(r.suite).find(r.check);
    char buf[256];
    if (c == nullptr) {
      o.passed = false;
      add_detail(o, r.check + " missing");
      continue;
    }
    const bool ok = r.relation == "<=" ? c->measured <= r.bound : c->measured >= r.bound;
    o.passed = o.passed && ok;
    std::snprintf(buf, sizeof buf, "%s = %.3g (%s %.0e)", r.check.c_str(), c->measured, r.relation.c_str(), r.bound);
    add_detail(o, buf);
    o.seconds += c->seconds;
  }
  if (time_limit > 0.0 && o.seconds >= time_limit) {
    o.passed = false;
    add_detail(o, "over the time limit");
  }
  return o;
}

Outcome verify_all_subprocess() {
  Outcome o;
  const std::string cmd = std::string("\"") + CYLGABOR_CLI_PATH + "\" verify all > /dev/null 2>&1";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  o.passed = code == 0 && o.seconds < 600.0;
  add_detail(o, "exit code " + std::to_string(code));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "basis orthonormality",
       [] { return evaluate({{"moyal", "basis_orthonormality", "<=", 1e-6}}, 60.0); }},
      {2, "Moyal isometry",
       [] {
         return evaluate({{"moyal", "moyal_coefficient", "<=", 1e-12}, {"moyal", "moyal_quadrature", "<=", 1e-6}}, 0.0);
       }},
      {3, "gaussian frame threshold",
       [] {
         return evaluate({{"frames", "gaussian_frame_stable", "<=", 1e-3},
                          {"frames", "gaussian_frame_ratio", ">=", 0.05},
                          {"frames", "gaussian_supercritical", "<=", 1e-6}},
                         120.0);
       }},
      {4, "hermite sufficiency",
       [] {
         return evaluate({{"frames", "hermite_frame_ratio", ">=", 1e-4}, {"frames", "hermite_frame_stable", "<=", 1e-2}},
                         120.0);
       }},
      {5, "Wexler-Raz end to end", [] { return evaluate({{"wexler_raz", "gaussian_dual_residual", "<=", 1e-6}}, 60.0); }},
      {6, "polyanalytic kernel decomposition",
       [] { return evaluate({{"vasilevski", "poly_kernel_layer_sum", "<=", 1e-9}}, 0.0); }},
      {7, "Laguerre summation", [] { return evaluate({{"kernels", "laguerre_summation", "<=", 1e-12}}, 0.0); }},
      {8, "sampling reconstruction",
       [] { return evaluate({{"sampling", "sampling_reconstruction", "<=", 1e-4}}, 60.0); }},
      {9, "true polyanalytic interpolation",
       [] {
         return evaluate(
             {{"interpolation", "node_exactness", "<=", 1e-8}, {"interpolation", "weighted_bound", "<=", 10.0}}, 0.0);
       }},
      {10, "Beurling density",
       [] {
         return evaluate({{"sampling", "lattice_density_exact", "<=", 1e-12}, {"sampling", "density_sweep", "<=", 0.05}},
                         0.0);
       }},
      {11, "Bargmann functional equation",
       [] { return evaluate({{"kernels", "bargmann_functional_equation", "<=", 1e-9}}, 0.0); }},
      {12, "superframe sufficiency",
       [] {
         return evaluate({{"super", "hermite2_superframe_ratio", ">=", 1e-4},
                          {"super", "hermite2_superframe_stable", "<=", 1e-2},
                          {"super", "vector_moyal", "<=", 1e-12}},
                         0.0);
       }},
      {13, "verify all under 10 minutes", verify_all_subprocess},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("error: ") + e.what();
    }
    failed += !o.passed;
    std::printf("%s %2d  %s: %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                o.seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
