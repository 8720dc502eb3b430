#pragma once

#include <string>
#include <vector>

namespace cylgabor::verify {

struct Check {
  std::string name;
  std::string claim;
  std::string relation;  // "<=" or ">="
  double tolerance = 0.0;
  double measured = 0.0;
  bool passed = false;
  double seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

// moyal, kernels, vasilevski, wexler_raz, frames, sampling, interpolation, super
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name. "all" runs every suite.
std::vector<SuiteReport> run(const std::string& name);

SuiteReport run_suite(const std::string& name);

std::string to_json(const std::vector<SuiteReport>& reports);

}  // namespace cylgabor::verify
