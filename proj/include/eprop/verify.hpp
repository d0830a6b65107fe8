#pragma once

#include <string>
#include <vector>

#include "eprop/partition_cat.hpp"

namespace eprop {

struct CheckLine {
  std::string name;
  bool ok = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

std::vector<std::string> verify_suite_names();

// Runs one of: nu-mu-oracle, prop-axioms, partition-prop, paper-examples,
// operad-remark. max_size <= 0 selects the suite's default bound.
SuiteResult run_verify_suite(const std::string& suite, int max_size = 0, int jobs = 1);

}  // namespace eprop
