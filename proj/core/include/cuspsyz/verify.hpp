#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cuspsyz/io.hpp"

namespace cuspsyz {

// Implementations the suite exercises; swapped out by mutation tests.
struct SuiteHooks {
  std::function<long long(const BettiData&, int)> defect;
  std::function<AdmissibleSeq(const AdmissibleSeq&)> normal_form;
};
SuiteHooks default_hooks();

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
  std::vector<int> only;  // criterion ids; empty runs all
  bool enforce_time = true;
};

// The reproduction suite: ten criteria, each with its own runtime limit.
std::vector<CriterionResult> run_reproduction_suite(const SuiteOptions& opts = {}, const SuiteHooks& hooks = default_hooks());

}  // namespace cuspsyz
