#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asdimlab/spaces.hpp"

namespace asdim {

/// Exit codes of a run.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,   // an asserted inequality failed on verified premises
  kExitUsage = 2,       // bad flags or input
  kExitScope = 3,       // truncation too small for the construction
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;   // the report
  std::string err;   // diagnostics
};

/// Parses `broom:m`, `tree:v,d`, `farey:qmax`, `grid:n` or `file:path`.
LabeledGraph parse_space(const std::string& spec);

/// Runs one subcommand; args exclude the program name.
RunResult run_cli(const std::vector<std::string>& args);

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::uint64_t pair_budget = 50'000'000;
  std::uint64_t sample_pairs = 20000;
  bool dump = false;
};

/// generate, measure delta, check property B, build and fatten the cover at
/// 10r, then audit every partition-of-unity inequality.
RunResult pipeline_a1(const std::string& space, std::uint32_t r, const PipelineOptions& opts = {});

}  // namespace asdim
