#pragma once

// Verification sweeps shared by the command-line driver and the test suite.
// Each suite replays a family of identities or inequalities and reports one
// row per check; failing rows carry the offending values.  Construction
// order is deterministic and rows are emitted in canonical order no matter
// how many worker threads evaluate them.

#include "quadclif/oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quadclif {

struct SweepOptions {
  std::uint64_t seed = default_seed;
  Int max_degree = 4;
  Int max_rank = 3;
  Int threads = 1;
  bool corrupt_duality_fixture = false;  // test hook: forces one duality failure
};

struct CheckRow {
  std::string suite;
  std::string params;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SweepResult {
  std::vector<CheckRow> rows;
  Int failures = 0;
};

// beta-monotonicity, theta, duality, audit.
const std::vector<std::string>& sweep_suite_names();

// Runs one suite, or every suite for "all".  Unknown names are domain errors.
SweepResult run_sweep(const std::string& suite, const SweepOptions& opt);

}  // namespace quadclif
