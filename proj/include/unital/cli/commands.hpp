#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unital/cech/nerve.hpp"
#include "unital/cli/report.hpp"
#include "unital/cli/spec_file.hpp"
#include "unital/limits.hpp"

namespace unital::cli {

inline const std::vector<std::string> command_names = {"homology",      "units", "contractible",   "unit-complex",
                                                       "qiso",          "cech-classify", "crossed-verify", "crossed-units"};

struct RunOptions {
  std::string command;
  /// qiso target: idA | kerLambda | cone (2-term), alt1 | alt2 (3-term); empty runs all that apply.
  std::string against;
  bool check_acyclic = false;
  Limits limits;
  /// Overrides the nerve inside the input file.
  std::optional<Cover> nerve;
};

/// Runs one command. Throws InputError on kind mismatch and CapExceeded when a
/// search outgrows the limits; check failures are reported, not thrown.
Report run(const RunOptions& options, const ComplexSpecFile& spec);

}  // namespace unital::cli
