#pragma once

#include "quiverlab/io.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace quiverlab::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kCapacity = 3, kInternal = 4 };

struct RunRequest {
  /// flat, sigma, generic, slice, reflect, orbit, typea, walg, hilbert, frame
  std::string subcommand;
  std::string input;
  std::size_t budget = 1'000'000;
  int order = 6;
  std::string method = "molien";
  std::string vertex;
  std::string type;
  std::string r, d;
  std::string shape = "path";
  int n = 0;
  std::size_t max = 1000;
  bool all_witnesses = false;
};

/// Runs one request and returns the JSON report. Throws the quiverlab error
/// types; run() maps them to exit codes.
Json execute(const RunRequest& req);

/// Full command-line entry point. Reports go to `out` as JSON (errors as
/// {"error": ..., "path": ...}); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quiverlab::cli
