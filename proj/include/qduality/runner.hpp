#pragma once

#include "qduality/report.hpp"

namespace qduality {

enum class ExitCode : int {
  AllPass = 0,
  Mismatch = 1,
  InvalidConfig = 2,  // also covers exhausted resampling
};

struct RunOutcome {
  RunReport report;
  ExitCode exit_code = ExitCode::AllPass;
};

// Executes the configured suite over its grid. Cells run in parallel and are
// merged in index order; output is deterministic for a given (config, seed).
RunOutcome run_verify(const RunConfig& config);

}  // namespace qduality
