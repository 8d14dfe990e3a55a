#include <doctest.h>

#include "qduality/runner.hpp"

using namespace qduality;

TEST_CASE("invalid config exits 2") {
  RunConfig config;
  config.trials = 0;
  RunOutcome out = run_verify(config);
  CHECK(out.exit_code == ExitCode::InvalidConfig);
}
