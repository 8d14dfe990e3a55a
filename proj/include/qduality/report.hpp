#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qduality/identities.hpp"
#include "qduality/rational.hpp"

namespace qduality {

inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  std::optional<IdentityId> identity;  // single-identity mode when set
  std::string suite = "all";           // all | main | lemmas | kernels | limits | elliptic
  int n_min = 2, n_max = 3;
  int k_min = 0, k_max = 3;
  std::optional<int> r_min, r_max;     // kernel subset sizes; defaults to 0..n
  int trials = 3;
  uint64_t seed = 1;
  int precision_bits = 256;
  Rational nome = make_rational(1, 5);
  int tolerance_bits = 150;
  std::string format = "json";         // json | text

  // empty string when valid, reason otherwise
  std::string problem() const;
};

struct CellResult {
  uint64_t index = 0;
  std::string kind;
  std::string identity;   // empty when not identity-specific
  std::string s_kind;     // odd-function kind for kernel cells
  int n = -1;
  int K = -1;
  int r = -1;
  int p = 0;
  int trial = -1;
  uint64_t cell_seed = 0;
  std::string point_digest;
  std::string lhs_digest;
  std::string rhs_digest;
  bool equal = false;
  std::string max_deviation;  // numeric cells only
  int resamples = 0;
  std::string error;          // resampling exhausted or configuration fault
  double elapsed_ms = 0.0;    // text output only; excluded from json for determinism
};

struct RunReport {
  RunConfig config;
  std::vector<CellResult> cells;
  int passed = 0;
  int failed = 0;
};

// FNV-1a over a canonical serialization; stable across runs and platforms.
std::string digest(const std::string& canonical);

std::string emit_report(const RunReport& report, const std::string& format);

}  // namespace qduality
