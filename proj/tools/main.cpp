// Command-line front end: runs identity/lemma/kernel/limit suites over a
// seeded grid and emits a machine-readable report.
//
// Exit codes: 0 all checks passed, 1 at least one mismatch, 2 invalid
// configuration or exhausted resampling.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "qduality/runner.hpp"

namespace {

bool parse_range(const std::string& text, int& lo, int& hi) {
  auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, sep));
      hi = std::stoi(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

const std::map<std::string, qduality::IdentityId> kIdentityByName = {
    {"rational", qduality::IdentityId::RationalDuality},
    {"trig", qduality::IdentityId::TrigDuality},
    {"sym-trig", qduality::IdentityId::SymTrigDuality},
    {"elliptic", qduality::IdentityId::EllipticDuality},
    {"kernel", qduality::IdentityId::KernelFunction},
    {"commutativity", qduality::IdentityId::OperatorCommutativity},
    {"rational-limit", qduality::IdentityId::RationalLimit},
    {"rational-kernel", qduality::IdentityId::RationalKernel},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qduality: mechanical checks of duality identities for multiple\n"
      "basic/elliptic hypergeometric series, their residue lemmas, kernel\n"
      "identities and limit relations"};
  app.set_config("--config", "", "key=value file supplying any flag (flags take precedence)");

  std::string identity, suite = "all", n_range = "2..3", k_range = "0..3", r_range;
  std::string nome = "1/5", format = "json";
  int trials = 3, precision_bits = 256, tolerance_bits = 150;
  std::uint64_t seed = 1;

  app.add_option("--identity", identity, "single identity to check")
      ->envname("QDUALITY_IDENTITY")
      ->check(CLI::IsMember([] {
        std::vector<std::string> names;
        for (const auto& [name, id] : kIdentityByName) names.push_back(name);
        return names;
      }()));
  app.add_option("--suite", suite, "all | main | lemmas | kernels | limits | elliptic")
      ->envname("QDUALITY_SUITE");
  app.add_option("--n", n_range, "tuple size or range, e.g. 2 or 2..3")->envname("QDUALITY_N");
  app.add_option("--K", k_range, "weight or range, e.g. 0..4")->envname("QDUALITY_K");
  app.add_option("--r", r_range, "kernel subset size or range (default 0..n)")
      ->envname("QDUALITY_R");
  app.add_option("--trials", trials, "random points per grid cell")->envname("QDUALITY_TRIALS");
  app.add_option("--seed", seed, "64-bit master seed")->envname("QDUALITY_SEED");
  app.add_option("--precision-bits", precision_bits, "working precision for numeric checks")
      ->envname("QDUALITY_PRECISION_BITS");
  app.add_option("--nome", nome, "elliptic nome, rational or decimal, |p| < 1")
      ->envname("QDUALITY_NOME");
  app.add_option("--tolerance-bits", tolerance_bits,
                 "numeric checks pass when the relative deviation is below 2^-bits")
      ->envname("QDUALITY_TOLERANCE_BITS");
  app.add_option("--format", format, "json | text")->envname("QDUALITY_FORMAT");

  CLI11_PARSE(app, argc, argv);

  qduality::RunConfig config;
  if (!identity.empty()) config.identity = kIdentityByName.at(identity);
  config.suite = suite;
  config.trials = trials;
  config.seed = seed;
  config.precision_bits = precision_bits;
  config.tolerance_bits = tolerance_bits;
  config.format = format;
  if (!parse_range(n_range, config.n_min, config.n_max)) {
    std::cerr << "bad --n range: " << n_range << "\n";
    return static_cast<int>(qduality::ExitCode::InvalidConfig);
  }
  if (!parse_range(k_range, config.k_min, config.k_max)) {
    std::cerr << "bad --K range: " << k_range << "\n";
    return static_cast<int>(qduality::ExitCode::InvalidConfig);
  }
  if (!r_range.empty()) {
    int lo = 0, hi = 0;
    if (!parse_range(r_range, lo, hi)) {
      std::cerr << "bad --r range: " << r_range << "\n";
      return static_cast<int>(qduality::ExitCode::InvalidConfig);
    }
    config.r_min = lo;
    config.r_max = hi;
  }
  try {
    config.nome = qduality::rational_from_string(nome);
  } catch (const std::exception& e) {
    std::cerr << "bad --nome: " << e.what() << "\n";
    return static_cast<int>(qduality::ExitCode::InvalidConfig);
  }

  qduality::RunOutcome outcome = qduality::run_verify(config);
  std::fputs(qduality::emit_report(outcome.report, config.format).c_str(), stdout);
  return static_cast<int>(outcome.exit_code);
}
