#include "qduality/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qduality {

std::string RunConfig::problem() const {
  if (trials < 1) return "trials must be >= 1";
  if (n_min < 1 || n_min > n_max) return "empty n range";
  if (k_min < 0 || k_min > k_max) return "empty K range";
  if (r_min.has_value() != r_max.has_value()) return "r range needs both ends";
  if (r_min && (*r_min < 0 || *r_min > *r_max)) return "empty r range";
  if (precision_bits < 64) return "precision_bits must be >= 64";
  if (tolerance_bits < 1) return "tolerance_bits must be >= 1";
  if (tolerance_bits > precision_bits) return "tolerance_bits must not exceed precision_bits";
  if (format != "json" && format != "text") return "format must be json or text";
  if (suite != "all" && suite != "main" && suite != "lemmas" && suite != "kernels" &&
      suite != "limits" && suite != "elliptic")
    return "unknown suite";
  Rational a = abs(nome);
  if (!identity.has_value() || *identity == IdentityId::EllipticDuality) {
    if (a >= 1) return "nome must satisfy |p| < 1";
    if (is_zero(nome)) return "nome must be nonzero";
  }
  return "";
}

std::string digest(const std::string& canonical) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["identity"] = c.identity ? identity_name(*c.identity) : nullptr;
  j["suite"] = c.suite;
  j["n"] = {c.n_min, c.n_max};
  j["K"] = {c.k_min, c.k_max};
  if (c.r_min)
    j["r"] = {*c.r_min, *c.r_max};
  else
    j["r"] = nullptr;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["precision_bits"] = c.precision_bits;
  j["nome"] = to_string(c.nome);
  j["tolerance_bits"] = c.tolerance_bits;
  return j;
}

nlohmann::ordered_json cell_json(const CellResult& c) {
  nlohmann::ordered_json j;
  j["index"] = c.index;
  j["kind"] = c.kind;
  j["identity"] = c.identity;
  j["s_kind"] = c.s_kind;
  j["n"] = c.n;
  j["K"] = c.K;
  j["r"] = c.r;
  j["p"] = c.p;
  j["trial"] = c.trial;
  j["seed"] = c.cell_seed;
  j["point_digest"] = c.point_digest;
  j["lhs_digest"] = c.lhs_digest;
  j["rhs_digest"] = c.rhs_digest;
  j["equal"] = c.equal;
  j["max_deviation"] = c.max_deviation;
  j["resamples"] = c.resamples;
  j["error"] = c.error;
  return j;
}

}  // namespace

std::string emit_report(const RunReport& report, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = "qduality";
    j["config"] = config_json(report.config);
    j["cells"] = nlohmann::ordered_json::array();
    for (const CellResult& c : report.cells) j["cells"].push_back(cell_json(c));
    j["summary"] = {{"cells", report.cells.size()},
                    {"passed", report.passed},
                    {"failed", report.failed}};
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const CellResult& c : report.cells) {
    out << "cell " << c.index << " kind=" << c.kind;
    if (!c.identity.empty()) out << " identity=" << c.identity;
    if (!c.s_kind.empty()) out << " s=" << c.s_kind;
    if (c.n >= 0) out << " n=" << c.n;
    if (c.K >= 0) out << " K=" << c.K;
    if (c.r >= 0) out << " r=" << c.r;
    if (c.p != 0) out << " p=" << c.p;
    if (c.trial >= 0) out << " trial=" << c.trial;
    out << " seed=" << c.cell_seed << " point=" << c.point_digest;
    out << " equal=" << (c.equal ? "yes" : "no");
    if (!c.max_deviation.empty()) out << " max_dev=" << c.max_deviation;
    out << " resamples=" << c.resamples;
    out << " elapsed_ms=" << c.elapsed_ms;
    if (!c.error.empty()) out << " error=\"" << c.error << "\"";
    out << "\n";
  }
  out << "summary cells=" << report.cells.size() << " passed=" << report.passed
      << " failed=" << report.failed << "\n";
  return out.str();
}

}  // namespace qduality
