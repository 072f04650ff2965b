#include "kronbrist/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace kronbrist {

namespace {

std::string field_name(const ScenarioConfig& cfg) { return cfg.field ? cfg.field->to_string() : "default"; }

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "fail";
}

bool Report::passed() const { return !checks.empty() && count(CheckStatus::pass) == checks.size(); }

std::size_t Report::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [status](const Check& c) { return c.status == status; }));
}

std::string to_json(const Report& report, bool include_timing) {
  using nlohmann::ordered_json;
  const ScenarioConfig& cfg = report.config;
  ordered_json config = {{"n", cfg.n},
                         {"field", field_name(cfg)},
                         {"tmax", cfg.tmax},
                         {"seed", cfg.seed},
                         {"attempts", cfg.attempts},
                         {"samples", cfg.samples},
                         {"subset_limit", cfg.subset_limit}};
  if (cfg.module_path) config["module"] = *cfg.module_path;

  ordered_json checks = ordered_json::array();
  for (const Check& c : report.checks)
    checks.push_back({{"key", c.key},
                      {"name", c.name},
                      {"claim", c.claim},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"status", to_string(c.status)}});

  ordered_json doc = {{"schema", Report::schema},
                      {"scenario", cfg.scenario},
                      {"config", config},
                      {"checks", checks},
                      {"summary",
                       {{"pass", report.count(CheckStatus::pass)},
                        {"fail", report.count(CheckStatus::fail)},
                        {"inconclusive", report.count(CheckStatus::inconclusive)},
                        {"status", report.passed() ? "pass" : "fail"}}}};
  if (include_timing) doc["seconds"] = report.seconds;
  return doc.dump(2) + "\n";
}

std::string to_table(const Report& report, bool include_timing) {
  std::size_t key_width = 3, status_width = 6;
  for (const Check& c : report.checks) {
    key_width = std::max(key_width, c.key.size());
    status_width = std::max(status_width, std::string(to_string(c.status)).size());
  }
  std::ostringstream out;
  const ScenarioConfig& cfg = report.config;
  out << "scenario " << cfg.scenario << "  n=" << cfg.n << " field=" << field_name(cfg)
      << " tmax=" << cfg.tmax << " seed=" << cfg.seed << "\n";
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << pad("status", status_width) << "  " << pad("key", key_width) << "  expected | computed  name\n";
  for (const Check& c : report.checks)
    out << pad(to_string(c.status), status_width) << "  " << pad(c.key, key_width) << "  " << c.expected
        << " | " << c.computed << "  " << c.name << "\n";
  out << report.count(CheckStatus::pass) << " pass, " << report.count(CheckStatus::fail) << " fail, "
      << report.count(CheckStatus::inconclusive) << " inconclusive";
  if (include_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", report.seconds);
    out << ", " << buf << " s";
  }
  out << "\n";
  return out.str();
}

}  // namespace kronbrist
