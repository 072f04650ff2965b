#pragma once

#include "kronbrist/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kronbrist {

struct ScenarioConfig {
  std::string scenario;
  /// 0 and nullopt select the scenario's default; a Report always carries
  /// the resolved values.
  std::size_t n = 0;
  std::optional<FieldSpec> field;
  std::size_t tmax = 4;
  std::uint64_t seed = 20240601;
  std::size_t attempts = 64;
  std::size_t samples = 200;
  /// Exhaustive subset searches above this count are refused.
  std::size_t subset_limit = 100000;
  std::optional<std::string> module_path;
};

enum class CheckStatus { pass, fail, inconclusive };
const char* to_string(CheckStatus status);

struct Check {
  std::string key;
  std::string name;
  std::string claim;  // the statement being reproduced
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::fail;
};

struct Report {
  static constexpr const char* schema = "kronbrist-report/1";
  ScenarioConfig config;
  std::vector<Check> checks;
  double seconds = 0;

  /// Every check passed (inconclusive counts as not passed).
  bool passed() const;
  std::size_t count(CheckStatus status) const;
};

/// Deterministic JSON; the wall time is only included on request.
std::string to_json(const Report& report, bool include_timing = false);
std::string to_table(const Report& report, bool include_timing = false);

}  // namespace kronbrist
