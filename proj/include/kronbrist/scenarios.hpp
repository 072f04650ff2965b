#pragma once

#include "kronbrist/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kronbrist {

/// A configuration the scenario cannot run with (unknown name, wrong n,
/// a field it does not support, a module of the wrong shape). The CLI maps
/// it to exit status 2.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioInfo {
  std::string name;
  std::string claim;
};

/// The catalog in its fixed order.
const std::vector<ScenarioInfo>& scenario_catalog();

/// Resolves defaults, runs every check of the scenario and times the run.
/// Throws ScenarioError for unusable configurations and ParseError for a
/// malformed --module file.
Report run_scenario(const ScenarioConfig& cfg);

}  // namespace kronbrist
