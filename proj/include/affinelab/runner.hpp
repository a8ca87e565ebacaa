#pragma once

#include "affinelab/config.hpp"
#include "affinelab/pbw_module.hpp"
#include "affinelab/singular.hpp"
#include "affinelab/tilde.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace affinelab {

using Json = nlohmann::ordered_json;

struct RunOutcome {
  Json report;
  int exit_code = 0;  // 0 consistent, 2 inconsistent or failed check
  std::vector<std::string> summary;
};

// Dispatches one experiment. Throws ConfigError or PreconditionError on bad
// input; every other outcome is described by the report.
RunOutcome run(const ExperimentConfig& config);

Json config_echo(const ExperimentConfig& config);
Json to_json(const GammaTriple& g);
Json to_json(const ModuleVector& v, const Module& order);
Json to_json(const TildeVector& v, const Module& order);

}  // namespace affinelab
