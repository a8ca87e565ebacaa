#pragma once

#include "affinelab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace affinelab {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what) : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Flat "key = value" experiment description. Lists are comma separated,
// rationals are "p/q" or integers, '#' starts a comment.
struct ExperimentConfig {
  std::string command;
  int n1 = -1;
  int n2 = 1;
  std::vector<Rational> h_values;
  Rational kappa = 0;
  std::map<int, Rational> theta;
  std::optional<Rational> lambda;
  int h_max = 3;
  int l_max = 3;
  std::optional<Rational> weight;
  int d_max = 0;
  std::uint64_t seed = 0;
  int widen = 0;
  std::string variant = "FREE_D";
  int depth = 3;
  int samples = 100;
};

const std::vector<std::string>& known_commands();

ExperimentConfig parse_config(std::string_view text);
// Command-specific checks on top of parsing; throws ConfigError.
void validate_config(const ExperimentConfig& config);

}  // namespace affinelab
