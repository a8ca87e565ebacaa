#include "affinelab/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace affinelab {

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> commands{"verify-axioms",  "singular-scan", "criterion-report",
                                                 "sugawara-check", "takiff-check",  "quotient-scan",
                                                 "tilde-scan",     "twist-check"};
  return commands;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  if (value.empty()) return out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

template <class Int>
Int parse_int(const std::string& key, const std::string& value) {
  Int out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  if (!value.empty() && value.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ConfigError(key, "expected an integer for '" + key + "', got '" + value + "'");
  }
  return out;
}

Rational parse_value(const std::string& key, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const std::invalid_argument&) {
    throw ConfigError(key, "expected a rational for '" + key + "', got '" + value + "'");
  }
}

int nonnegative(const std::string& key, const std::string& value) {
  const int v = parse_int<int>(key, value);
  if (v < 0) throw ConfigError(key, "'" + key + "' must be nonnegative");
  return v;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(key, "duplicate key '" + key + "'");

    if (key == "n1") {
      cfg.n1 = parse_int<int>(key, value);
    } else if (key == "n2") {
      cfg.n2 = parse_int<int>(key, value);
    } else if (key == "h_values") {
      cfg.h_values.clear();
      for (const auto& item : split_list(value)) cfg.h_values.push_back(parse_value(key, item));
    } else if (key == "kappa") {
      cfg.kappa = parse_value(key, value);
    } else if (key == "theta") {
      for (const auto& item : split_list(value)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError(key, "theta entries are 'index:value', got '" + item + "'");
        const int idx = parse_int<int>(key, trim(std::string_view(item).substr(0, colon)));
        if (idx < 1) throw ConfigError(key, "theta indices start at 1");
        if (cfg.theta.count(idx)) throw ConfigError(key, "theta index " + std::to_string(idx) + " repeated");
        cfg.theta[idx] = parse_value(key, trim(std::string_view(item).substr(colon + 1)));
      }
    } else if (key == "lambda") {
      cfg.lambda = parse_value(key, value);
    } else if (key == "h_max") {
      cfg.h_max = nonnegative(key, value);
    } else if (key == "l_max") {
      cfg.l_max = nonnegative(key, value);
    } else if (key == "weight") {
      cfg.weight = parse_value(key, value);
    } else if (key == "d_max") {
      cfg.d_max = nonnegative(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "widen") {
      cfg.widen = nonnegative(key, value);
    } else if (key == "variant") {
      if (value != "FREE_D" && value != "LAMBDA_QUOTIENT" && value != "CRITICAL_INDUCED") {
        throw ConfigError(key, "variant must be FREE_D, LAMBDA_QUOTIENT or CRITICAL_INDUCED");
      }
      cfg.variant = value;
    } else if (key == "depth") {
      cfg.depth = parse_int<int>(key, value);
      if (cfg.depth < 1) throw ConfigError(key, "depth must be at least 1");
    } else if (key == "samples") {
      cfg.samples = nonnegative(key, value);
    } else {
      throw ConfigError(key, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
  const auto& cmds = known_commands();
  if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end()) {
    throw ConfigError("command", "unknown command '" + cfg.command + "'");
  }
  if (cfg.command == "takiff-check") {
    if (cfg.n1 != -1) throw ConfigError("n1", "takiff-check uses n1 = -1 and n2 = N");
    if (cfg.n2 < 0) throw ConfigError("n2", "Takiff order N must be nonnegative");
    if (cfg.h_values.size() != static_cast<std::size_t>(cfg.n2 + 1)) {
      throw ConfigError("h_values", "takiff-check needs N+1 psi values in h_values");
    }
    return;
  }
  if (cfg.n1 + cfg.n2 < 0) throw ConfigError("n1", "n1 + n2 must be nonnegative");
  const auto want = static_cast<std::size_t>(cfg.n1 + cfg.n2 + 2);
  if (cfg.h_values.size() != want) {
    throw ConfigError("h_values", "h_values needs exactly n1+n2+2 = " + std::to_string(want) + " entries, got " +
                                      std::to_string(cfg.h_values.size()));
  }
  const bool reduced_only = cfg.command == "singular-scan" || cfg.command == "sugawara-check" ||
                            cfg.command == "quotient-scan" || cfg.command == "tilde-scan";
  if (reduced_only && (cfg.n1 != -1 || cfg.n2 < 1)) {
    throw ConfigError("n1", cfg.command + " needs n1 = -1 and n2 >= 1");
  }
  if (cfg.command == "quotient-scan" || (cfg.command == "tilde-scan" && cfg.variant == "CRITICAL_INDUCED")) {
    if (cfg.kappa != -2) throw ConfigError("kappa", "the critical quotient needs kappa = -2");
    if (is_zero(cfg.h_values.back())) throw ConfigError("h_values", "the critical quotient needs phi(h(N)) != 0");
  }
  if (cfg.command == "tilde-scan" && cfg.variant == "LAMBDA_QUOTIENT") {
    if (cfg.kappa == -2) throw ConfigError("kappa", "LAMBDA_QUOTIENT needs kappa != -2");
    if (!cfg.lambda) throw ConfigError("lambda", "LAMBDA_QUOTIENT needs lambda");
  }
}

}  // namespace affinelab
