#include "affinelab/config.hpp"
#include "affinelab/errors.hpp"
#include "affinelab/runner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int fail(const std::string& kind, const std::string& message, const std::string& key, int code) {
  affinelab::Json err{{"error", {{"kind", kind}, {"message", message}}}};
  if (!key.empty()) err["error"]["key"] = key;
  std::cerr << err.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in induced modules of affine sl2"};
  std::string command;
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  bool timing = false;

  std::string commands;
  for (const auto& c : affinelab::known_commands()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("--config", config_path, "experiment config (key = value lines)")->required();
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_option("--seed", seed, "override the config seed");
  app.add_flag("--timing", timing, "print wall time to stderr");
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  affinelab::ExperimentConfig config;
  try {
    std::ifstream in(config_path);
    if (!in) return fail("invalid_config", "cannot read config file " + config_path, "", 3);
    std::stringstream buf;
    buf << in.rdbuf();
    config = affinelab::parse_config(buf.str());
    config.command = command;
    if (seed) config.seed = *seed;
    affinelab::validate_config(config);
  } catch (const affinelab::ConfigError& e) {
    return fail("invalid_config", e.what(), e.key(), 3);
  }

  affinelab::RunOutcome outcome;
  try {
    outcome = affinelab::run(config);
  } catch (const affinelab::ConfigError& e) {
    return fail("invalid_config", e.what(), e.key(), 3);
  } catch (const affinelab::PreconditionError& e) {
    return fail("invalid_config", e.what(), "", 3);
  } catch (const std::exception& e) {
    return fail("internal_error", e.what(), "", 2);
  }

  const std::string doc = outcome.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) return fail("io_error", "cannot write " + out_path, "", 2);
    out << doc;
    for (const auto& line : outcome.summary) std::cout << line << "\n";
    std::cout << "status: " << outcome.report["status"].get<std::string>() << "\n";
  }
  if (timing) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed_ms: " << ms << "\n";
  }
  return outcome.exit_code;
}
