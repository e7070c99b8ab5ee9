#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "syzlab/groebner.hpp"

namespace syzlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::string action;

  int degree_bound = 8;
  unsigned threads = 1;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;

  std::string module_path;
  std::string ring;
  std::string degrees;
  std::string ideal;
  int n = 1;
  int m = 1;
  int a = 1;
  int b = 1;
  std::string lengths;
  std::string catalog;
  int samples = 20;
};

/// A certificate plus whether it passed.
struct Outcome {
  nlohmann::json certificate;
  bool passed = false;
};

Outcome execute(const RunConfig& config, const EngineOptions& options);

/// Full front end: parses args (without the program name), runs, writes the
/// certificate and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string render(const nlohmann::json& certificate, const std::string& format);

/// Built-in copy of data/series_catalog.json.
const std::string& default_series_catalog();

Outcome selftest(const RunConfig& config, const EngineOptions& options);

}  // namespace syzlab::cli
