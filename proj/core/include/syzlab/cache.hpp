#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace syzlab {

/// Bumped whenever a serialized intermediate could change meaning.
inline constexpr std::string_view kEngineVersion = "syzlab-engine/3";

/// Store for expensive intermediates. Keys are the full textual description
/// of the inputs (including kEngineVersion); implementations decide how to
/// digest them. Payloads are versioned text.
class ComputationCache {
 public:
  virtual ~ComputationCache() = default;
  virtual std::optional<std::string> load(std::string_view kind, const std::string& key) = 0;
  virtual void store(std::string_view kind, const std::string& key, const std::string& payload) = 0;
};

}  // namespace syzlab
