#pragma once

// Instance files compiled into the binary from instances/*.json.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxcheck {

struct BundledInstance {
  std::string name;  ///< file stem
  std::string_view text;
};

/// Sorted by name.
const std::vector<BundledInstance>& bundled_instances();
std::optional<std::string_view> find_bundled(std::string_view name);

}  // namespace coxcheck
