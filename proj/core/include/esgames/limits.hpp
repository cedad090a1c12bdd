#pragma once

#include <cstddef>
#include <cstdint>

namespace esgames {

/// Resource guards. Everything in the library enumerates exhaustively, so
/// these bound the work on accidental large inputs.
struct Limits {
  std::size_t max_configurations = std::size_t{1} << 16;
  std::size_t max_group_order = 10000;
  std::uint64_t max_search = 1000000;

  /// Defaults, with ESGAMES_MAX_CONFIGS overriding max_configurations.
  static const Limits& defaults();
};

}  // namespace esgames
