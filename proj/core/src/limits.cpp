#include "esgames/limits.hpp"

#include <cstdlib>
#include <string>

namespace esgames {

const Limits& Limits::defaults() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("ESGAMES_MAX_CONFIGS")) {
      try {
        const auto v = std::stoull(env);
        if (v > 0) l.max_configurations = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        // malformed override: keep the default
      }
    }
    return l;
  }();
  return limits;
}

}  // namespace esgames
