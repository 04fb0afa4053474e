#include "semicross/limits.hpp"

#include <cstdlib>

namespace semicross {

  std::size_t element_limit() {
    if (char const* env = std::getenv("SEMICROSS_MAX_SIZE")) {
      char*              end   = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return static_cast<std::size_t>(value);
      }
    }
    return kDefaultElementLimit;
  }

}  // namespace semicross
