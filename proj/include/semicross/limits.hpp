#pragma once

#include <cstddef>

namespace semicross {

  // Largest n accepted by enumerate_isn / from_isn.
  inline constexpr std::size_t kDefaultIsnRankLimit = 5;

  // Largest number of elements a constructed semigroup may have. The
  // environment variable SEMICROSS_MAX_SIZE overrides it.
  inline constexpr std::size_t kDefaultElementLimit = 50000;

  // Product tables are memoized eagerly up to this many elements.
  inline constexpr std::size_t kMemoTableLimit = 4096;

  std::size_t element_limit();

}  // namespace semicross
