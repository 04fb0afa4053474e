#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semicross/semigroup.hpp"

namespace semicross {

  inline constexpr std::size_t kDefaultIsomorphismLimit = 64;

  // A bijection phi with phi(xy) = phi(x)phi(y), as phi[x], or nullopt when
  // none exists. Candidate images are restricted by per-element invariants
  // (idempotency, index and period, ideal sizes, ...) and the map is grown
  // from a small generating set. Throws ResourceError above `limit`.
  std::optional<std::vector<Index>> are_isomorphic(CayleyTable const& a,
                                                   CayleyTable const& b,
                                                   std::size_t limit = kDefaultIsomorphismLimit);

  std::optional<std::vector<Index>> are_isomorphic(Semigroup const& a,
                                                   Semigroup const& b,
                                                   std::size_t limit = kDefaultIsomorphismLimit);

}  // namespace semicross
