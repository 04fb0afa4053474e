#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "semicross/cross_section.hpp"
#include "semicross/error.hpp"
#include "semicross/green.hpp"
#include "semicross/semigroup.hpp"
#include "semicross/wreath.hpp"

namespace semicross {

  // Every ordered partition of {1, ..., n}, ordered by number of blocks and
  // then lexicographically on the block sequences. n <= 7.
  std::vector<OrderedPartition> enumerate_ordered_partitions(std::size_t n);

  // A necessary condition on cross-sections: elements with equal `key` must
  // have equal `value`. For S wr IS_m and R this is "one top component per
  // domain", the first-projection condition.
  struct Projection {
    std::vector<Index> key;
    std::vector<Index> value;
  };

  // key = the top component's R-class (L-class), value = the top component.
  Projection wreath_projection(WreathProduct const& w, Relation rel);

  struct SearchConfig {
    std::size_t max_semigroup_size = 256;
    // Split the search tree at the first branching class across `jobs`
    // threads (0 = hardware concurrency).
    bool        parallel_branching = false;
    std::size_t jobs               = 0;
    bool        prune_with_projection = true;
    // Used only when prune_with_projection is set.
    std::optional<Projection> projection;
    std::chrono::milliseconds timeout = std::chrono::minutes(10);
  };

  struct SearchStats {
    std::size_t               nodes = 0;
    std::chrono::milliseconds elapsed{0};
  };

  // Thrown when the timeout expires; carries what was found so far.
  class PartialResultError : public ResourceError {
   public:
    PartialResultError(std::vector<CrossSection> partial)
        : ResourceError("cross-section search timed out; "
                        + std::to_string(partial.size())
                        + " found so far, result is not exhaustive"),
          _partial(std::move(partial)) {}

    std::vector<CrossSection> const& partial() const noexcept {
      return _partial;
    }

   private:
    std::vector<CrossSection> _partial;
  };

  // All R- (L-) cross-sections of s, as distinct member sets in
  // lexicographic order, by backtracking over the Green classes with one
  // element chosen per class. Every choice is closed under products
  // immediately: a product landing in a class that already holds another
  // element kills the branch, and a product landing in an open class
  // decides it. Classes are tried in decreasing order of the size of the
  // principal ideal of their idempotent. The output does not depend on
  // parallelism.
  std::vector<CrossSection> brute_force_cross_sections(SemigroupPtr const& s,
                                                       Relation            rel,
                                                       SearchConfig const& cfg = {},
                                                       SearchStats*        stats = nullptr);

}  // namespace semicross
