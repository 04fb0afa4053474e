#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semicross/partial_bijection.hpp"
#include "semicross/semigroup.hpp"
#include "semicross/wreath.hpp"

namespace semicross {

  enum class Relation { R, L };

  std::string to_string(Relation rel);
  // Accepts "R" or "L"; throws UsageError otherwise.
  Relation relation_from_string(std::string_view text);
  inline Relation dual(Relation rel) {
    return rel == Relation::R ? Relation::L : Relation::R;
  }

  // x R y iff xS^1 = yS^1, x L y iff S^1x = S^1y, by listing the principal
  // ideals. S^1 = S when S has a unit.
  bool r_related_generic(Semigroup const& s, Index x, Index y);
  bool l_related_generic(Semigroup const& s, Index x, Index y);

  // On IS_n: R is equality of domains, L equality of ranges.
  bool r_related_isn(PartialBijection const& a, PartialBijection const& b);
  bool l_related_isn(PartialBijection const& a, PartialBijection const& b);

  // The classes of R or L on a semigroup, each with its unique idempotent.
  struct GreenClassPartition {
    Relation                        relation = Relation::R;
    std::vector<std::vector<Index>> classes;          // sorted, by least member
    std::vector<Index>              representatives;  // idempotent of each class
    std::vector<Index>              class_of;         // element -> class

    std::size_t size() const noexcept {
      return classes.size();
    }
  };

  // Computed from principal ideals. Throws VerificationError if a class does
  // not contain exactly one idempotent and ResourceError above the element
  // limit.
  GreenClassPartition green_classes(Semigroup const& s, Relation rel);

  // Caches the partition for both relations; safe to share across threads.
  class GreenCache {
   public:
    explicit GreenCache(SemigroupPtr s) : _s(std::move(s)) {}

    Semigroup const& semigroup() const noexcept {
      return *_s;
    }
    GreenClassPartition const& classes(Relation rel) const;
    bool related(Relation rel, Index x, Index y) const {
      auto const& p = classes(rel);
      return p.class_of[x] == p.class_of[y];
    }

   private:
    SemigroupPtr                            _s;
    mutable std::array<std::once_flag, 2>   _once;
    mutable std::array<GreenClassPartition, 2> _parts;
  };

  // Structural characterization on S wr IS_m:
  //   (f,a) R (g,b)  iff  dom(a) = dom(b) and f(z) R g(z) for z in dom(a);
  //   (f,a) L (g,b)  iff  ran(a) = ran(b) and f^{a^-1}(z) L g^{b^-1}(z)
  //                       for z in ran(a).
  // Inner relations come from the inner semigroup's cached partition.
  class WreathGreen {
   public:
    explicit WreathGreen(WreathPtr w);

    bool r_related(Index x, Index y) const;
    bool l_related(Index x, Index y) const;
    bool related(Relation rel, Index x, Index y) const {
      return rel == Relation::R ? r_related(x, y) : l_related(x, y);
    }

   private:
    WreathPtr  _w;
    GreenCache _inner;
  };

}  // namespace semicross
