#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <vector>

#include "semicross/limits.hpp"

namespace semicross {

  // A point of {1, ..., n}. The value 0 is reserved to mean "undefined".
  using Point = std::uint32_t;
  inline constexpr Point kUndefined = 0;

  // An injective partial map of {1, ..., n} into itself; an element of the
  // full inverse symmetric semigroup IS_n. Maps act on the right, so
  // compose(a, b) is "a then b".
  class PartialBijection {
   public:
    PartialBijection() = default;

    // The empty map of the given rank.
    explicit PartialBijection(std::size_t rank);

    // images[x - 1] is the image of x, or kUndefined. Throws UsageError
    // unless the defined images are distinct and lie in 1..images.size().
    static PartialBijection from_images(std::vector<Point> images);
    static PartialBijection identity(std::size_t rank);
    static PartialBijection partial_identity(std::size_t        rank,
                                             std::span<Point const> domain);

    std::size_t rank() const noexcept {
      return _images.size();
    }

    // kUndefined when x is outside the domain.
    Point operator()(Point x) const noexcept {
      return (x == 0 || x > _images.size()) ? kUndefined : _images[x - 1];
    }

    bool is_defined(Point x) const noexcept {
      return (*this)(x) != kUndefined;
    }

    std::span<Point const> images() const noexcept {
      return _images;
    }

    std::vector<Point> domain() const;
    std::vector<Point> range() const;
    std::size_t        domain_size() const noexcept;

    bool operator==(PartialBijection const&) const = default;

   private:
    std::vector<Point> _images;
  };

  // x -> b(a(x)) on { x in dom(a) : a(x) in dom(b) }.
  PartialBijection compose(PartialBijection const& a, PartialBijection const& b);
  PartialBijection inverse(PartialBijection const& a);

  // (x_1 ... x_k): x_i -> x_{i+1}, x_k -> x_1, identity elsewhere.
  PartialBijection cycle(std::size_t rank, std::span<Point const> points);
  // [x_1 ... x_k]: x_i -> x_{i+1}, x_k undefined, identity elsewhere.
  PartialBijection chain(std::size_t rank, std::span<Point const> points);

  inline PartialBijection cycle(std::size_t rank, std::initializer_list<Point> p) {
    return cycle(rank, std::span<Point const>(p.begin(), p.size()));
  }
  inline PartialBijection chain(std::size_t rank, std::initializer_list<Point> p) {
    return chain(rank, std::span<Point const>(p.begin(), p.size()));
  }

  bool is_idempotent(PartialBijection const& a);

  // Orbits of an element: periodic orbits of length >= 2 are cycles, maximal
  // non-periodic orbits are chains (each ends at a point outside the domain).
  // Fixed points are omitted. Cycles start at their least point and are
  // sorted by it; chains are sorted by their first point.
  struct ChainDecomposition {
    std::size_t                     rank = 0;
    std::vector<std::vector<Point>> cycles;
    std::vector<std::vector<Point>> chains;

    PartialBijection recompose() const;
    bool             operator==(ChainDecomposition const&) const = default;
  };

  ChainDecomposition chain_decomposition(PartialBijection const& a);

  // Order used for enumeration: by domain size, then lexicographically on
  // the domain, then on the images listed in domain order.
  bool canonical_less(PartialBijection const& a, PartialBijection const& b);

  // All of IS_n in canonical order. Throws ResourceError if n > max_rank.
  std::vector<PartialBijection> enumerate_isn(std::size_t n,
                                              std::size_t max_rank = kDefaultIsnRankLimit);

  struct PartialBijectionHash {
    std::size_t operator()(PartialBijection const& a) const noexcept;
  };

  // The canonically ordered elements of IS_n with reverse lookup.
  class IsnCatalog {
   public:
    explicit IsnCatalog(std::size_t n, std::size_t max_rank = kDefaultIsnRankLimit);

    std::size_t rank() const noexcept {
      return _rank;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    PartialBijection const& operator[](std::size_t i) const {
      return _elements[i];
    }
    std::vector<PartialBijection> const& elements() const noexcept {
      return _elements;
    }

    // Throws UsageError for an element of another rank.
    std::uint32_t index_of(PartialBijection const& a) const;

   private:
    std::size_t                   _rank;
    std::vector<PartialBijection> _elements;
    std::unordered_map<PartialBijection, std::uint32_t, PartialBijectionHash>
        _index;
  };

}  // namespace semicross
