#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semicross/partial_bijection.hpp"
#include "semicross/semigroup.hpp"

namespace semicross {

  // A partial map from {1, ..., base} into an inner semigroup S.
  struct PartialMapToS {
    std::size_t                       base = 0;
    std::vector<std::optional<Index>> values;  // values[x - 1]

    explicit PartialMapToS(std::size_t m = 0) : base(m), values(m) {}

    std::optional<Index> operator()(Point x) const {
      return values[x - 1];
    }
    std::vector<Point> domain() const;
    bool               operator==(PartialMapToS const&) const = default;
  };

  // (f, a) with dom(f) = dom(a).
  struct WreathElement {
    PartialMapToS    f;
    PartialBijection a;

    bool operator==(WreathElement const&) const = default;
  };

  // Pointwise product on the common domain.
  PartialMapToS pmap_product(Semigroup const&     s,
                             PartialMapToS const& f,
                             PartialMapToS const& g);

  // f^a: x -> f(xa) on { x in dom(a) : xa in dom(f) }.
  PartialMapToS pmap_pullback(PartialMapToS const& f, PartialBijection const& a);

  // (f, a)(g, b) = (f g^a, ab).
  WreathElement wreath_multiply(Semigroup const&     s,
                                WreathElement const& x,
                                WreathElement const& y);

  // (f, a)^{-1} = (g, a^{-1}) with g(y) = f(y a^{-1})^{-1} for y in ran(a).
  WreathElement wreath_inverse(Semigroup const& s, WreathElement const& x);

  // a is a partial identity and every f(i) is idempotent in S.
  bool is_wreath_idempotent(Semigroup const& s, WreathElement const& x);

  // Throws UsageError unless dom(f) = dom(a) and the values lie in S.
  void validate(Semigroup const& s, WreathElement const& x);

  // The partial wreath product S wr IS_m, fully enumerated. Elements are
  // ordered by their top component (IS_m canonical order), then
  // lexicographically by the inner indices listed along dom(a).
  class WreathProduct {
   public:
    WreathProduct(SemigroupPtr inner, std::size_t m);

    SemigroupPtr const& semigroup() const noexcept {
      return _semigroup;
    }
    Semigroup const& inner() const noexcept {
      return *_data->inner;
    }
    SemigroupPtr const& inner_ptr() const noexcept {
      return _data->inner;
    }
    IsnCatalog const& top_catalog() const noexcept {
      return *_data->top;
    }
    std::size_t rank() const noexcept {
      return _data->rank;
    }
    std::size_t size() const noexcept {
      return _data->top_index.size();
    }

    // Index of the top component a in IS_m.
    Index top_index(Index x) const {
      return _data->top_index[x];
    }
    PartialBijection const& top(Index x) const {
      return (*_data->top)[_data->top_index[x]];
    }
    // f(point), or nullopt outside dom(a).
    std::optional<Index> value(Index x, Point point) const;

    WreathElement element(Index x) const;
    Index         index_of(WreathElement const& x) const;
    // The element with top component `top` (an IS_m index) and the given
    // inner values along dom(top), listed in increasing point order.
    Index index_of(Index top, std::span<Index const> values) const;

    // "(1:elem, 2:elem; a)"; "(; 0)" for the zero.
    std::string format(Index x) const;
    // Inverse of format; whitespace is free. Inner elements are parsed by
    // the inner semigroup.
    Index parse(std::string_view text) const;

    struct Data {
      SemigroupPtr                      inner;
      std::size_t                       rank = 0;
      std::shared_ptr<IsnCatalog const> top;
      std::vector<Index>                top_table;  // IS_m products
      std::vector<Index>                top_inverse;
      std::vector<std::size_t>          offset;     // first index per top
      std::vector<Index>                top_index;
      std::vector<Index>                values;     // size() * m

      Index locate(Index top, std::span<Index const> values) const;
      Index multiply(Index x, Index y) const;
    };

   private:
    std::shared_ptr<Data const> _data;
    SemigroupPtr                _semigroup;
  };

  using WreathPtr = std::shared_ptr<WreathProduct const>;

  // Number of elements of S wr IS_m: sum over a in IS_m of |S|^|dom(a)|.
  // Saturates at SIZE_MAX.
  std::size_t wreath_size(std::size_t inner_size, std::size_t m);

  // Throws ResourceError when the result would exceed element_limit().
  WreathPtr build_wreath(SemigroupPtr inner, std::size_t m);

  // The k-fold partial wreath power of IS_n, modelling partial automorphisms
  // of the k-level n-regular rooted tree. The outermost IS_n acts on the
  // first level; its coordinate semigroup is the (k-1)-fold power.
  SemigroupPtr iterated_wreath(std::size_t n, std::size_t k);
  // nullptr when k == 1.
  WreathPtr iterated_wreath_structure(std::size_t n, std::size_t k);

}  // namespace semicross
