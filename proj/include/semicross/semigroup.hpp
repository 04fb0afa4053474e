#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semicross/limits.hpp"

namespace semicross {

  // Elements of a finite semigroup are addressed by their position in its
  // canonical element sequence.
  using Index = std::uint32_t;

  // A plain multiplication table, used for ingestion/export and for
  // subsemigroups (which need not be inverse semigroups).
  struct CayleyTable {
    std::size_t              size = 0;
    std::vector<Index>       table;  // row-major, size * size
    std::vector<std::string> labels;

    Index at(Index x, Index y) const {
      return table[static_cast<std::size_t>(x) * size + y];
    }
    bool operator==(CayleyTable const&) const = default;
  };

  // The multiplication table of the subsemigroup on `members` (which must be
  // closed), with elements renumbered 0..members.size()-1 in the given order.
  // Throws UsageError if a product leaves the set.
  class Semigroup;
  CayleyTable restrict_table(Semigroup const& s, std::span<Index const> members);

  // A finite inverse semigroup. Immutable after construction; every query is
  // safe from multiple threads.
  class Semigroup {
   public:
    using Product = std::function<Index(Index, Index)>;
    // Maps element text to an index, or nullopt if the text names nothing.
    using Parser = std::function<std::optional<Index>(std::string_view)>;

    // The product is tabulated when size <= kMemoTableLimit, otherwise it is
    // evaluated on demand through `product`.
    Semigroup(std::size_t              size,
              Product                  product,
              std::vector<Index>       inverse,
              std::optional<Index>     unit,
              std::optional<Index>     zero,
              std::vector<std::string> labels,
              std::string              name,
              Parser                   parser = {});

    std::size_t size() const noexcept {
      return _size;
    }
    std::string const& name() const noexcept {
      return _name;
    }

    Index product(Index x, Index y) const {
      return _table.empty() ? _product(x, y)
                            : _table[static_cast<std::size_t>(x) * _size + y];
    }
    Index inverse(Index x) const {
      return _inverse[x];
    }
    std::optional<Index> unit() const noexcept {
      return _unit;
    }
    std::optional<Index> zero() const noexcept {
      return _zero;
    }
    bool is_idempotent(Index x) const {
      return product(x, x) == x;
    }
    bool has_table() const noexcept {
      return !_table.empty();
    }

    std::string const& label(Index x) const {
      return _labels[x];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    // Reverse label lookup; nullopt for an unknown label.
    std::optional<Index> find_label(std::string_view label) const;
    // Element from text: the structural parser when there is one, else the
    // label. Throws UsageError (or ParseError) for unknown text.
    Index parse(std::string_view text) const;

    // Elements x with xx = x, in canonical order.
    std::vector<Index> const& idempotents() const noexcept {
      return _idempotents;
    }

    CayleyTable cayley_table() const;

   private:
    std::size_t                            _size;
    Product                                _product;
    std::vector<Index>                     _table;
    std::vector<Index>                     _inverse;
    std::optional<Index>                   _unit;
    std::optional<Index>                   _zero;
    std::vector<std::string>               _labels;
    std::unordered_map<std::string, Index> _label_index;
    std::vector<Index>                     _idempotents;
    std::string                            _name;
    Parser                                 _parser;
  };

  using SemigroupPtr = std::shared_ptr<Semigroup const>;

  // IS_n with elements in canonical order, labelled in cycle/chain notation.
  SemigroupPtr from_isn(std::size_t n);

  // Validates associativity (exhaustively up to 200 elements, otherwise on
  // 10^6 random triples) and the inverse-semigroup axioms. When `inverse`
  // is absent it is computed. Throws UsageError on rejection.
  SemigroupPtr from_cayley_table(CayleyTable const&               table,
                                 std::optional<std::vector<Index>> inverse = std::nullopt,
                                 std::string                      name = "cayley");

  // Smallest product-closed set containing the generators, sorted.
  std::vector<Index> subsemigroup_closure(Semigroup const&      s,
                                          std::span<Index const> generators);

  // Result of checking the inverse-semigroup axioms on a semigroup.
  struct AxiomReport {
    bool        ok = true;
    std::string failure;  // first violated axiom, if any
    std::size_t associativity_triples = 0;
    bool        associativity_exhaustive = false;
  };

  struct AxiomCheckOptions {
    // Exhaustive checks run up to this size, sampling is used above it.
    std::size_t   exhaustive_limit = 200;
    std::size_t   sampled_triples  = 100000;
    std::uint64_t seed             = 20240601;
  };

  // Associativity, xx'x = x and x'xx' = x', involution, (xy)' = y'x',
  // commuting idempotents, and unit/zero laws.
  AxiomReport check_inverse_semigroup(Semigroup const&   s,
                                      AxiomCheckOptions const& opts = {});

}  // namespace semicross
