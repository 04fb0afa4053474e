#include "semicross/semigroup.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "semicross/error.hpp"
#include "semicross/notation.hpp"
#include "semicross/partial_bijection.hpp"

namespace semicross {

  Semigroup::Semigroup(std::size_t              size,
                       Product                  product,
                       std::vector<Index>       inverse,
                       std::optional<Index>     unit,
                       std::optional<Index>     zero,
                       std::vector<std::string> labels,
                       std::string              name,
                       Parser                   parser)
      : _size(size),
        _product(std::move(product)),
        _inverse(std::move(inverse)),
        _unit(unit),
        _zero(zero),
        _labels(std::move(labels)),
        _name(std::move(name)),
        _parser(std::move(parser)) {
    if (_inverse.size() != _size) {
      throw UsageError("inverse table has the wrong length");
    }
    if (_labels.empty()) {
      _labels.reserve(_size);
      for (std::size_t i = 0; i < _size; ++i) {
        _labels.push_back(std::to_string(i));
      }
    } else if (_labels.size() != _size) {
      throw UsageError("label list has the wrong length");
    }
    if (_size <= kMemoTableLimit) {
      _table.resize(_size * _size);
      for (Index x = 0; x < _size; ++x) {
        for (Index y = 0; y < _size; ++y) {
          _table[static_cast<std::size_t>(x) * _size + y] = _product(x, y);
        }
      }
    }
    _label_index.reserve(_size);
    for (Index x = 0; x < _size; ++x) {
      if (!_label_index.emplace(_labels[x], x).second) {
        throw UsageError("duplicate element label \"" + _labels[x] + "\"");
      }
      if (this->product(x, x) == x) {
        _idempotents.push_back(x);
      }
    }
  }

  std::optional<Index> Semigroup::find_label(std::string_view label) const {
    auto it = _label_index.find(std::string(label));
    if (it == _label_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Index Semigroup::parse(std::string_view text) const {
    std::optional<Index> found = _parser ? _parser(text) : find_label(text);
    if (!found) {
      throw UsageError("\"" + std::string(text) + "\" is not an element of "
                       + _name);
    }
    return *found;
  }

  CayleyTable Semigroup::cayley_table() const {
    CayleyTable t;
    t.size = _size;
    t.table.resize(_size * _size);
    for (Index x = 0; x < _size; ++x) {
      for (Index y = 0; y < _size; ++y) {
        t.table[static_cast<std::size_t>(x) * _size + y] = product(x, y);
      }
    }
    t.labels = _labels;
    return t;
  }

  CayleyTable restrict_table(Semigroup const& s, std::span<Index const> members) {
    std::unordered_map<Index, Index> position;
    for (Index i = 0; i < members.size(); ++i) {
      position.emplace(members[i], i);
    }
    CayleyTable t;
    t.size = members.size();
    t.table.resize(t.size * t.size);
    for (Index i = 0; i < t.size; ++i) {
      for (Index j = 0; j < t.size; ++j) {
        auto it = position.find(s.product(members[i], members[j]));
        if (it == position.end()) {
          throw UsageError("member set is not closed under the product");
        }
        t.table[static_cast<std::size_t>(i) * t.size + j] = it->second;
      }
      t.labels.push_back(s.label(members[i]));
    }
    return t;
  }

  SemigroupPtr from_isn(std::size_t n) {
    auto catalog = std::make_shared<IsnCatalog const>(n);
    if (catalog->size() > element_limit()) {
      throw ResourceError("IS_" + std::to_string(n) + " exceeds the element limit");
    }
    std::vector<Index>       inverses;
    std::vector<std::string> labels;
    for (auto const& a : catalog->elements()) {
      inverses.push_back(catalog->index_of(inverse(a)));
      labels.push_back(format_element(a));
    }
    auto product = [catalog](Index x, Index y) {
      return catalog->index_of(compose((*catalog)[x], (*catalog)[y]));
    };
    Index const unit = catalog->index_of(PartialBijection::identity(n));
    Index const zero = catalog->index_of(PartialBijection(n));
    auto parser = [catalog](std::string_view text) -> std::optional<Index> {
      return catalog->index_of(parse_element(text, catalog->rank()));
    };
    return std::make_shared<Semigroup const>(catalog->size(),
                                             product,
                                             std::move(inverses),
                                             unit,
                                             zero,
                                             std::move(labels),
                                             "IS_" + std::to_string(n),
                                             parser);
  }

  namespace {
    std::optional<std::string> check_associative(CayleyTable const& t,
                                                 std::size_t exhaustive_limit,
                                                 std::size_t samples,
                                                 std::uint64_t seed) {
      auto const n        = static_cast<Index>(t.size);
      auto       fail_msg = [&](Index x, Index y, Index z) {
        return "not associative: (" + std::to_string(x) + "*" + std::to_string(y)
               + ")*" + std::to_string(z) + " != " + std::to_string(x) + "*("
               + std::to_string(y) + "*" + std::to_string(z) + ")";
      };
      if (t.size <= exhaustive_limit) {
        for (Index x = 0; x < n; ++x) {
          for (Index y = 0; y < n; ++y) {
            Index const xy = t.at(x, y);
            for (Index z = 0; z < n; ++z) {
              if (t.at(xy, z) != t.at(x, t.at(y, z))) {
                return fail_msg(x, y, z);
              }
            }
          }
        }
        return std::nullopt;
      }
      std::mt19937_64                      rng(seed);
      std::uniform_int_distribution<Index> pick(0, n - 1);
      for (std::size_t i = 0; i < samples; ++i) {
        Index x = pick(rng), y = pick(rng), z = pick(rng);
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) {
          return fail_msg(x, y, z);
        }
      }
      return std::nullopt;
    }
  }  // namespace

  SemigroupPtr from_cayley_table(CayleyTable const&                table,
                                 std::optional<std::vector<Index>> inverse,
                                 std::string                       name) {
    std::size_t const n = table.size;
    if (n == 0) {
      throw UsageError("a Cayley table must have at least one element");
    }
    if (n > element_limit()) {
      throw ResourceError("Cayley table exceeds the element limit");
    }
    if (table.table.size() != n * n) {
      throw UsageError("Cayley table must have size*size entries");
    }
    for (Index v : table.table) {
      if (v >= n) {
        throw UsageError("Cayley table entry " + std::to_string(v)
                         + " is out of range");
      }
    }
    if (!table.labels.empty() && table.labels.size() != n) {
      throw UsageError("label list has the wrong length");
    }
    if (auto msg = check_associative(table, 200, 1000000, 1)) {
      throw UsageError(*msg);
    }

    if (!inverse) {
      inverse.emplace(n);
      for (Index x = 0; x < n; ++x) {
        std::optional<Index> found;
        for (Index y = 0; y < n; ++y) {
          if (table.at(table.at(x, y), x) == x && table.at(table.at(y, x), y) == y) {
            if (found) {
              throw UsageError("element " + std::to_string(x)
                               + " has more than one inverse");
            }
            found = y;
          }
        }
        if (!found) {
          throw UsageError("element " + std::to_string(x) + " has no inverse");
        }
        (*inverse)[x] = *found;
      }
    } else if (inverse->size() != n) {
      throw UsageError("inverse list has the wrong length");
    }
    for (Index x = 0; x < n; ++x) {
      Index const y = (*inverse)[x];
      if (y >= n || table.at(table.at(x, y), x) != x
          || table.at(table.at(y, x), y) != y) {
        throw UsageError("supplied inverse of element " + std::to_string(x)
                         + " is not an inverse");
      }
    }

    std::vector<Index> idempotents;
    for (Index x = 0; x < n; ++x) {
      if (table.at(x, x) == x) {
        idempotents.push_back(x);
      }
    }
    for (Index e : idempotents) {
      for (Index f : idempotents) {
        if (table.at(e, f) != table.at(f, e)) {
          throw UsageError("idempotents " + std::to_string(e) + " and "
                           + std::to_string(f)
                           + " do not commute; not an inverse semigroup");
        }
      }
    }

    std::optional<Index> unit, zero;
    for (Index u = 0; u < n && !(unit && zero); ++u) {
      bool is_unit = true, is_zero = true;
      for (Index x = 0; x < n && (is_unit || is_zero); ++x) {
        is_unit = is_unit && table.at(u, x) == x && table.at(x, u) == x;
        is_zero = is_zero && table.at(u, x) == u && table.at(x, u) == u;
      }
      if (is_unit && !unit) {
        unit = u;
      }
      if (is_zero && !zero) {
        zero = u;
      }
    }

    auto shared  = std::make_shared<std::vector<Index> const>(table.table);
    auto product = [shared, n](Index x, Index y) {
      return (*shared)[static_cast<std::size_t>(x) * n + y];
    };
    return std::make_shared<Semigroup const>(
        n, product, std::move(*inverse), unit, zero, table.labels, std::move(name));
  }

  std::vector<Index> subsemigroup_closure(Semigroup const&       s,
                                          std::span<Index const> generators) {
    std::vector<bool>  in(s.size(), false);
    std::vector<Index> elements;
    for (Index g : generators) {
      if (g >= s.size()) {
        throw UsageError("generator " + std::to_string(g) + " is out of range");
      }
      if (!in[g]) {
        in[g] = true;
        elements.push_back(g);
      }
    }
    std::vector<Index> gens = elements;
    // Right Cayley graph search: every product is a word in the generators.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (Index g : gens) {
        Index const p = s.product(elements[i], g);
        if (!in[p]) {
          in[p] = true;
          elements.push_back(p);
        }
      }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
  }

  AxiomReport check_inverse_semigroup(Semigroup const&         s,
                                      AxiomCheckOptions const& opts) {
    AxiomReport report;
    auto const  n    = static_cast<Index>(s.size());
    auto        fail = [&](std::string msg) {
      report.ok      = false;
      report.failure = std::move(msg);
      return report;
    };
    auto const L = [&](Index x) { return s.label(x); };

    for (Index x = 0; x < n; ++x) {
      Index const xi = s.inverse(x);
      if (s.product(s.product(x, xi), x) != x) {
        return fail("x x' x != x for x = " + L(x));
      }
      if (s.product(s.product(xi, x), xi) != xi) {
        return fail("x' x x' != x' for x = " + L(x));
      }
      if (s.inverse(xi) != x) {
        return fail("inversion is not an involution at " + L(x));
      }
      if (auto u = s.unit(); u && (s.product(*u, x) != x || s.product(x, *u) != x)) {
        return fail("unit law fails at " + L(x));
      }
      if (auto z = s.zero(); z && (s.product(*z, x) != *z || s.product(x, *z) != *z)) {
        return fail("zero law fails at " + L(x));
      }
    }

    auto const& idem = s.idempotents();
    for (Index e : idem) {
      for (Index f : idem) {
        if (s.product(e, f) != s.product(f, e)) {
          return fail("idempotents " + L(e) + " and " + L(f) + " do not commute");
        }
      }
    }

    std::mt19937_64                      rng(opts.seed);
    std::uniform_int_distribution<Index> pick(0, n == 0 ? 0 : n - 1);
    bool const exhaustive = s.size() <= opts.exhaustive_limit;

    auto anti_hom = [&](Index x, Index y) {
      return s.inverse(s.product(x, y)) == s.product(s.inverse(y), s.inverse(x));
    };
    if (exhaustive) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          if (!anti_hom(x, y)) {
            return fail("(xy)' != y'x' for x = " + L(x) + ", y = " + L(y));
          }
        }
      }
    } else {
      for (std::size_t i = 0; i < opts.sampled_triples; ++i) {
        Index x = pick(rng), y = pick(rng);
        if (!anti_hom(x, y)) {
          return fail("(xy)' != y'x' for x = " + L(x) + ", y = " + L(y));
        }
      }
    }

    auto assoc = [&](Index x, Index y, Index z) {
      return s.product(s.product(x, y), z) == s.product(x, s.product(y, z));
    };
    auto assoc_fail = [&](Index x, Index y, Index z) {
      return fail("associativity fails at (" + L(x) + ", " + L(y) + ", " + L(z) + ")");
    };
    if (exhaustive) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          for (Index z = 0; z < n; ++z) {
            if (!assoc(x, y, z)) {
              return assoc_fail(x, y, z);
            }
          }
        }
      }
      report.associativity_triples    = static_cast<std::size_t>(n) * n * n;
      report.associativity_exhaustive = true;
    } else {
      for (std::size_t i = 0; i < opts.sampled_triples; ++i) {
        Index x = pick(rng), y = pick(rng), z = pick(rng);
        if (!assoc(x, y, z)) {
          return assoc_fail(x, y, z);
        }
      }
      report.associativity_triples = opts.sampled_triples;
    }
    return report;
  }

}  // namespace semicross
