#include "semicross/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <string>

#include "semicross/error.hpp"

namespace semicross {

  namespace {
    constexpr Index kUnmapped = std::numeric_limits<Index>::max();

    using Signature = std::array<std::size_t, 9>;

    // Isomorphism-invariant data of each element.
    std::vector<Signature> signatures(CayleyTable const& t) {
      auto const             n = static_cast<Index>(t.size);
      std::vector<Signature> sig(n);
      for (Index x = 0; x < n; ++x) {
        Signature& s = sig[x];
        s[0]         = t.at(x, x) == x;
        // Index and period of the monogenic subsemigroup <x>.
        std::vector<std::size_t> first_seen(n, 0);
        Index                    power = x;
        for (std::size_t k = 1;; ++k) {
          if (first_seen[power] != 0) {
            s[1] = first_seen[power];
            s[2] = k - first_seen[power];
            break;
          }
          first_seen[power] = k;
          power             = t.at(power, x);
        }
        std::vector<bool> right(n, false), left(n, false);
        for (Index y = 0; y < n; ++y) {
          right[t.at(x, y)] = true;
          left[t.at(y, x)]  = true;
          s[5] += t.at(x, y) == y;
          s[6] += t.at(y, x) == y;
          s[7] += t.at(y, y) == x;
          s[8] += t.at(x, y) == x;
        }
        s[3] = static_cast<std::size_t>(std::count(right.begin(), right.end(), true));
        s[4] = static_cast<std::size_t>(std::count(left.begin(), left.end(), true));
      }
      return sig;
    }

    class Matcher {
     public:
      Matcher(CayleyTable const& a, CayleyTable const& b)
          : _a(a),
            _b(b),
            _sa(signatures(a)),
            _sb(signatures(b)),
            _fwd(a.size, kUnmapped),
            _bwd(b.size, kUnmapped) {}

      std::optional<std::vector<Index>> run() {
        auto sorted_a = _sa, sorted_b = _sb;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) {
          return std::nullopt;
        }
        std::map<Signature, std::size_t> multiplicity;
        for (auto const& s : _sb) {
          ++multiplicity[s];
        }
        choose_generators(multiplicity);
        if (search(0)) {
          return _fwd;
        }
        return std::nullopt;
      }

     private:
      // Greedy generating set of `a`, preferring elements whose invariants
      // are rare so that few images need to be tried.
      void choose_generators(std::map<Signature, std::size_t> const& multiplicity) {
        std::vector<Index> order(_a.size);
        for (Index x = 0; x < _a.size; ++x) {
          order[x] = x;
        }
        std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
          return multiplicity.at(_sa[x]) < multiplicity.at(_sa[y]);
        });
        std::vector<bool>  covered(_a.size, false);
        std::vector<Index> span;
        for (Index g : order) {
          if (covered[g]) {
            continue;
          }
          _generators.push_back(g);
          covered[g] = true;
          span.push_back(g);
          // Re-close: products of the span with every generator.
          for (std::size_t i = 0; i < span.size(); ++i) {
            for (Index h : _generators) {
              for (Index p : {_a.at(span[i], h), _a.at(h, span[i])}) {
                if (!covered[p]) {
                  covered[p] = true;
                  span.push_back(p);
                }
              }
            }
          }
        }
      }

      // Adds x -> y and everything it forces. False on a contradiction.
      bool assign(Index x, Index y) {
        std::vector<std::pair<Index, Index>> queue{{x, y}};
        while (!queue.empty()) {
          auto [u, v] = queue.back();
          queue.pop_back();
          if (_fwd[u] == v) {
            continue;
          }
          if (_fwd[u] != kUnmapped || _bwd[v] != kUnmapped || _sa[u] != _sb[v]) {
            return false;
          }
          _fwd[u] = v;
          _bwd[v] = u;
          _trail.push_back(u);
          for (Index w : _trail) {
            Index const fw = _fwd[w];
            queue.emplace_back(_a.at(u, w), _b.at(v, fw));
            queue.emplace_back(_a.at(w, u), _b.at(fw, v));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Index const u = _trail.back();
          _trail.pop_back();
          _bwd[_fwd[u]] = kUnmapped;
          _fwd[u]       = kUnmapped;
        }
      }

      bool search(std::size_t i) {
        if (i == _generators.size()) {
          return _trail.size() == _a.size;
        }
        Index const g = _generators[i];
        if (_fwd[g] != kUnmapped) {
          return search(i + 1);
        }
        for (Index y = 0; y < _b.size; ++y) {
          if (_bwd[y] != kUnmapped || _sb[y] != _sa[g]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(g, y) && search(i + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      CayleyTable const&     _a;
      CayleyTable const&     _b;
      std::vector<Signature> _sa, _sb;
      std::vector<Index>     _fwd, _bwd;
      std::vector<Index>     _generators;
      std::vector<Index>     _trail;  // mapped elements, in order
    };
  }  // namespace

  std::optional<std::vector<Index>> are_isomorphic(CayleyTable const& a,
                                                   CayleyTable const& b,
                                                   std::size_t        limit) {
    if (a.size > limit || b.size > limit) {
      throw ResourceError("isomorphism search is limited to "
                          + std::to_string(limit) + " elements");
    }
    if (a.size != b.size) {
      return std::nullopt;
    }
    return Matcher(a, b).run();
  }

  std::optional<std::vector<Index>> are_isomorphic(Semigroup const& a,
                                                   Semigroup const& b,
                                                   std::size_t      limit) {
    if (a.size() > limit || b.size() > limit) {
      throw ResourceError("isomorphism search is limited to "
                          + std::to_string(limit) + " elements");
    }
    return are_isomorphic(a.cayley_table(), b.cayley_table(), limit);
  }

}  // namespace semicross
