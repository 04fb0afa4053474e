#include "semicross/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <numeric>
#include <thread>

namespace semicross {

  std::vector<OrderedPartition> enumerate_ordered_partitions(std::size_t n) {
    if (n > 7) {
      throw ResourceError("ordered partitions are enumerated for n <= 7 only");
    }
    if (n == 0) {
      return {OrderedPartition(0, {})};
    }
    std::vector<OrderedPartition> result;
    // Set partitions via restricted growth strings, then every order on
    // every block.
    std::vector<std::size_t> growth(n, 0);
    while (true) {
      std::size_t const k = *std::max_element(growth.begin(), growth.end()) + 1;
      std::vector<std::vector<Point>> blocks(k);
      for (std::size_t i = 0; i < n; ++i) {
        blocks[growth[i]].push_back(static_cast<Point>(i + 1));
      }
      auto recurse = [&](auto&& self, std::size_t b) -> void {
        if (b == k) {
          result.emplace_back(n, blocks);
          return;
        }
        std::sort(blocks[b].begin(), blocks[b].end());
        do {
          self(self, b + 1);
        } while (std::next_permutation(blocks[b].begin(), blocks[b].end()));
      };
      recurse(recurse, 0);

      // Next restricted growth string.
      std::size_t i = n;
      while (i-- > 1) {
        std::size_t const bound =
            *std::max_element(growth.begin(), growth.begin() + static_cast<long>(i)) + 1;
        if (growth[i] < bound) {
          ++growth[i];
          std::fill(growth.begin() + static_cast<long>(i) + 1, growth.end(), 0);
          break;
        }
      }
      if (i == 0) {
        break;
      }
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      if (a.number_of_blocks() != b.number_of_blocks()) {
        return a.number_of_blocks() < b.number_of_blocks();
      }
      return a.blocks() < b.blocks();
    });
    return result;
  }

  Projection wreath_projection(WreathProduct const& w, Relation rel) {
    auto const& top = w.top_catalog();
    // Index the top components' classes by the bitmask of dom or ran.
    auto class_key = [&](PartialBijection const& a) {
      Index mask = 0;
      for (Point p : rel == Relation::R ? a.domain() : a.range()) {
        mask |= Index(1) << (p - 1);
      }
      return mask;
    };
    Projection proj;
    proj.key.resize(w.size());
    proj.value.resize(w.size());
    for (Index x = 0; x < w.size(); ++x) {
      proj.key[x]   = class_key(top[w.top_index(x)]);
      proj.value[x] = w.top_index(x);
    }
    return proj;
  }

  namespace {
    constexpr Index kOpen = std::numeric_limits<Index>::max();

    struct Problem {
      Semigroup const*                s = nullptr;
      std::vector<Index>              class_of;
      std::vector<std::vector<Index>> candidates;  // per class, in search order
      std::vector<Index>              order;       // classes in search order
      Projection const*               projection = nullptr;
      std::size_t                     key_count  = 0;
      std::chrono::steady_clock::time_point deadline;
    };

    class Searcher {
     public:
      Searcher(Problem const& p, std::atomic<bool>& timed_out)
          : _p(p),
            _timed_out(timed_out),
            _rep(p.candidates.size(), kOpen),
            _proj(p.key_count, kOpen) {}

      // Choose `x` and close; false (with the state unchanged) on conflict.
      bool try_add(Index x) {
        std::size_t const mark = _trail.size();
        std::size_t const pmark = _proj_trail.size();
        if (add(x)) {
          return true;
        }
        undo(mark, pmark);
        return false;
      }

      void run(std::size_t pos) {
        if (_timed_out.load(std::memory_order_relaxed)) {
          return;
        }
        if ((_nodes++ & 0xfff) == 0
            && std::chrono::steady_clock::now() > _p.deadline) {
          _timed_out = true;
          return;
        }
        while (pos < _p.order.size() && _rep[_p.order[pos]] != kOpen) {
          ++pos;
        }
        if (pos == _p.order.size()) {
          auto members = _chosen;
          std::sort(members.begin(), members.end());
          _found.push_back(std::move(members));
          return;
        }
        for (Index x : _p.candidates[_p.order[pos]]) {
          std::size_t const mark  = _trail.size();
          std::size_t const pmark = _proj_trail.size();
          if (add(x)) {
            run(pos + 1);
          }
          undo(mark, pmark);
        }
      }

      std::vector<std::vector<Index>>& found() noexcept {
        return _found;
      }
      std::size_t nodes() const noexcept {
        return _nodes;
      }

     private:
      bool add(Index x) {
        Semigroup const& s = *_p.s;
        _queue.clear();
        _queue.push_back(x);
        while (!_queue.empty()) {
          Index const z = _queue.back();
          _queue.pop_back();
          Index const c = _p.class_of[z];
          if (_rep[c] == z) {
            continue;
          }
          if (_rep[c] != kOpen) {
            return false;
          }
          if (_p.projection != nullptr) {
            Index const k = _p.projection->key[z];
            Index const v = _p.projection->value[z];
            if (_proj[k] == kOpen) {
              _proj[k] = v;
              _proj_trail.push_back(k);
            } else if (_proj[k] != v) {
              return false;
            }
          }
          _rep[c] = z;
          _trail.push_back(c);
          _chosen.push_back(z);
          for (Index y : _chosen) {
            _queue.push_back(s.product(z, y));
            _queue.push_back(s.product(y, z));
          }
        }
        return true;
      }

      void undo(std::size_t mark, std::size_t pmark) {
        while (_trail.size() > mark) {
          _rep[_trail.back()] = kOpen;
          _trail.pop_back();
          _chosen.pop_back();
        }
        while (_proj_trail.size() > pmark) {
          _proj[_proj_trail.back()] = kOpen;
          _proj_trail.pop_back();
        }
      }

      Problem const&                  _p;
      std::atomic<bool>&              _timed_out;
      std::vector<Index>              _rep;
      std::vector<Index>              _proj;
      std::vector<Index>              _trail;
      std::vector<Index>              _proj_trail;
      std::vector<Index>              _chosen;
      std::vector<Index>              _queue;
      std::vector<std::vector<Index>> _found;
      std::size_t                     _nodes = 0;
    };
  }  // namespace

  std::vector<CrossSection> brute_force_cross_sections(SemigroupPtr const& s,
                                                       Relation            rel,
                                                       SearchConfig const& cfg,
                                                       SearchStats*        stats) {
    auto const start = std::chrono::steady_clock::now();
    if (s->size() > cfg.max_semigroup_size) {
      throw ResourceError(s->name() + " has " + std::to_string(s->size())
                          + " elements, above the search limit of "
                          + std::to_string(cfg.max_semigroup_size));
    }
    auto const classes = green_classes(*s, rel);

    Problem p;
    p.s        = s.get();
    p.class_of = classes.class_of;
    p.candidates = classes.classes;
    p.deadline = start + cfg.timeout;
    if (cfg.prune_with_projection && cfg.projection) {
      if (cfg.projection->key.size() != s->size()
          || cfg.projection->value.size() != s->size()) {
        throw UsageError("projection does not match the semigroup");
      }
      p.projection = &*cfg.projection;
      p.key_count  = *std::max_element(cfg.projection->key.begin(),
                                      cfg.projection->key.end())
                    + 1;
    }

    std::vector<std::size_t> ideal_size(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Index const       e = classes.representatives[c];
      std::vector<bool> ideal(s->size(), false);
      for (Index y = 0; y < s->size(); ++y) {
        ideal[rel == Relation::R ? s->product(e, y) : s->product(y, e)] = true;
      }
      ideal_size[c] = static_cast<std::size_t>(std::count(ideal.begin(), ideal.end(), true));
    }
    p.order.resize(classes.size());
    std::iota(p.order.begin(), p.order.end(), Index(0));
    std::stable_sort(p.order.begin(), p.order.end(), [&](Index a, Index b) {
      return ideal_size[a] > ideal_size[b];
    });

    std::atomic<bool>               timed_out{false};
    std::vector<std::vector<Index>> found;
    std::size_t                     nodes = 0;

    std::size_t jobs = cfg.jobs != 0 ? cfg.jobs
                                     : std::max(1u, std::thread::hardware_concurrency());
    if (!cfg.parallel_branching || p.order.empty()) {
      jobs = 1;
    }
    if (jobs == 1) {
      Searcher searcher(p, timed_out);
      searcher.run(0);
      found = std::move(searcher.found());
      nodes = searcher.nodes();
    } else {
      // Each worker takes every jobs-th candidate of the first class.
      auto const& first = p.candidates[p.order.front()];
      std::vector<std::future<std::pair<std::vector<std::vector<Index>>, std::size_t>>>
          futures;
      for (std::size_t w = 0; w < jobs; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
          std::vector<std::vector<Index>> sets;
          std::size_t                     n = 0;
          for (std::size_t i = w; i < first.size(); i += jobs) {
            Searcher searcher(p, timed_out);
            if (searcher.try_add(first[i])) {
              searcher.run(1);
            }
            n += searcher.nodes();
            for (auto& m : searcher.found()) {
              sets.push_back(std::move(m));
            }
          }
          return std::pair{std::move(sets), n};
        }));
      }
      for (auto& f : futures) {
        auto [sets, n] = f.get();
        nodes += n;
        for (auto& m : sets) {
          found.push_back(std::move(m));
        }
      }
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<CrossSection> result;
    result.reserve(found.size());
    for (auto& m : found) {
      result.push_back(CrossSection{s, rel, std::move(m)});
    }
    if (stats != nullptr) {
      stats->nodes   = nodes;
      stats->elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
    }
    if (timed_out) {
      throw PartialResultError(std::move(result));
    }
    return result;
  }

}  // namespace semicross
