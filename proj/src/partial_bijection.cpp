#include "semicross/partial_bijection.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semicross/error.hpp"

namespace semicross {

  namespace {
    void check_points(std::size_t rank, std::span<Point const> points) {
      if (points.empty()) {
        throw UsageError("a cycle or chain needs at least one point");
      }
      std::vector<bool> seen(rank + 1, false);
      for (Point x : points) {
        if (x == 0 || x > rank) {
          throw UsageError("point " + std::to_string(x) + " is out of range 1.."
                           + std::to_string(rank));
        }
        if (seen[x]) {
          throw UsageError("point " + std::to_string(x) + " repeated");
        }
        seen[x] = true;
      }
    }
  }  // namespace

  PartialBijection::PartialBijection(std::size_t rank)
      : _images(rank, kUndefined) {}

  PartialBijection PartialBijection::from_images(std::vector<Point> images) {
    std::vector<bool> hit(images.size() + 1, false);
    for (Point y : images) {
      if (y == kUndefined) {
        continue;
      }
      if (y > images.size()) {
        throw UsageError("image " + std::to_string(y) + " is out of range 1.."
                         + std::to_string(images.size()));
      }
      if (hit[y]) {
        throw UsageError("image " + std::to_string(y)
                         + " is hit twice; the map is not injective");
      }
      hit[y] = true;
    }
    PartialBijection result;
    result._images = std::move(images);
    return result;
  }

  PartialBijection PartialBijection::identity(std::size_t rank) {
    std::vector<Point> images(rank);
    std::iota(images.begin(), images.end(), Point(1));
    return from_images(std::move(images));
  }

  PartialBijection PartialBijection::partial_identity(std::size_t rank,
                                                      std::span<Point const> domain) {
    std::vector<Point> images(rank, kUndefined);
    for (Point x : domain) {
      if (x == 0 || x > rank) {
        throw UsageError("point " + std::to_string(x) + " is out of range");
      }
      images[x - 1] = x;
    }
    return from_images(std::move(images));
  }

  std::vector<Point> PartialBijection::domain() const {
    std::vector<Point> result;
    for (Point x = 1; x <= _images.size(); ++x) {
      if (_images[x - 1] != kUndefined) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Point> PartialBijection::range() const {
    std::vector<Point> result;
    for (Point y : _images) {
      if (y != kUndefined) {
        result.push_back(y);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::size_t PartialBijection::domain_size() const noexcept {
    return _images.size()
           - std::count(_images.begin(), _images.end(), kUndefined);
  }

  PartialBijection compose(PartialBijection const& a, PartialBijection const& b) {
    if (a.rank() != b.rank()) {
      throw UsageError("cannot compose elements of rank " + std::to_string(a.rank())
                       + " and " + std::to_string(b.rank()));
    }
    std::vector<Point> images(a.rank(), kUndefined);
    for (Point x = 1; x <= a.rank(); ++x) {
      images[x - 1] = b(a(x));
    }
    return PartialBijection::from_images(std::move(images));
  }

  PartialBijection inverse(PartialBijection const& a) {
    std::vector<Point> images(a.rank(), kUndefined);
    for (Point x = 1; x <= a.rank(); ++x) {
      if (Point y = a(x); y != kUndefined) {
        images[y - 1] = x;
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  PartialBijection cycle(std::size_t rank, std::span<Point const> points) {
    check_points(rank, points);
    auto images = std::vector<Point>(rank);
    std::iota(images.begin(), images.end(), Point(1));
    for (std::size_t i = 0; i < points.size(); ++i) {
      images[points[i] - 1] = points[(i + 1) % points.size()];
    }
    return PartialBijection::from_images(std::move(images));
  }

  PartialBijection chain(std::size_t rank, std::span<Point const> points) {
    check_points(rank, points);
    auto images = std::vector<Point>(rank);
    std::iota(images.begin(), images.end(), Point(1));
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      images[points[i] - 1] = points[i + 1];
    }
    images[points.back() - 1] = kUndefined;
    return PartialBijection::from_images(std::move(images));
  }

  bool is_idempotent(PartialBijection const& a) {
    for (Point x = 1; x <= a.rank(); ++x) {
      if (a(x) != kUndefined && a(x) != x) {
        return false;
      }
    }
    return true;
  }

  PartialBijection ChainDecomposition::recompose() const {
    auto result = PartialBijection::identity(rank);
    for (auto const& c : cycles) {
      result = compose(result, cycle(rank, c));
    }
    for (auto const& c : chains) {
      result = compose(result, chain(rank, c));
    }
    return result;
  }

  ChainDecomposition chain_decomposition(PartialBijection const& a) {
    std::size_t const  n = a.rank();
    ChainDecomposition result;
    result.rank = n;
    auto const         a_inv = inverse(a);
    std::vector<bool>  done(n + 1, false);

    // Chains start at points with no preimage and run until they leave dom(a).
    for (Point x = 1; x <= n; ++x) {
      if (a_inv(x) != kUndefined) {
        continue;
      }
      std::vector<Point> orbit;
      for (Point y = x; y != kUndefined; y = a(y)) {
        orbit.push_back(y);
        done[y] = true;
      }
      result.chains.push_back(std::move(orbit));
    }
    // Everything left lies on a periodic orbit.
    for (Point x = 1; x <= n; ++x) {
      if (done[x]) {
        continue;
      }
      std::vector<Point> orbit;
      for (Point y = x; !done[y]; y = a(y)) {
        orbit.push_back(y);
        done[y] = true;
      }
      if (orbit.size() >= 2) {
        result.cycles.push_back(std::move(orbit));
      }
    }
    // Both loops visit start points in increasing order, so the lists are
    // already sorted by first point and every cycle starts at its minimum.
    return result;
  }

  bool canonical_less(PartialBijection const& a, PartialBijection const& b) {
    if (a.rank() != b.rank()) {
      return a.rank() < b.rank();
    }
    if (a.domain_size() != b.domain_size()) {
      return a.domain_size() < b.domain_size();
    }
    auto const da = a.domain();
    auto const db = b.domain();
    if (da != db) {
      return da < db;
    }
    for (Point x : da) {
      if (a(x) != b(x)) {
        return a(x) < b(x);
      }
    }
    return false;
  }

  std::vector<PartialBijection> enumerate_isn(std::size_t n, std::size_t max_rank) {
    if (n > max_rank) {
      throw ResourceError("IS_" + std::to_string(n)
                          + " exceeds the enumeration limit n <= "
                          + std::to_string(max_rank));
    }
    std::vector<PartialBijection> result;
    // Depth first over the image of each point, skipping used targets.
    std::vector<Point> images(n, kUndefined);
    std::vector<int>   used(n + 1, 0);
    auto               recurse = [&](auto&& self, std::size_t pos) -> void {
      if (pos == n) {
        result.push_back(PartialBijection::from_images(images));
        return;
      }
      for (Point y = 0; y <= n; ++y) {
        if (y != kUndefined && used[y]) {
          continue;
        }
        images[pos] = y;
        if (y != kUndefined) {
          used[y] = 1;
        }
        self(self, pos + 1);
        if (y != kUndefined) {
          used[y] = 0;
        }
      }
    };
    recurse(recurse, 0);
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
  }

  std::size_t PartialBijectionHash::operator()(PartialBijection const& a) const noexcept {
    std::size_t h = a.rank();
    for (Point y : a.images()) {
      h = h * 31 + y;
    }
    return h;
  }

  IsnCatalog::IsnCatalog(std::size_t n, std::size_t max_rank)
      : _rank(n), _elements(enumerate_isn(n, max_rank)) {
    _index.reserve(_elements.size());
    for (std::uint32_t i = 0; i < _elements.size(); ++i) {
      _index.emplace(_elements[i], i);
    }
  }

  std::uint32_t IsnCatalog::index_of(PartialBijection const& a) const {
    auto it = _index.find(a);
    if (it == _index.end()) {
      throw UsageError("element of rank " + std::to_string(a.rank())
                       + " does not belong to IS_" + std::to_string(_rank));
    }
    return it->second;
  }

}  // namespace semicross
