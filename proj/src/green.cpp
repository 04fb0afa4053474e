#include "semicross/green.hpp"

#include <algorithm>
#include <map>

#include "semicross/error.hpp"

namespace semicross {

  std::string to_string(Relation rel) {
    return rel == Relation::R ? "R" : "L";
  }

  Relation relation_from_string(std::string_view text) {
    if (text == "R") {
      return Relation::R;
    }
    if (text == "L") {
      return Relation::L;
    }
    throw UsageError("relation must be R or L, not \"" + std::string(text) + "\"");
  }

  namespace {
    // Membership bitmap of xS^1 (right) or S^1x (left).
    std::vector<bool> principal_ideal(Semigroup const& s, Index x, Relation rel) {
      std::vector<bool> ideal(s.size(), false);
      ideal[x] = true;
      for (Index y = 0; y < s.size(); ++y) {
        ideal[rel == Relation::R ? s.product(x, y) : s.product(y, x)] = true;
      }
      return ideal;
    }
  }  // namespace

  bool r_related_generic(Semigroup const& s, Index x, Index y) {
    return principal_ideal(s, x, Relation::R) == principal_ideal(s, y, Relation::R);
  }

  bool l_related_generic(Semigroup const& s, Index x, Index y) {
    return principal_ideal(s, x, Relation::L) == principal_ideal(s, y, Relation::L);
  }

  bool r_related_isn(PartialBijection const& a, PartialBijection const& b) {
    if (a.rank() != b.rank()) {
      throw UsageError("elements of different rank");
    }
    return a.domain() == b.domain();
  }

  bool l_related_isn(PartialBijection const& a, PartialBijection const& b) {
    if (a.rank() != b.rank()) {
      throw UsageError("elements of different rank");
    }
    return a.range() == b.range();
  }

  GreenClassPartition green_classes(Semigroup const& s, Relation rel) {
    if (s.size() > element_limit()) {
      throw ResourceError("semigroup too large for class enumeration");
    }
    GreenClassPartition result;
    result.relation = rel;
    result.class_of.resize(s.size());
    std::map<std::vector<bool>, Index> seen;
    for (Index x = 0; x < s.size(); ++x) {
      auto [it, fresh] = seen.emplace(principal_ideal(s, x, rel),
                                      static_cast<Index>(result.classes.size()));
      if (fresh) {
        result.classes.emplace_back();
      }
      result.class_of[x] = it->second;
      result.classes[it->second].push_back(x);
    }
    for (auto const& cls : result.classes) {
      std::vector<Index> idem;
      std::copy_if(cls.begin(), cls.end(), std::back_inserter(idem),
                   [&s](Index x) { return s.is_idempotent(x); });
      if (idem.size() != 1) {
        throw VerificationError(to_string(rel) + "-class of " + s.label(cls.front())
                                + " contains " + std::to_string(idem.size())
                                + " idempotents");
      }
      result.representatives.push_back(idem.front());
    }
    return result;
  }

  GreenClassPartition const& GreenCache::classes(Relation rel) const {
    auto const i = static_cast<std::size_t>(rel);
    std::call_once(_once[i], [&] { _parts[i] = green_classes(*_s, rel); });
    return _parts[i];
  }

  WreathGreen::WreathGreen(WreathPtr w)
      : _w(std::move(w)), _inner(_w->inner_ptr()) {}

  bool WreathGreen::r_related(Index x, Index y) const {
    auto const& a = _w->top(x);
    auto const& b = _w->top(y);
    if (a.domain() != b.domain()) {
      return false;
    }
    for (Point z : a.domain()) {
      if (!_inner.related(Relation::R, *_w->value(x, z), *_w->value(y, z))) {
        return false;
      }
    }
    return true;
  }

  bool WreathGreen::l_related(Index x, Index y) const {
    auto const& a = _w->top(x);
    auto const& b = _w->top(y);
    if (a.range() != b.range()) {
      return false;
    }
    auto const fa = pmap_pullback(_w->element(x).f, inverse(a));
    auto const gb = pmap_pullback(_w->element(y).f, inverse(b));
    for (Point z : a.range()) {
      if (!_inner.related(Relation::L, *fa(z), *gb(z))) {
        return false;
      }
    }
    return true;
  }

}  // namespace semicross
