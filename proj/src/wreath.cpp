#include "semicross/wreath.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "semicross/error.hpp"
#include "semicross/notation.hpp"

namespace semicross {

  namespace {
    constexpr Index kNoValue = std::numeric_limits<Index>::max();

    void require_same_base(std::size_t m1, std::size_t m2) {
      if (m1 != m2) {
        throw UsageError("partial maps over bases of size " + std::to_string(m1)
                         + " and " + std::to_string(m2));
      }
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Positions of `sep` not nested inside () or [].
    std::vector<std::size_t> split_points(std::string_view s, char sep) {
      std::vector<std::size_t> result;
      int                      depth = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        char const c = s[i];
        if (c == '(' || c == '[') {
          ++depth;
        } else if (c == ')' || c == ']') {
          --depth;
        } else if (c == sep && depth == 0) {
          result.push_back(i);
        }
      }
      return result;
    }

    std::string format_data(WreathProduct::Data const& d, Index x) {
      std::string out = "(";
      bool        first = true;
      for (Point p = 1; p <= d.rank; ++p) {
        Index const v = d.values[static_cast<std::size_t>(x) * d.rank + p - 1];
        if (v == kNoValue) {
          continue;
        }
        if (!first) {
          out += ", ";
        }
        first = false;
        out += std::to_string(p) + ":" + d.inner->label(v);
      }
      out += "; " + format_element((*d.top)[d.top_index[x]]) + ")";
      return out;
    }

    Index parse_data(WreathProduct::Data const& d, std::string_view text) {
      std::string_view body = trim(text);
      if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
        throw ParseError("a wreath element must be written (f; a)", 0);
      }
      body         = body.substr(1, body.size() - 2);
      auto const semis = split_points(body, ';');
      if (semis.size() != 1) {
        throw ParseError("expected exactly one top-level ';'", 0);
      }
      std::string_view const assignment = trim(body.substr(0, semis[0]));
      std::string_view const top_text   = trim(body.substr(semis[0] + 1));
      auto const             top        = parse_element(top_text, d.rank);

      std::vector<Index> values(d.rank, kNoValue);
      if (!assignment.empty()) {
        std::size_t start = 0;
        auto        cuts  = split_points(assignment, ',');
        cuts.push_back(assignment.size());
        for (std::size_t cut : cuts) {
          std::string_view const pair  = trim(assignment.substr(start, cut - start));
          start                        = cut + 1;
          std::size_t const colon      = pair.find(':');
          if (colon == std::string_view::npos) {
            throw ParseError("expected point:element", 0);
          }
          std::string const point_text(trim(pair.substr(0, colon)));
          std::size_t       used  = 0;
          unsigned long     point = 0;
          try {
            point = std::stoul(point_text, &used);
          } catch (std::exception const&) {
            used = 0;
          }
          if (used != point_text.size() || point == 0 || point > d.rank) {
            throw UsageError("bad point \"" + point_text + "\" in wreath element");
          }
          if (values[point - 1] != kNoValue) {
            throw UsageError("point " + point_text + " assigned twice");
          }
          values[point - 1] = d.inner->parse(trim(pair.substr(colon + 1)));
        }
      }
      std::vector<Index> along;
      for (Point p = 1; p <= d.rank; ++p) {
        bool const in_f = values[p - 1] != kNoValue;
        if (in_f != top.is_defined(p)) {
          throw UsageError("dom(f) must equal dom(a) in a wreath element");
        }
        if (in_f) {
          along.push_back(values[p - 1]);
        }
      }
      return d.locate(d.top->index_of(top), along);
    }
  }  // namespace

  std::vector<Point> PartialMapToS::domain() const {
    std::vector<Point> result;
    for (Point x = 1; x <= base; ++x) {
      if (values[x - 1]) {
        result.push_back(x);
      }
    }
    return result;
  }

  PartialMapToS pmap_product(Semigroup const&     s,
                             PartialMapToS const& f,
                             PartialMapToS const& g) {
    require_same_base(f.base, g.base);
    PartialMapToS result(f.base);
    for (Point x = 1; x <= f.base; ++x) {
      if (f(x) && g(x)) {
        result.values[x - 1] = s.product(*f(x), *g(x));
      }
    }
    return result;
  }

  PartialMapToS pmap_pullback(PartialMapToS const& f, PartialBijection const& a) {
    require_same_base(f.base, a.rank());
    PartialMapToS result(f.base);
    for (Point x = 1; x <= f.base; ++x) {
      if (Point const xa = a(x); xa != kUndefined) {
        result.values[x - 1] = f(xa);
      }
    }
    return result;
  }

  WreathElement wreath_multiply(Semigroup const&     s,
                                WreathElement const& x,
                                WreathElement const& y) {
    require_same_base(x.a.rank(), y.a.rank());
    return {pmap_product(s, x.f, pmap_pullback(y.f, x.a)), compose(x.a, y.a)};
  }

  WreathElement wreath_inverse(Semigroup const& s, WreathElement const& x) {
    auto const    a_inv = inverse(x.a);
    PartialMapToS g(x.f.base);
    for (Point y = 1; y <= g.base; ++y) {
      if (Point const pre = a_inv(y); pre != kUndefined && x.f(pre)) {
        g.values[y - 1] = s.inverse(*x.f(pre));
      }
    }
    return {std::move(g), a_inv};
  }

  bool is_wreath_idempotent(Semigroup const& s, WreathElement const& x) {
    if (!is_idempotent(x.a)) {
      return false;
    }
    for (Point p = 1; p <= x.f.base; ++p) {
      if (x.f(p) && !s.is_idempotent(*x.f(p))) {
        return false;
      }
    }
    return true;
  }

  void validate(Semigroup const& s, WreathElement const& x) {
    require_same_base(x.f.base, x.a.rank());
    for (Point p = 1; p <= x.f.base; ++p) {
      if (x.f(p).has_value() != x.a.is_defined(p)) {
        throw UsageError("dom(f) must equal dom(a) in a wreath element");
      }
      if (x.f(p) && *x.f(p) >= s.size()) {
        throw UsageError("value out of range for the inner semigroup");
      }
    }
  }

  Index WreathProduct::Data::locate(Index t, std::span<Index const> vals) const {
    auto const&       a = (*top)[t];
    std::size_t const s = inner->size();
    if (vals.size() != a.domain_size()) {
      throw UsageError("wrong number of values for the top component");
    }
    std::size_t idx = 0;
    for (Index v : vals) {
      if (v >= s) {
        throw UsageError("value out of range for the inner semigroup");
      }
      idx = idx * s + v;
    }
    return static_cast<Index>(offset[t] + idx);
  }

  Index WreathProduct::Data::multiply(Index x, Index y) const {
    std::size_t const T = top->size();
    Index const       a = top_index[x];
    Index const       c = top_table[a * T + top_index[y]];
    auto const&       ta = (*top)[a];
    auto const&       tc = (*top)[c];
    std::size_t const s  = inner->size();
    std::size_t       idx = 0;
    for (Point p = 1; p <= rank; ++p) {
      if (!tc.is_defined(p)) {
        continue;
      }
      Index const fx = values[static_cast<std::size_t>(x) * rank + p - 1];
      Index const gy = values[static_cast<std::size_t>(y) * rank + ta(p) - 1];
      idx            = idx * s + inner->product(fx, gy);
    }
    return static_cast<Index>(offset[c] + idx);
  }

  std::size_t wreath_size(std::size_t inner_size, std::size_t m) {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    // IS_m has C(m,d)^2 d! elements with domain size d.
    long double total = 0;
    for (std::size_t d = 0; d <= m; ++d) {
      long double binom = 1, term = 1;
      for (std::size_t i = 0; i < d; ++i) {
        binom = binom * static_cast<long double>(m - i) / static_cast<long double>(i + 1);
        term *= static_cast<long double>(i + 1) * static_cast<long double>(inner_size);
      }
      total += binom * binom * term;
    }
    if (total >= static_cast<long double>(kMax)) {
      return kMax;
    }
    return static_cast<std::size_t>(total + 0.5L);
  }

  WreathProduct::WreathProduct(SemigroupPtr inner, std::size_t m) {
    if (!inner) {
      throw UsageError("inner semigroup must not be null");
    }
    std::size_t const expected = wreath_size(inner->size(), m);
    if (expected > element_limit()) {
      throw ResourceError(inner->name() + " wr IS_" + std::to_string(m) + " has "
                          + std::to_string(expected)
                          + " elements, above the element limit of "
                          + std::to_string(element_limit()));
    }
    auto d   = std::make_shared<Data>();
    d->inner = std::move(inner);
    d->rank  = m;
    d->top   = std::make_shared<IsnCatalog const>(m);

    std::size_t const T = d->top->size();
    d->top_table.resize(T * T);
    d->top_inverse.resize(T);
    for (Index a = 0; a < T; ++a) {
      d->top_inverse[a] = d->top->index_of(semicross::inverse((*d->top)[a]));
      for (Index b = 0; b < T; ++b) {
        d->top_table[a * T + b] = d->top->index_of(compose((*d->top)[a], (*d->top)[b]));
      }
    }

    std::size_t const s = d->inner->size();
    d->top_index.reserve(expected);
    d->values.reserve(expected * m);
    for (Index t = 0; t < T; ++t) {
      d->offset.push_back(d->top_index.size());
      auto const  dom = (*d->top)[t].domain();
      std::size_t count = 1;
      for (std::size_t i = 0; i < dom.size(); ++i) {
        count *= s;
      }
      std::vector<Index> digits(dom.size(), 0);
      for (std::size_t j = 0; j < count; ++j) {
        d->top_index.push_back(t);
        std::vector<Index> row(m, kNoValue);
        for (std::size_t i = 0; i < dom.size(); ++i) {
          row[dom[i] - 1] = digits[i];
        }
        d->values.insert(d->values.end(), row.begin(), row.end());
        // Increment the mixed-radix counter, last digit fastest.
        for (std::size_t i = dom.size(); i-- > 0;) {
          if (++digits[i] < s) {
            break;
          }
          digits[i] = 0;
        }
      }
    }

    std::size_t const  n = d->top_index.size();
    std::vector<Index> inverses(n);
    std::vector<std::string> labels(n);
    for (Index x = 0; x < n; ++x) {
      Index const        a     = d->top_index[x];
      Index const        a_inv = d->top_inverse[a];
      auto const&        tinv  = (*d->top)[a_inv];
      std::vector<Index> along;
      for (Point y = 1; y <= m; ++y) {
        if (tinv.is_defined(y)) {
          along.push_back(d->inner->inverse(
              d->values[static_cast<std::size_t>(x) * m + tinv(y) - 1]));
        }
      }
      inverses[x] = d->locate(a_inv, along);
      labels[x]   = format_data(*d, x);
    }

    std::optional<Index> unit;
    if (auto u = d->inner->unit()) {
      std::vector<Index> along(m, *u);
      unit = d->locate(d->top->index_of(PartialBijection::identity(m)), along);
    }
    Index const zero = d->locate(d->top->index_of(PartialBijection(m)), {});

    std::string const inner_name = d->inner->name();
    std::string const name = (inner_name.find(' ') == std::string::npos
                                  ? inner_name
                                  : "(" + inner_name + ")")
                             + " wr IS_" + std::to_string(m);
    _data = d;
    std::shared_ptr<Data const> cd = d;
    _semigroup = std::make_shared<Semigroup const>(
        n,
        [cd](Index x, Index y) { return cd->multiply(x, y); },
        std::move(inverses),
        unit,
        zero,
        std::move(labels),
        name,
        [cd](std::string_view text) -> std::optional<Index> {
          return parse_data(*cd, text);
        });
  }

  std::optional<Index> WreathProduct::value(Index x, Point point) const {
    Index const v = _data->values[static_cast<std::size_t>(x) * _data->rank + point - 1];
    if (v == kNoValue) {
      return std::nullopt;
    }
    return v;
  }

  WreathElement WreathProduct::element(Index x) const {
    WreathElement e{PartialMapToS(_data->rank), top(x)};
    for (Point p = 1; p <= _data->rank; ++p) {
      e.f.values[p - 1] = value(x, p);
    }
    return e;
  }

  Index WreathProduct::index_of(WreathElement const& x) const {
    validate(inner(), x);
    if (x.a.rank() != _data->rank) {
      throw UsageError("wreath element has the wrong rank");
    }
    std::vector<Index> along;
    for (Point p : x.a.domain()) {
      along.push_back(*x.f(p));
    }
    return _data->locate(_data->top->index_of(x.a), along);
  }

  Index WreathProduct::index_of(Index top, std::span<Index const> values) const {
    return _data->locate(top, values);
  }

  std::string WreathProduct::format(Index x) const {
    return format_data(*_data, x);
  }

  Index WreathProduct::parse(std::string_view text) const {
    return parse_data(*_data, text);
  }

  WreathPtr build_wreath(SemigroupPtr inner, std::size_t m) {
    return std::make_shared<WreathProduct const>(std::move(inner), m);
  }

  WreathPtr iterated_wreath_structure(std::size_t n, std::size_t k) {
    if (k == 0) {
      throw UsageError("the number of tree levels must be at least 1");
    }
    if (k == 1) {
      return nullptr;
    }
    return build_wreath(iterated_wreath(n, k - 1), n);
  }

  SemigroupPtr iterated_wreath(std::size_t n, std::size_t k) {
    if (k == 0) {
      throw UsageError("the number of tree levels must be at least 1");
    }
    if (k == 1) {
      return from_isn(n);
    }
    return iterated_wreath_structure(n, k)->semigroup();
  }

}  // namespace semicross
