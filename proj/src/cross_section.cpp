#include "semicross/cross_section.hpp"

#include <algorithm>
#include <cctype>

#include "semicross/error.hpp"
#include "semicross/notation.hpp"

namespace semicross {

  OrderedPartition::OrderedPartition(std::size_t n, std::vector<std::vector<Point>> blocks)
      : _n(n), _blocks(std::move(blocks)) {
    std::vector<bool> seen(n + 1, false);
    std::size_t       total = 0;
    for (auto const& b : _blocks) {
      if (b.empty()) {
        throw UsageError("ordered partition blocks must be nonempty");
      }
      for (Point x : b) {
        if (x == 0 || x > n) {
          throw UsageError("point " + std::to_string(x) + " is out of range 1.."
                           + std::to_string(n));
        }
        if (seen[x]) {
          throw UsageError("point " + std::to_string(x)
                           + " occurs in more than one place");
        }
        seen[x] = true;
        ++total;
      }
    }
    if (total != n) {
      throw UsageError("ordered partition does not cover 1.." + std::to_string(n));
    }
    std::sort(_blocks.begin(), _blocks.end(), [](auto const& a, auto const& b) {
      return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
  }

  OrderedPartition OrderedPartition::parse(std::string_view text, std::size_t n) {
    std::vector<std::vector<Point>> blocks(1);
    std::size_t                     pos = 0;
    auto skip = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
        ++pos;
      }
    };
    while (true) {
      skip();
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("expected a point", pos);
      }
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
        if (value > n) {
          throw ParseError("point out of range 1.." + std::to_string(n), pos - 1);
        }
      }
      blocks.back().push_back(static_cast<Point>(value));
      skip();
      if (pos == text.size()) {
        break;
      }
      if (text[pos] == '|') {
        blocks.emplace_back();
      } else if (text[pos] != '<') {
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      }
      ++pos;
    }
    return OrderedPartition(n, std::move(blocks));
  }

  std::size_t OrderedPartition::block_of(Point x) const {
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      if (std::find(_blocks[i].begin(), _blocks[i].end(), x) != _blocks[i].end()) {
        return i;
      }
    }
    throw UsageError("point " + std::to_string(x) + " is not in the partition");
  }

  std::string OrderedPartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      if (i != 0) {
        out += '|';
      }
      for (std::size_t j = 0; j < _blocks[i].size(); ++j) {
        if (j != 0) {
          out += '<';
        }
        out += std::to_string(_blocks[i][j]);
      }
    }
    return out;
  }

  CrossSectionCheck is_cross_section(Semigroup const&           s,
                                     GreenClassPartition const& classes,
                                     std::span<Index const>     members) {
    std::vector<bool> in(s.size(), false);
    for (Index x : members) {
      if (x >= s.size()) {
        return {false, "member index " + std::to_string(x) + " out of range"};
      }
      in[x] = true;
    }
    std::vector<std::optional<Index>> hit(classes.size());
    for (Index x : members) {
      auto& slot = hit[classes.class_of[x]];
      if (slot && *slot != x) {
        return {false,
                to_string(classes.relation) + "-class of "
                    + s.label(classes.representatives[classes.class_of[x]])
                    + " contains both " + s.label(*slot) + " and " + s.label(x)};
      }
      slot = x;
    }
    for (std::size_t c = 0; c < hit.size(); ++c) {
      if (!hit[c]) {
        return {false,
                to_string(classes.relation) + "-class of "
                    + s.label(classes.representatives[c]) + " is not met"};
      }
    }
    for (Index x : members) {
      for (Index y : members) {
        Index const p = s.product(x, y);
        if (!in[p]) {
          return {false,
                  "product " + s.label(x) + " * " + s.label(y) + " = " + s.label(p)
                      + " is not a member"};
        }
      }
    }
    return {};
  }

  CrossSectionCheck is_cross_section(Semigroup const&       s,
                                     Relation               rel,
                                     std::span<Index const> members) {
    return is_cross_section(s, green_classes(s, rel), members);
  }

  void verify(CrossSection const& c, GreenClassPartition const& classes) {
    if (classes.relation != c.relation) {
      throw UsageError("class partition is for the wrong relation");
    }
    if (auto check = is_cross_section(*c.ambient, classes, c.members); !check) {
      throw VerificationError("not an " + to_string(c.relation)
                              + "-cross-section of " + c.ambient->name() + ": "
                              + check.witness);
    }
  }

  void verify(CrossSection const& c) {
    verify(c, green_classes(*c.ambient, c.relation));
  }

  namespace {
    CrossSection make_section(SemigroupPtr ambient, Relation rel, std::vector<Index> members) {
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      return CrossSection{std::move(ambient), rel, std::move(members)};
    }

    void require_isn(SemigroupPtr const& isn, IsnCatalog const& catalog) {
      if (!isn || isn->size() != catalog.size()
          || isn->name() != "IS_" + std::to_string(catalog.rank())) {
        throw UsageError("expected the semigroup IS_" + std::to_string(catalog.rank()));
      }
    }
  }  // namespace

  PartialBijection chain_generator(OrderedPartition const& p, std::size_t i, std::size_t j) {
    if (i == 0 || i > p.number_of_blocks()) {
      throw UsageError("block index " + std::to_string(i) + " out of range");
    }
    auto const& block = p.block(i - 1);
    if (j == 0 || j > block.size()) {
      throw UsageError("chain length " + std::to_string(j) + " out of range");
    }
    return chain(p.rank(), std::span<Point const>(block.data(), j));
  }

  CrossSection build_isn_r_cross_section(SemigroupPtr const& isn, OrderedPartition const& p) {
    IsnCatalog const catalog(p.rank());
    require_isn(isn, catalog);
    std::vector<Index> generators{catalog.index_of(PartialBijection::identity(p.rank()))};
    for (std::size_t i = 1; i <= p.number_of_blocks(); ++i) {
      for (std::size_t j = 1; j <= p.block(i - 1).size(); ++j) {
        generators.push_back(catalog.index_of(chain_generator(p, i, j)));
      }
    }
    auto c = make_section(isn, Relation::R, subsemigroup_closure(*isn, generators));
    verify(c);
    return c;
  }

  CrossSection build_wreath_r_cross_section(WreathProduct const&          w,
                                            OrderedPartition const&       p,
                                            std::span<CrossSection const> inner) {
    if (p.rank() != w.rank()) {
      throw UsageError("partition rank differs from the wreath's top rank");
    }
    if (inner.size() != p.number_of_blocks()) {
      throw UsageError("need one inner cross-section per block");
    }
    for (auto const& c : inner) {
      if (c.relation != Relation::R || c.ambient.get() != w.inner_ptr().get()) {
        throw UsageError("inner cross-sections must be R-cross-sections of the "
                         "wreath's inner semigroup");
      }
    }
    auto const isn = from_isn(w.rank());
    auto const top = build_isn_r_cross_section(isn, p);

    std::vector<Index> members;
    for (Index t : top.members) {
      // from_isn and the wreath's top catalog share the canonical order.
      auto const         dom = w.top_catalog()[t].domain();
      std::vector<std::span<Index const>> choices;
      for (Point x : dom) {
        choices.emplace_back(inner[p.block_of(x)].members);
      }
      std::vector<std::size_t> digit(dom.size(), 0);
      std::vector<Index>       values(dom.size());
      while (true) {
        for (std::size_t i = 0; i < dom.size(); ++i) {
          values[i] = choices[i][digit[i]];
        }
        members.push_back(w.index_of(t, values));
        std::size_t i = dom.size();
        while (i > 0 && ++digit[i - 1] == choices[i - 1].size()) {
          digit[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    auto c = make_section(w.semigroup(), Relation::R, std::move(members));
    verify(c);
    return c;
  }

  CrossSection invert_cross_section(CrossSection const& c) {
    std::vector<Index> members;
    for (Index x : c.members) {
      members.push_back(c.ambient->inverse(x));
    }
    auto result = make_section(c.ambient, dual(c.relation), std::move(members));
    verify(result);
    return result;
  }

  CrossSection project_first(WreathProduct const& w,
                             SemigroupPtr const&  isn,
                             CrossSection const&  c) {
    require_isn(isn, w.top_catalog());
    std::vector<Index> members;
    for (Index x : c.members) {
      members.push_back(w.top_index(x));
    }
    auto result = make_section(isn, c.relation, std::move(members));
    verify(result);
    return result;
  }

  CrossSection project_second(WreathProduct const& w, CrossSection const& c) {
    auto const zero = w.inner().zero();
    if (!zero) {
      throw UsageError("the second projection needs a zero in the inner semigroup");
    }
    Index const        id = w.top_catalog().index_of(PartialBijection::identity(w.rank()));
    std::vector<Index> members;
    for (Index x : c.members) {
      if (w.top_index(x) != id) {
        continue;
      }
      bool rest_zero = true;
      for (Point p = 2; p <= w.rank(); ++p) {
        rest_zero = rest_zero && w.value(x, p) == zero;
      }
      if (rest_zero) {
        members.push_back(*w.value(x, 1));
      }
    }
    auto result = make_section(w.inner_ptr(), c.relation, std::move(members));
    verify(result);
    return result;
  }

  void check_automorphism(Semigroup const& s, std::span<Index const> psi) {
    if (psi.size() != s.size()) {
      throw UsageError("automorphism has the wrong length");
    }
    std::vector<bool> hit(s.size(), false);
    for (Index y : psi) {
      if (y >= s.size() || hit[y]) {
        throw UsageError("map is not a bijection");
      }
      hit[y] = true;
    }
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        if (psi[s.product(x, y)] != s.product(psi[x], psi[y])) {
          throw UsageError("map does not preserve the product at (" + s.label(x)
                           + ", " + s.label(y) + ")");
        }
      }
    }
  }

  CrossSection apply_automorphism(CrossSection const& c, std::span<Index const> psi) {
    check_automorphism(*c.ambient, psi);
    std::vector<Index> members;
    for (Index x : c.members) {
      members.push_back(psi[x]);
    }
    auto result = make_section(c.ambient, c.relation, std::move(members));
    verify(result);
    return result;
  }

  std::vector<Index> conjugation_automorphism(IsnCatalog const&       isn,
                                              PartialBijection const& pi) {
    if (pi.rank() != isn.rank() || pi.domain_size() != pi.rank()) {
      throw UsageError("conjugation needs a permutation of the same rank");
    }
    auto const         pi_inv = inverse(pi);
    std::vector<Index> psi;
    psi.reserve(isn.size());
    for (auto const& a : isn.elements()) {
      psi.push_back(isn.index_of(compose(compose(pi_inv, a), pi)));
    }
    return psi;
  }

  std::vector<Index> theta_map(WreathProduct const& w, std::span<Index const> phi) {
    Semigroup const& s    = w.inner();
    auto const       unit = s.unit();
    if (!unit) {
      throw UsageError("the conjugation needs a unit in the inner semigroup");
    }
    if (phi.size() != w.rank()) {
      throw UsageError("need one unit per point");
    }
    for (Index u : phi) {
      if (u >= s.size() || s.product(u, s.inverse(u)) != *unit
          || s.product(s.inverse(u), u) != *unit) {
        throw UsageError("conjugating element " + (u < s.size() ? s.label(u) : "?")
                         + " is not a unit");
      }
    }
    std::vector<Index> map(w.size());
    for (Index x = 0; x < w.size(); ++x) {
      auto const&        a = w.top(x);
      std::vector<Index> values;
      for (Point p : a.domain()) {
        values.push_back(s.product(s.product(phi[p - 1], *w.value(x, p)),
                                   s.inverse(phi[a(p) - 1])));
      }
      map[x] = w.index_of(w.top_index(x), values);
    }
    return map;
  }

  CrossSection theta_conjugate(WreathProduct const&   w,
                               CrossSection const&    c,
                               std::span<Index const> phi) {
    if (c.ambient.get() != w.semigroup().get()) {
      throw UsageError("cross-section does not live in this wreath product");
    }
    return apply_automorphism(c, theta_map(w, phi));
  }

}  // namespace semicross
