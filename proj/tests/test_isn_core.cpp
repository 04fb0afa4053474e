#include <doctest.h>

#include <set>

#include "semicross/error.hpp"
#include "semicross/notation.hpp"
#include "semicross/partial_bijection.hpp"

using namespace semicross;

namespace {

  PartialBijection pb(std::vector<Point> images) {
    return PartialBijection::from_images(std::move(images));
  }

  // All injective partial maps by brute force over (n+1)^n image vectors.
  std::vector<std::vector<Point>> all_partial_injections(std::size_t n) {
    std::vector<std::vector<Point>> out;
    std::vector<Point>              v(n, 0);
    while (true) {
      std::set<Point> used;
      bool            injective = true;
      for (Point p : v) {
        if (p != 0 && !used.insert(p).second) {
          injective = false;
        }
      }
      if (injective) {
        out.push_back(v);
      }
      std::size_t i = 0;
      while (i < n && ++v[i] > n) {
        v[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    return out;
  }

  std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  std::size_t isn_size_oracle(std::size_t n) {
    std::size_t total = 0, fact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        fact *= k;
      }
      total += binom(n, k) * binom(n, k) * fact;
    }
    return total;
  }

  // Pointwise evaluation of "a then b", written independently of compose.
  std::vector<Point> then(std::vector<Point> const& a, std::vector<Point> const& b) {
    std::vector<Point> r(a.size(), 0);
    for (std::size_t x = 0; x < a.size(); ++x) {
      r[x] = a[x] == 0 ? 0 : b[a[x] - 1];
    }
    return r;
  }

}  // namespace

TEST_CASE("compose acts left to right") {
  CHECK(compose(cycle(2, {1, 2}), chain(2, {1, 2})) == pb({0, 2}));
  for (auto const& a : enumerate_isn(3)) {
    CHECK(compose(PartialBijection::identity(3), a) == a);
    CHECK(compose(PartialBijection(3), a) == PartialBijection(3));
    CHECK(compose(a, PartialBijection(3)) == PartialBijection(3));
  }
  CHECK_THROWS_AS(compose(PartialBijection(2), PartialBijection(3)), UsageError);
}

TEST_CASE("compose agrees with pointwise evaluation and is associative on IS_3") {
  auto const all = enumerate_isn(3);
  for (auto const& a : all) {
    for (auto const& b : all) {
      std::vector<Point> ai(a.images().begin(), a.images().end());
      std::vector<Point> bi(b.images().begin(), b.images().end());
      auto const         ab = compose(a, b);
      REQUIRE(ab == pb(then(ai, bi)));
      for (Point x : ab.domain()) {
        CHECK(a.is_defined(x));
      }
      for (Point y : ab.range()) {
        CHECK(std::find(b.range().begin(), b.range().end(), y) != b.range().end());
      }
      for (auto const& c : all) {
        REQUIRE(compose(ab, c) == compose(a, compose(b, c)));
      }
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(chain(2, {1, 2})) == chain(2, {2, 1}));
  CHECK(inverse(cycle(3, {1, 2, 3})) == cycle(3, {1, 3, 2}));
  for (auto const& a : enumerate_isn(3)) {
    CHECK(compose(compose(a, inverse(a)), a) == a);
    CHECK(inverse(inverse(a)) == a);
    CHECK(inverse(a).domain() == a.range());
  }
}

TEST_CASE("idempotents commute in IS_3") {
  std::vector<PartialBijection> idem;
  for (auto const& a : enumerate_isn(3)) {
    if (is_idempotent(a)) {
      idem.push_back(a);
    }
  }
  CHECK(idem.size() == 8);
  for (auto const& e : idem) {
    for (auto const& f : idem) {
      CHECK(compose(e, f) == compose(f, e));
    }
  }
}

TEST_CASE("cycle") {
  CHECK(cycle(3, {1, 2}) == pb({2, 1, 3}));
  CHECK(cycle(3, {2}) == PartialBijection::identity(3));
  auto const c = cycle(4, {1, 2, 3});
  CHECK(compose(compose(c, c), c) == PartialBijection::identity(4));
  CHECK_THROWS_AS(cycle(3, {1, 1}), UsageError);
  CHECK_THROWS_AS(cycle(3, {4}), UsageError);
  CHECK_THROWS_AS(cycle(3, {}), UsageError);
}

TEST_CASE("chain") {
  CHECK(chain(2, {1, 2}) == pb({2, 0}));
  Point const keep[] = {1, 2};
  CHECK(chain(3, {3}) == PartialBijection::partial_identity(3, keep));
  CHECK(compose(chain(2, {1, 2}), chain(2, {1, 2})) == PartialBijection(2));
  CHECK_THROWS_AS(chain(2, {2, 2}), UsageError);
  CHECK_THROWS_AS(chain(2, {0}), UsageError);
}

TEST_CASE("chain decomposition") {
  auto const a = pb({2, 1, 4, 0, 5});
  auto const d = chain_decomposition(a);
  CHECK(d.cycles == std::vector<std::vector<Point>>{{1, 2}});
  CHECK(d.chains == std::vector<std::vector<Point>>{{3, 4}});
  CHECK(chain_decomposition(PartialBijection::identity(4)).cycles.empty());
  CHECK(chain_decomposition(PartialBijection::identity(4)).chains.empty());
  CHECK(chain_decomposition(PartialBijection(3)).chains
        == std::vector<std::vector<Point>>{{1}, {2}, {3}});
}

TEST_CASE("chain decomposition round-trips with disjoint parts on IS_4") {
  for (auto const& a : enumerate_isn(4)) {
    auto const      d = chain_decomposition(a);
    std::set<Point> seen;
    std::size_t     total = 0;
    for (auto const* parts : {&d.cycles, &d.chains}) {
      for (auto const& part : *parts) {
        seen.insert(part.begin(), part.end());
        total += part.size();
      }
    }
    CHECK(seen.size() == total);
    CHECK(d.recompose() == a);
    CHECK(parse_element(format_element(a), 4) == a);
  }
}

TEST_CASE("enumerate_isn matches brute force and the closed count") {
  for (std::size_t n = 0; n <= 5; ++n) {
    auto const all = enumerate_isn(n);
    CHECK(all.size() == isn_size_oracle(n));
    CHECK(std::is_sorted(all.begin(), all.end(), canonical_less));
    std::size_t idem = 0;
    for (auto const& a : all) {
      idem += is_idempotent(a);
    }
    CHECK(idem == (std::size_t(1) << n));
    if (n <= 4) {
      std::set<std::vector<Point>> expected;
      for (auto const& v : all_partial_injections(n)) {
        expected.insert(v);
      }
      std::set<std::vector<Point>> got;
      for (auto const& a : all) {
        got.insert({a.images().begin(), a.images().end()});
      }
      CHECK(got == expected);
    }
  }
  CHECK(enumerate_isn(1).size() == 2);
  CHECK(enumerate_isn(2).size() == 7);
  CHECK(enumerate_isn(3).size() == 34);
  CHECK_THROWS_AS(enumerate_isn(6), ResourceError);
}

TEST_CASE("canonical order starts with small domains") {
  auto const all = enumerate_isn(2);
  CHECK(all.front() == PartialBijection(2));
  CHECK(all.back() == cycle(2, {1, 2}));
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].domain_size() <= all[i].domain_size());
  }
}

TEST_CASE("is_idempotent") {
  Point const d[] = {1, 3};
  CHECK(is_idempotent(PartialBijection::partial_identity(3, d)));
  CHECK_FALSE(is_idempotent(cycle(2, {1, 2})));
}

TEST_CASE("parse_element") {
  CHECK(parse_element("(1 2)[3 4]", 5) == pb({2, 1, 4, 0, 5}));
  CHECK(parse_element("e", 3) == PartialBijection::identity(3));
  CHECK(parse_element("[1][2]", 2) == PartialBijection(2));
  CHECK(parse_element("0", 2) == PartialBijection(2));
  CHECK(parse_element(" ( 1  2 ) ", 2) == cycle(2, {1, 2}));
}

TEST_CASE("parse errors carry a position") {
  auto position = [](std::string_view text, std::size_t n) -> std::size_t {
    try {
      parse_element(text, n);
    } catch (ParseError const& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  CHECK(position("(1 3)", 2) == 3);
  CHECK(position("(1 2", 2) == 4);
  CHECK(position("x", 2) == 0);
  CHECK(position("", 2) == 0);
  CHECK_THROWS_AS(parse_element("(1 2)[2]", 2), UsageError);
  CHECK_THROWS_AS(parse_element("()", 2), UsageError);
}

TEST_CASE("format_element is canonical") {
  CHECK(format_element(pb({2, 1, 4, 0, 5})) == "(1 2)[3 4]");
  CHECK(format_element(PartialBijection::identity(3)) == "e");
  CHECK(format_element(PartialBijection(2)) == "0");
  CHECK(format_element(parse_element("[4 3](2 1)", 4)) == "(1 2)[4 3]");
  CHECK(format_element(parse_element("(3 1 2)", 3)) == "(1 2 3)");
  CHECK(format_decomposition(chain_decomposition(PartialBijection(2))) == "[1][2]");
  Point const d2[] = {2};
  CHECK(format_element(PartialBijection::partial_identity(2, d2)) == "[1]");
}
