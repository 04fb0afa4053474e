#include <doctest.h>

#include <algorithm>
#include <set>

#include "semicross/counting.hpp"
#include "semicross/error.hpp"
#include "semicross/search.hpp"

using namespace semicross;

namespace {

  using Family = std::set<std::vector<Index>>;

  Family members(std::vector<CrossSection> const& sections) {
    Family f;
    for (auto const& c : sections) {
      f.insert(c.members);
    }
    return f;
  }

  // Plain backtracking: pick one element per class in index order and
  // reject as soon as two picks multiply into a decided class with a
  // different pick. No forcing, no ordering heuristics.
  Family naive_cross_sections(Semigroup const& s, Relation rel) {
    auto const         classes = green_classes(s, rel);
    std::vector<Index> pick(classes.size());
    Family             out;
    auto consistent = [&](std::size_t upto) {
      for (std::size_t i = 0; i <= upto; ++i) {
        for (std::size_t j = 0; j <= upto; ++j) {
          for (Index z : {s.product(pick[i], pick[j]), s.product(pick[j], pick[i])}) {
            auto const c = classes.class_of[z];
            if (c <= upto && pick[c] != z) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t c) -> void {
      if (c == classes.size()) {
        std::vector<Index> m = pick;
        std::sort(m.begin(), m.end());
        out.insert(m);
        return;
      }
      for (Index x : classes.classes[c]) {
        pick[c] = x;
        if (consistent(c)) {
          self(self, c + 1);
        }
      }
    };
    rec(rec, 0);
    return out;
  }

  // The closed formula with every term over the common denominator (n!)^n:
  // with T = sum_i C(n-1,i-1) n!/i!, the k-th term is
  // (n!)^{n+1-k} T^k C(n-1,k-1) / k!.
  Rational formula_by_common_denominator(std::size_t n) {
    BigInt const f = factorial(n);
    BigInt       t = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      t += binomial(n - 1, i - 1) * (f / factorial(i));
    }
    Rational total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      total += Rational(pow(f, static_cast<unsigned>(n + 1 - k)) * pow(t, static_cast<unsigned>(k))
                            * binomial(n - 1, k - 1),
                        factorial(k));
    }
    return total;
  }

}  // namespace

TEST_CASE("enumerate_ordered_partitions") {
  CHECK(enumerate_ordered_partitions(1).size() == 1);
  auto const two = enumerate_ordered_partitions(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].to_string() == "1<2");
  CHECK(two[1].to_string() == "2<1");
  CHECK(two[2].to_string() == "1|2");
  CHECK(enumerate_ordered_partitions(3).size() == 13);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const all = enumerate_ordered_partitions(n);
    BigInt     expected = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      expected += lah(n, k);
    }
    CHECK(BigInt(all.size()) == expected);
    std::set<std::string> seen;
    for (auto const& p : all) {
      seen.insert(p.to_string());
    }
    CHECK(seen.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end(), [](auto const& a, auto const& b) {
      return a.number_of_blocks() < b.number_of_blocks();
    }));
  }
  CHECK_THROWS_AS(enumerate_ordered_partitions(8), ResourceError);
}

TEST_CASE("lah") {
  CHECK(lah(2, 1) == 2);
  CHECK(lah(2, 2) == 1);
  CHECK(lah(3, 2) == 6);
  CHECK(lah(4, 2) == 36);
  CHECK_THROWS_AS(lah(2, 0), UsageError);
  CHECK_THROWS_AS(lah(2, 3), UsageError);
}

TEST_CASE("count_formula_paper") {
  CHECK(count_formula_paper(1).value == 1);
  CHECK(count_formula_paper(1).integral);
  CHECK(count_formula_paper(2).value == 21);
  CHECK(to_string(count_formula_paper(2).value) == "21");
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const v = count_formula_paper(n);
    CHECK(v.value == formula_by_common_denominator(n));
    CHECK(v.integral == (denominator(v.value) == 1));
  }
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK_THROWS_AS(count_formula_paper(9), UsageError);
}

TEST_CASE("count_structural and count_idempotents") {
  CHECK(count_structural(2, 3) == 15);
  CHECK(count_structural(1, 7) == 7);
  CHECK(count_structural(3, 13) == 3289);
  CHECK(count_idempotents(4, 2) == 25);
  CHECK(count_idempotents(4, 3) == 125);
  CHECK(count_idempotents(1, 3) == 8);
}

TEST_CASE("brute force on IS_n equals the ordered-partition family") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const s     = from_isn(n);
    auto const found = brute_force_cross_sections(s, Relation::R);
    auto const built = standard_isn_cross_sections(s, Relation::R);
    CHECK(members(found) == members(built));
    CHECK(found.size() == members(found).size());
    CHECK(members(found) == naive_cross_sections(*s, Relation::R));
    for (auto const& c : found) {
      CHECK(is_cross_section(*s, Relation::R, c.members));
    }
  }
  CHECK(brute_force_cross_sections(from_isn(2), Relation::R).size() == 3);
  CHECK(brute_force_cross_sections(from_isn(3), Relation::R).size() == 13);
}

TEST_CASE("L-enumeration is the inversion of R-enumeration") {
  auto const s = from_isn(3);
  Family     inverted;
  for (auto const& c : brute_force_cross_sections(s, Relation::R)) {
    inverted.insert(invert_cross_section(c).members);
  }
  CHECK(members(brute_force_cross_sections(s, Relation::L)) == inverted);
}

TEST_CASE("IS_2 wr IS_2") {
  auto const isn = from_isn(2);
  auto const w   = build_wreath(isn, 2);
  auto const s   = w->semigroup();

  SearchConfig pruned;
  pruned.projection = wreath_projection(*w, Relation::R);
  SearchConfig plain;
  plain.prune_with_projection = false;
  SearchConfig parallel = pruned;
  parallel.parallel_branching = true;
  parallel.jobs               = 4;

  auto const found = brute_force_cross_sections(s, Relation::R, pruned);
  CHECK(found.size() == 21);
  CHECK(members(found) == members(brute_force_cross_sections(s, Relation::R, plain)));
  auto const par = brute_force_cross_sections(s, Relation::R, parallel);
  REQUIRE(par.size() == found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    CHECK(par[i].members == found[i].members);
  }
  CHECK(members(found) == naive_cross_sections(*s, Relation::R));

  // The standard constructions plus their Theta-conjugates give everything.
  auto const family   = brute_force_cross_sections(isn, Relation::R);
  auto const standard = standard_wreath_cross_sections(*w, family, Relation::R);
  Index const e = isn->parse("e"), t = isn->parse("(1 2)");
  Family      conjugates;
  for (auto const& c : standard) {
    for (Index a : {e, t}) {
      for (Index b : {e, t}) {
        std::vector<Index> const phi{a, b};
        conjugates.insert(theta_conjugate(*w, c, phi).members);
      }
    }
  }
  CHECK(conjugates == members(found));
  CHECK(members(standard).size() == 15);

  Family inverted;
  for (auto const& c : found) {
    inverted.insert(invert_cross_section(c).members);
  }
  SearchConfig lcfg;
  lcfg.projection = wreath_projection(*w, Relation::L);
  CHECK(members(brute_force_cross_sections(s, Relation::L, lcfg)) == inverted);
}

TEST_CASE("search limits") {
  SearchConfig small;
  small.max_semigroup_size = 10;
  CHECK_THROWS_AS(brute_force_cross_sections(from_isn(3), Relation::R, small), ResourceError);

  SearchConfig instant;
  instant.timeout = std::chrono::milliseconds(0);
  try {
    brute_force_cross_sections(from_isn(3), Relation::R, instant);
    FAIL("expected a timeout");
  } catch (PartialResultError const& e) {
    CHECK(e.partial().size() < 13);
  }

  SearchConfig mismatched;
  mismatched.projection = Projection{{0}, {0}};
  CHECK_THROWS_AS(brute_force_cross_sections(from_isn(2), Relation::R, mismatched), UsageError);
}

TEST_CASE("count reports") {
  auto const isn = count_report_isn(3, Relation::R);
  CHECK(isn.brute_force_count == 13);
  CHECK(isn.structural_count == 13);
  CHECK(isn.matches_structural);
  CHECK(isn.all_isomorphic_to_standard);
  CHECK_FALSE(isn.paper_formula_value);

  for (auto rel : {Relation::R, Relation::L}) {
    auto const r = count_report_wreath(2, rel);
    CHECK(r.brute_force_count == 21);
    REQUIRE(r.paper_formula_value);
    CHECK(r.paper_formula_value->value == 21);
    CHECK(r.structural_count == 15);
    CHECK(r.distinct_standard == 15);
    CHECK(r.all_isomorphic_to_standard);
    CHECK(r.matches_formula);
    CHECK_FALSE(r.matches_structural);
  }
}
