#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicross/cross_section.hpp"
#include "semicross/search.hpp"

namespace semicross {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  BigInt factorial(std::size_t n);
  BigInt binomial(std::size_t n, std::size_t k);

  // n!/k! * C(n-1, k-1): partitions of an n-set into k linearly ordered
  // blocks. Throws UsageError unless 1 <= k <= n.
  BigInt lah(std::size_t n, std::size_t k);

  struct FormulaValue {
    Rational value;
    bool     integral = false;
  };

  // sum_{k=1..n} (n!)^{n+1}/k! C(n-1,k-1) (sum_{i=1..n} C(n-1,i-1)/i!)^k,
  // evaluated exactly. n <= 8.
  FormulaValue count_formula_paper(std::size_t n);

  // sum_k lah(n,k) inner_count^k: one construction per ordered partition
  // of the top points and choice of inner cross-section for each block.
  BigInt count_structural(std::size_t n, BigInt const& inner_count);

  // (|E(S)| + 1)^m, the idempotent count of S wr IS_m.
  BigInt count_idempotents(std::size_t inner_idempotents, std::size_t m);

  // "p/q", or "p" when q = 1.
  std::string to_string(Rational const& r);

  // build_isn_r_cross_section over every ordered partition, in partition
  // order; for L, the inverses of those.
  std::vector<CrossSection> standard_isn_cross_sections(SemigroupPtr const& isn,
                                                        Relation            rel);

  // build_wreath_r_cross_section over every ordered partition of the top
  // points and every assignment of `inner_family` members to its blocks;
  // for L, the inverses. `inner_family` holds R-cross-sections of the
  // inner semigroup. Duplicates are kept.
  std::vector<CrossSection> standard_wreath_cross_sections(
      WreathProduct const& w, std::span<CrossSection const> inner_family, Relation rel);

  // Cayley table of a cross-section viewed as a semigroup in its own right.
  CayleyTable cross_section_table(CrossSection const& c);

  struct CountReport {
    std::size_t               n        = 0;
    Relation                  relation = Relation::R;
    std::string               semigroup;
    BigInt                    brute_force_count;
    std::optional<FormulaValue> paper_formula_value;  // wreath only
    BigInt                    structural_count;
    std::size_t               distinct_standard = 0;
    bool                      all_isomorphic_to_standard = false;
    bool                      matches_formula    = false;
    bool                      matches_structural = false;
    std::size_t               search_nodes       = 0;
    std::chrono::milliseconds elapsed{0};

    // A sentence naming which closed form, if either, equals the count.
    std::string verdict() const;
  };

  // Brute force on IS_n against the ordered-partition construction.
  CountReport count_report_isn(std::size_t n, Relation rel, SearchConfig cfg = {});

  // Brute force on IS_n wr IS_n against count_formula_paper(n) and
  // count_structural(n, #cross-sections of IS_n). Each found
  // cross-section is tested for isomorphism with some standard one.
  CountReport count_report_wreath(std::size_t n, Relation rel, SearchConfig cfg = {});

}  // namespace semicross
