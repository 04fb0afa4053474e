#include "semicross/counting.hpp"

#include <algorithm>
#include <sstream>

#include "semicross/error.hpp"
#include "semicross/isomorphism.hpp"

namespace semicross {

  BigInt factorial(std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  BigInt lah(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
      throw UsageError("lah(n, k) needs 1 <= k <= n");
    }
    return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
  }

  FormulaValue count_formula_paper(std::size_t n) {
    if (n < 1 || n > 8) {
      throw UsageError("count_formula_paper needs 1 <= n <= 8");
    }
    Rational inner = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      inner += Rational(binomial(n - 1, i - 1), factorial(i));
    }
    BigInt const lead = pow(factorial(n), static_cast<unsigned>(n + 1));
    Rational     total = 0;
    Rational     power = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      power *= inner;
      total += Rational(lead * binomial(n - 1, k - 1), factorial(k)) * power;
    }
    return {total, denominator(total) == 1};
  }

  BigInt count_structural(std::size_t n, BigInt const& inner_count) {
    if (n < 1 || n > 8) {
      throw UsageError("count_structural needs 1 <= n <= 8");
    }
    BigInt total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      total += lah(n, k) * pow(inner_count, static_cast<unsigned>(k));
    }
    return total;
  }

  BigInt count_idempotents(std::size_t inner_idempotents, std::size_t m) {
    return pow(BigInt(inner_idempotents) + 1, static_cast<unsigned>(m));
  }

  std::string to_string(Rational const& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) {
      out << '/' << denominator(r);
    }
    return out.str();
  }

  std::vector<CrossSection> standard_isn_cross_sections(SemigroupPtr const& isn,
                                                        Relation            rel) {
    std::size_t n = 0;
    while (wreath_size(1, n) < isn->size()) {
      ++n;
    }
    std::vector<CrossSection> result;
    for (auto const& p : enumerate_ordered_partitions(n)) {
      auto c = build_isn_r_cross_section(isn, p);
      result.push_back(rel == Relation::R ? std::move(c) : invert_cross_section(c));
    }
    return result;
  }

  std::vector<CrossSection> standard_wreath_cross_sections(
      WreathProduct const& w, std::span<CrossSection const> inner_family, Relation rel) {
    std::vector<CrossSection> result;
    for (auto const& p : enumerate_ordered_partitions(w.rank())) {
      std::size_t const        k = p.number_of_blocks();
      std::vector<std::size_t> choice(k, 0);
      while (true) {
        std::vector<CrossSection> inner;
        for (std::size_t i : choice) {
          inner.push_back(inner_family[i]);
        }
        auto c = build_wreath_r_cross_section(w, p, inner);
        result.push_back(rel == Relation::R ? std::move(c) : invert_cross_section(c));
        std::size_t i = k;
        while (i > 0 && ++choice[i - 1] == inner_family.size()) {
          choice[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return result;
  }

  CayleyTable cross_section_table(CrossSection const& c) {
    return restrict_table(*c.ambient, c.members);
  }

  std::string CountReport::verdict() const {
    std::ostringstream out;
    out << "brute force found " << brute_force_count << " " << to_string(relation)
        << "-cross-sections of " << semigroup << "; ";
    if (paper_formula_value) {
      out << "closed formula gives " << semicross::to_string(paper_formula_value->value)
          << (matches_formula ? " (match)" : " (no match)") << ", ";
    }
    out << "standard constructions number " << structural_count
        << (matches_structural ? " (match)" : " (no match)");
    return out.str();
  }

  namespace {
    // Marks each found section isomorphic to some standard one, trying each
    // isomorphism class of the standard family once.
    bool all_isomorphic(std::vector<CrossSection> const& found,
                        std::vector<CrossSection> const& standard) {
      std::vector<CayleyTable> reps;
      for (auto const& s : standard) {
        auto t = cross_section_table(s);
        bool seen = std::any_of(reps.begin(), reps.end(), [&](auto const& r) {
          return are_isomorphic(r, t).has_value();
        });
        if (!seen) {
          reps.push_back(std::move(t));
        }
      }
      return std::all_of(found.begin(), found.end(), [&](CrossSection const& c) {
        auto const t = cross_section_table(c);
        return std::any_of(reps.begin(), reps.end(), [&](auto const& r) {
          return are_isomorphic(t, r).has_value();
        });
      });
    }

    std::size_t distinct(std::vector<CrossSection> const& sections) {
      std::vector<std::vector<Index>> sets;
      for (auto const& c : sections) {
        sets.push_back(c.members);
      }
      std::sort(sets.begin(), sets.end());
      return static_cast<std::size_t>(std::unique(sets.begin(), sets.end()) - sets.begin());
    }
  }  // namespace

  CountReport count_report_isn(std::size_t n, Relation rel, SearchConfig cfg) {
    auto const  isn = from_isn(n);
    SearchStats stats;
    cfg.projection.reset();
    auto const found    = brute_force_cross_sections(isn, rel, cfg, &stats);
    auto const standard = standard_isn_cross_sections(isn, rel);

    CountReport r;
    r.n                 = n;
    r.relation          = rel;
    r.semigroup         = isn->name();
    r.brute_force_count = found.size();
    for (std::size_t k = 1; k <= n; ++k) {
      r.structural_count += lah(n, k);
    }
    r.distinct_standard          = distinct(standard);
    r.all_isomorphic_to_standard = all_isomorphic(found, standard);
    r.matches_structural         = r.brute_force_count == r.structural_count;
    r.search_nodes               = stats.nodes;
    r.elapsed                    = stats.elapsed;
    return r;
  }

  CountReport count_report_wreath(std::size_t n, Relation rel, SearchConfig cfg) {
    auto const isn = from_isn(n);
    auto const w   = build_wreath(isn, n);
    if (cfg.prune_with_projection && !cfg.projection) {
      cfg.projection = wreath_projection(*w, rel);
    }
    SearchStats stats;
    auto const  found = brute_force_cross_sections(w->semigroup(), rel, cfg, &stats);

    // The inner family is the brute-forced R-cross-sections of IS_n, which
    // coincide with the ordered-partition family.
    SearchConfig inner_cfg = cfg;
    inner_cfg.projection.reset();
    auto const inner_family = brute_force_cross_sections(isn, Relation::R, inner_cfg);
    auto const standard     = standard_wreath_cross_sections(*w, inner_family, rel);

    CountReport r;
    r.n                          = n;
    r.relation                   = rel;
    r.semigroup                  = w->semigroup()->name();
    r.brute_force_count          = found.size();
    r.paper_formula_value        = count_formula_paper(n);
    r.structural_count           = count_structural(n, inner_family.size());
    r.distinct_standard          = distinct(standard);
    r.all_isomorphic_to_standard = all_isomorphic(found, standard);
    r.matches_formula            = r.paper_formula_value->integral
                                && numerator(r.paper_formula_value->value) == r.brute_force_count;
    r.matches_structural         = r.brute_force_count == r.structural_count;
    r.search_nodes               = stats.nodes;
    r.elapsed                    = stats.elapsed;
    return r;
  }

}  // namespace semicross
