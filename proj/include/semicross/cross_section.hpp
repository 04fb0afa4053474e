#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semicross/green.hpp"
#include "semicross/partial_bijection.hpp"
#include "semicross/semigroup.hpp"
#include "semicross/wreath.hpp"

namespace semicross {

  // A decomposition of {1, ..., n} into disjoint nonempty blocks, each with a
  // linear order given by the sequence of its points. Blocks are kept sorted
  // by their least point; the order of points within a block is data.
  class OrderedPartition {
   public:
    OrderedPartition() = default;
    // Throws UsageError unless the blocks partition {1, ..., n}.
    OrderedPartition(std::size_t n, std::vector<std::vector<Point>> blocks);

    // "2<1|3" is the blocks (2<1) and (3).
    static OrderedPartition parse(std::string_view text, std::size_t n);

    std::size_t rank() const noexcept {
      return _n;
    }
    std::size_t number_of_blocks() const noexcept {
      return _blocks.size();
    }
    std::vector<Point> const& block(std::size_t i) const {
      return _blocks[i];
    }
    std::vector<std::vector<Point>> const& blocks() const noexcept {
      return _blocks;
    }
    // 0-based index of the block containing x.
    std::size_t block_of(Point x) const;

    std::string to_string() const;

    bool operator==(OrderedPartition const&) const = default;
    auto operator<=>(OrderedPartition const&) const = default;

   private:
    std::size_t                     _n = 0;
    std::vector<std::vector<Point>> _blocks;
  };

  // A subset of a semigroup claimed to meet every R- or L-class exactly once.
  // Members are kept sorted.
  struct CrossSection {
    SemigroupPtr       ambient;
    Relation           relation = Relation::R;
    std::vector<Index> members;
  };

  // Outcome of is_cross_section. On failure `witness` describes a product
  // leaving the set or a class hit zero or several times.
  struct CrossSectionCheck {
    bool        ok = true;
    std::string witness;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  CrossSectionCheck is_cross_section(Semigroup const&           s,
                                     GreenClassPartition const& classes,
                                     std::span<Index const>     members);
  CrossSectionCheck is_cross_section(Semigroup const&       s,
                                     Relation               rel,
                                     std::span<Index const> members);

  // Throws VerificationError carrying the witness when the check fails.
  void verify(CrossSection const& c, GreenClassPartition const& classes);
  void verify(CrossSection const& c);

  // a_{i,j}: the chain [m_1, ..., m_j] on the first j points of block i,
  // identity elsewhere. i and j are 1-based.
  PartialBijection chain_generator(OrderedPartition const& p,
                                   std::size_t             i,
                                   std::size_t             j);

  // The subsemigroup generated by all a_{i,j} together with the identity;
  // an R-cross-section of IS_n with 2^n members. `isn` must be from_isn(n).
  CrossSection build_isn_r_cross_section(SemigroupPtr const&     isn,
                                         OrderedPartition const& p);

  // The members (f, a) of S wr IS_n such that, for every block M_i, the
  // restriction of a to M_i lies in R(M_i) and f(x) lies in inner[i] for
  // x in M_i meeting dom(a). `inner` holds one R-cross-section of S per
  // block.
  CrossSection build_wreath_r_cross_section(WreathProduct const&            w,
                                            OrderedPartition const&         p,
                                            std::span<CrossSection const>   inner);

  // Member-wise inverses, with the relation flipped.
  CrossSection invert_cross_section(CrossSection const& c);

  // Top components of the members, as a cross-section of IS_m for the same
  // relation. `isn` must be from_isn(w.rank()).
  CrossSection project_first(WreathProduct const& w,
                             SemigroupPtr const&  isn,
                             CrossSection const&  c);

  // { f(1) : (f, a) in c, a = id, f(x) = 0 for x != 1 } as a cross-section
  // of the inner semigroup. Throws UsageError if S has no zero.
  CrossSection project_second(WreathProduct const& w, CrossSection const& c);

  // Throws UsageError unless psi is a bijection preserving products.
  void check_automorphism(Semigroup const& s, std::span<Index const> psi);

  // The image psi(c), verified.
  CrossSection apply_automorphism(CrossSection const& c, std::span<Index const> psi);

  // a -> pi^{-1} a pi on IS_n for a permutation pi.
  std::vector<Index> conjugation_automorphism(IsnCatalog const&       isn,
                                              PartialBijection const& pi);

  // The map (f, a) -> (g, a) with g(x) = phi_x f(x) phi_{xa}^{-1}, where
  // phi[x - 1] is phi_x. Each phi_x must be a unit of S (phi_x R 1 and
  // invertible). Throws UsageError otherwise.
  std::vector<Index> theta_map(WreathProduct const& w, std::span<Index const> phi);

  CrossSection theta_conjugate(WreathProduct const&   w,
                               CrossSection const&    c,
                               std::span<Index const> phi);

}  // namespace semicross
