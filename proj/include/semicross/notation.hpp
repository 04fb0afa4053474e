#pragma once

#include <string>
#include <string_view>

#include "semicross/partial_bijection.hpp"

namespace semicross {

  // Cycle/chain notation for elements of IS_n:
  //
  //   element ::= "e" | "0" | term+
  //   term    ::= "(" points ")" | "[" points "]"
  //   points  ::= integer (ws integer)*
  //
  // "e" is the identity, "0" the empty map. Terms must be pairwise disjoint.
  // Throws ParseError (with a character offset) or UsageError.
  PartialBijection parse_element(std::string_view text, std::size_t rank);

  // Canonical form: "e", "0", or the chain decomposition with cycles first.
  // parse_element(format_element(a), a.rank()) == a.
  std::string format_element(PartialBijection const& a);

  // The bare chain decomposition, e.g. "[1][2]" for the empty map of rank 2;
  // "e" when every point is fixed.
  std::string format_decomposition(ChainDecomposition const& d);

}  // namespace semicross
