#pragma once

#include <json.hpp>
#include <string>

#include "semicross/counting.hpp"
#include "semicross/cross_section.hpp"
#include "semicross/green.hpp"
#include "semicross/semigroup.hpp"

namespace semicross {

  using Json = nlohmann::ordered_json;

  // {"size": n, "labels": [...], "table": [[...], ...], "inverse": [...]}
  Json        cayley_to_json(Semigroup const& s);
  // Validated through from_cayley_table. "labels" and "inverse" are
  // optional. Throws UsageError on malformed input.
  SemigroupPtr cayley_from_json(Json const& j, std::string name = "cayley");

  // {"relation": "R", "ambient": name, "size": k, "members": [labels]}
  Json         cross_section_to_json(CrossSection const& c);
  // Members are parsed by the ambient semigroup.
  CrossSection cross_section_from_json(Json const& j, SemigroupPtr const& ambient);

  // {"relation": "R", "count": k, "classes": [[labels], ...]}
  Json green_to_json(Semigroup const& s, GreenClassPartition const& p);

  // {"n", "relation", "semigroup", "count", "formula_paper": {"value",
  // "integral"}, "structural", "distinct_standard",
  // "all_isomorphic_to_standard", "matches_formula", "matches_structural",
  // "verdict", "nodes", "elapsed_ms"}. "formula_paper" is null for IS_n.
  Json report_to_json(CountReport const& r);

  Json read_json_file(std::string const& path);
  void write_json_file(std::string const& path, Json const& j);

}  // namespace semicross
