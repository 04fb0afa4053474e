#include "semicross/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

#include "semicross/error.hpp"

namespace semicross {

  namespace {
    Json big(BigInt const& v) {
      if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
        return v.convert_to<std::uint64_t>();
      }
      return v.str();
    }
  }  // namespace

  Json cayley_to_json(Semigroup const& s) {
    auto const t = s.cayley_table();
    Json       rows = Json::array();
    for (Index x = 0; x < t.size; ++x) {
      Json row = Json::array();
      for (Index y = 0; y < t.size; ++y) {
        row.push_back(t.at(x, y));
      }
      rows.push_back(std::move(row));
    }
    Json inverse = Json::array();
    for (Index x = 0; x < s.size(); ++x) {
      inverse.push_back(s.inverse(x));
    }
    Json j;
    j["size"]    = t.size;
    j["labels"]  = t.labels;
    j["table"]   = std::move(rows);
    j["inverse"] = std::move(inverse);
    return j;
  }

  SemigroupPtr cayley_from_json(Json const& j, std::string name) {
    try {
      CayleyTable t;
      t.size           = j.at("size").get<std::size_t>();
      auto const& rows = j.at("table");
      if (!rows.is_array() || rows.size() != t.size) {
        throw UsageError("\"table\" must have " + std::to_string(t.size) + " rows");
      }
      t.table.reserve(t.size * t.size);
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != t.size) {
          throw UsageError("every table row must have " + std::to_string(t.size)
                           + " entries");
        }
        for (auto const& v : row) {
          t.table.push_back(v.get<Index>());
        }
      }
      if (j.contains("labels")) {
        t.labels = j.at("labels").get<std::vector<std::string>>();
      }
      std::optional<std::vector<Index>> inverse;
      if (j.contains("inverse")) {
        inverse = j.at("inverse").get<std::vector<Index>>();
      }
      return from_cayley_table(t, std::move(inverse), std::move(name));
    } catch (Json::exception const& e) {
      throw UsageError(std::string("malformed Cayley table JSON: ") + e.what());
    }
  }

  Json cross_section_to_json(CrossSection const& c) {
    Json members = Json::array();
    for (Index x : c.members) {
      members.push_back(c.ambient->label(x));
    }
    Json j;
    j["relation"] = to_string(c.relation);
    j["ambient"]  = c.ambient->name();
    j["size"]     = c.members.size();
    j["members"]  = std::move(members);
    return j;
  }

  CrossSection cross_section_from_json(Json const& j, SemigroupPtr const& ambient) {
    try {
      CrossSection c;
      c.ambient  = ambient;
      c.relation = relation_from_string(j.at("relation").get<std::string>());
      for (auto const& m : j.at("members")) {
        c.members.push_back(ambient->parse(m.get<std::string>()));
      }
      std::sort(c.members.begin(), c.members.end());
      return c;
    } catch (Json::exception const& e) {
      throw UsageError(std::string("malformed cross-section JSON: ") + e.what());
    }
  }

  Json green_to_json(Semigroup const& s, GreenClassPartition const& p) {
    Json classes = Json::array();
    for (auto const& cls : p.classes) {
      Json c = Json::array();
      for (Index x : cls) {
        c.push_back(s.label(x));
      }
      classes.push_back(std::move(c));
    }
    Json j;
    j["relation"] = to_string(p.relation);
    j["count"]    = p.size();
    j["classes"]  = std::move(classes);
    return j;
  }

  Json report_to_json(CountReport const& r) {
    Json j;
    j["n"]         = r.n;
    j["relation"]  = to_string(r.relation);
    j["semigroup"] = r.semigroup;
    j["count"]     = big(r.brute_force_count);
    if (r.paper_formula_value) {
      j["formula_paper"] = {{"value", to_string(r.paper_formula_value->value)},
                            {"integral", r.paper_formula_value->integral}};
    } else {
      j["formula_paper"] = nullptr;
    }
    j["structural"]                 = big(r.structural_count);
    j["distinct_standard"]          = r.distinct_standard;
    j["all_isomorphic_to_standard"] = r.all_isomorphic_to_standard;
    j["matches_formula"]            = r.matches_formula;
    j["matches_structural"]         = r.matches_structural;
    j["verdict"]                    = r.verdict();
    j["nodes"]                      = r.search_nodes;
    j["elapsed_ms"]                 = r.elapsed.count();
    return j;
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open " + path);
    }
    try {
      return Json::parse(in);
    } catch (Json::parse_error const& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  void write_json_file(std::string const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw UsageError("cannot write " + path);
    }
    out << j.dump() << '\n';
  }

}  // namespace semicross
