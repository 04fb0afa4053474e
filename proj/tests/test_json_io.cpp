#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "semicross/error.hpp"
#include "semicross/json_io.hpp"

using namespace semicross;

TEST_CASE("Cayley JSON round-trips bit-exactly") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const s    = from_isn(n);
    auto const text = cayley_to_json(*s).dump();
    auto const back = cayley_from_json(Json::parse(text));
    CHECK(back->cayley_table() == s->cayley_table());
    CHECK(cayley_to_json(*back).dump() == text);
  }
  auto const j = cayley_to_json(*from_isn(1));
  CHECK(j.dump() == R"({"size":2,"labels":["0","e"],"table":[[0,0],[0,1]],"inverse":[0,1]})");
}

TEST_CASE("Cayley JSON without optional fields") {
  auto const s = cayley_from_json(Json::parse(R"({"size":1,"table":[[0]]})"));
  CHECK(s->size() == 1);
  CHECK(s->label(0) == "0");
}

TEST_CASE("malformed Cayley JSON") {
  CHECK_THROWS_AS(cayley_from_json(Json::parse(R"({"size":2,"table":[[0]]})")), UsageError);
  CHECK_THROWS_AS(cayley_from_json(Json::parse(R"({"table":[[0]]})")), UsageError);
  CHECK_THROWS_AS(cayley_from_json(Json::parse(R"({"size":1,"table":[["x"]]})")), UsageError);
  CHECK_THROWS_AS(cayley_from_json(Json::parse(R"({"size":2,"table":[[1,1],[0,0]]})")),
                  UsageError);
}

TEST_CASE("cross-section JSON") {
  auto const s = from_isn(3);
  auto const c = build_isn_r_cross_section(s, OrderedPartition::parse("2<1|3", 3));
  auto const j = cross_section_to_json(c);
  CHECK(j["relation"] == "R");
  CHECK(j["ambient"] == "IS_3");
  CHECK(j["size"] == 8);
  auto const back = cross_section_from_json(Json::parse(j.dump()), s);
  CHECK(back.members == c.members);
  CHECK(back.relation == Relation::R);
  CHECK_THROWS_AS(cross_section_from_json(Json::parse(R"j({"relation":"R","members":["(1 4)"]})j"), s),
                  UsageError);
  CHECK_THROWS_AS(cross_section_from_json(Json::parse(R"({"members":[]})"), s), UsageError);

  auto const w  = build_wreath(from_isn(2), 2);
  auto const ws = CrossSection{w->semigroup(), Relation::R, w->semigroup()->idempotents()};
  CHECK(cross_section_from_json(cross_section_to_json(ws), w->semigroup()).members
        == ws.members);
}

TEST_CASE("green JSON") {
  auto const s = from_isn(2);
  auto const j = green_to_json(*s, green_classes(*s, Relation::L));
  CHECK(j.dump() == R"j({"relation":"L","count":4,"classes":[["0"],["[2]","[2 1]"],["[1 2]","[1]"],["e","(1 2)"]]})j");
}

TEST_CASE("report JSON") {
  auto const r = count_report_wreath(2, Relation::R);
  auto const j = report_to_json(r);
  CHECK(j["n"] == 2);
  CHECK(j["relation"] == "R");
  CHECK(j["count"] == 21);
  CHECK(j["formula_paper"]["value"] == "21");
  CHECK(j["formula_paper"]["integral"] == true);
  CHECK(j["structural"] == 15);
  CHECK(j["all_isomorphic_to_standard"] == true);
  CHECK(j["elapsed_ms"].is_number_integer());
  CHECK(report_to_json(count_report_isn(2, Relation::R))["formula_paper"].is_null());
}

TEST_CASE("files") {
  auto const path = std::filesystem::temp_directory_path() / "semicross_json_io_test.json";
  write_json_file(path.string(), cayley_to_json(*from_isn(2)));
  CHECK(read_json_file(path.string()) == cayley_to_json(*from_isn(2)));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_json_file(path.string()), UsageError);
}
