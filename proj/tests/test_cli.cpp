#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "semicross/json_io.hpp"

namespace {

  struct Run {
    std::string out;
    int         code = -1;
  };

  // Runs the CLI with `args` (already shell-quoted); stdout only.
  Run cli(std::string const& args) {
    std::string const command = std::string(SEMICROSS_CLI) + " " + args + " 2>/dev/null";
    FILE*             pipe    = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run                    r;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      r.out.append(buf.data(), n);
    }
    int const status = ::pclose(pipe);
    r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string temp(std::string const& name) {
    return (std::filesystem::temp_directory_path() / ("semicross_cli_" + name)).string();
  }

}  // namespace

TEST_CASE("multiply") {
  CHECK(cli("multiply --n 2 '(1 2)' '[1 2]'").out == "[1]\n");
  CHECK(cli("multiply --n 3 'e' '(1 2 3)'").out == "(1 2 3)\n");
  CHECK(cli("multiply --n 2 '0' '(1 2)'").out == "0\n");
  CHECK(cli("multiply --n 2 '[1 2]' '[2 1]' '(1 2)'").out == "[1 2]\n");
  CHECK(cli("multiply --semigroup wreath --n 2 '(1:(1 2); [1 2])' '(1:[2], 2:[2 1]; e)'").out
        == "(1:[2]; [1 2])\n");
}

TEST_CASE("decompose") {
  CHECK(cli("decompose --n 5 --map '2 1 4 0 5'").out == "(1 2)[3 4]\n");
  CHECK(cli("decompose --n 5 '[3 4](2 1)'").out == "(1 2)[3 4]\n");
  CHECK(cli("decompose --n 3 e").out == "e\n");
  CHECK(cli("decompose --n 2 0").out == "[1][2]\n");
}

TEST_CASE("green") {
  auto const r = cli("green --semigroup isn --n 2 --relation R");
  CHECK(r.code == 0);
  CHECK(r.out == R"j({"relation":"R","count":4,"classes":[["0"],["[2]","[1 2]"],["[2 1]","[1]"],["e","(1 2)"]]})j" "\n");
  auto const w = semicross::Json::parse(cli("green --semigroup wreath --n 2 --relation L").out);
  CHECK(w["count"] == 25);
}

TEST_CASE("cross-sections build and verify") {
  auto const r = cli("cross-sections build --semigroup isn --n 3 --partition '2<1|3'");
  CHECK(r.code == 0);
  CHECK(r.out == R"j({"relation":"R","ambient":"IS_3","size":8,"members":["0","[2][3]","[2 1][3]","[1][2]","[3]","[2]","[2 1]","e"]})j" "\n");

  auto const path = temp("section.json");
  CHECK(cli("cross-sections build --semigroup isn --n 3 --partition '2<1|3' --relation L --out " + path).code == 0);
  auto const verified = cli("cross-sections verify --semigroup isn --n 3 --in " + path);
  CHECK(verified.code == 0);
  CHECK(verified.out == "{\"ok\":true}\n");

  std::ofstream(path) << R"j({"relation":"R","members":["e","[1]","[2]","[3]"]})j";
  auto const rejected = cli("cross-sections verify --semigroup isn --n 3 --in " + path);
  CHECK(rejected.code == 1);
  CHECK(semicross::Json::parse(rejected.out)["ok"] == false);
  std::filesystem::remove(path);

  auto const wreath = semicross::Json::parse(
      cli("cross-sections build --semigroup wreath --n 2 --partition '1<2' --inner '1|2'").out);
  CHECK(wreath["size"] == 25);
  CHECK(cli("cross-sections build --semigroup wreath --n 2 --partition '1<2'").code == 2);
}

TEST_CASE("cross-sections enumerate and count") {
  auto const e = semicross::Json::parse(
      cli("cross-sections enumerate --semigroup isn --n 2 --relation R").out);
  CHECK(e["count"] == 3);
  CHECK(e["cross_sections"].size() == 3);

  auto const c = cli("cross-sections count --semigroup wreath --n 2 --relation R --jobs 2");
  CHECK(c.code == 0);
  auto const j = semicross::Json::parse(c.out);
  CHECK(j["count"] == 21);
  CHECK(j["formula_paper"]["value"] == "21");
  CHECK(j["formula_paper"]["integral"] == true);
  CHECK(j["structural"] == 15);
  CHECK(j["all_isomorphic_to_standard"] == true);
  CHECK(j["matches_formula"] == true);
  CHECK(j["matches_structural"] == false);

  auto const unpruned = semicross::Json::parse(
      cli("cross-sections count --semigroup wreath --n 2 --relation L --no-prune").out);
  CHECK(unpruned["count"] == 21);
}

TEST_CASE("paut") {
  CHECK(cli("paut --n 2 --k 2 info").out
        == "semigroup: IS_2 wr IS_2\nelements: 127\nidempotents: 25\n");
  CHECK(cli("paut --n 2 --k 1 info").out == "semigroup: IS_2\nelements: 7\nidempotents: 4\n");
  CHECK(cli("paut --n 2 --k 2 verify-iso").code == 0);
  CHECK(cli("paut --n 2 --k 3 verify-iso --seed 11").code == 0);
  CHECK(cli("paut --n 3 --k 3 info").code == 2);
}

TEST_CASE("cayley export and import") {
  auto const path = temp("cayley.json");
  CHECK(cli("cayley export --semigroup isn --n 2 --out " + path).code == 0);
  auto const imported = cli("cayley import --in " + path);
  CHECK(imported.code == 0);
  CHECK(imported.out == "elements: 7\nidempotents: 4\nunit: e\nzero: 0\n");
  CHECK(cli("multiply --semigroup cayley:" + path + " '(1 2)' '[1 2]'").out == "[1]\n");
  auto const again = temp("cayley2.json");
  CHECK(cli("cayley export --semigroup cayley:" + path + " --out " + again).code == 0);
  std::ifstream a(path), b(again);
  std::string   sa((std::istreambuf_iterator<char>(a)), {});
  std::string   sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
  std::filesystem::remove(path);
  std::filesystem::remove(again);
}

TEST_CASE("exit codes") {
  CHECK(cli("").code == 2);
  CHECK(cli("multiply --n 2 '(1 3)'").code == 2);
  CHECK(cli("multiply --n 2 '(1 2'").code == 2);
  CHECK(cli("cross-sections count --semigroup magma --n 2").code == 2);
  CHECK(cli("cross-sections verify --semigroup isn --n 2 --in /nonexistent.json").code == 2);
  CHECK(cli("decompose --n 2 --map '1 1'").code == 2);
  CHECK(cli("--help").code == 0);
}
