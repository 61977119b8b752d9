#include "helpers.hpp"

#include "hodgekit/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace hodgekit;
using testing_support::golden;

namespace {

RunResult cli(std::initializer_list<std::string> args) { return run_cli(std::vector<std::string>(args)); }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Reads the dimensions of one flavor back out of the table rendering.
std::map<std::string, std::size_t> parse_table(const std::string& text, const std::string& flavor) {
  std::map<std::string, std::size_t> dims;
  auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].rfind(flavor, 0) != 0) continue;
    std::istringstream header(lines[i + 1]);
    std::string corner;
    header >> corner;
    std::vector<int> cols;
    for (int c; header >> c;) cols.push_back(c);
    if (corner == "k") {
      std::istringstream row(lines[i + 2]);
      std::string tag;
      row >> tag;
      for (int k : cols) row >> dims[std::to_string(k)];
      return dims;
    }
    for (std::size_t j = i + 2; j < lines.size() && !lines[j].empty(); ++j) {
      std::istringstream row(lines[j]);
      int q;
      row >> q;
      for (int p : cols) row >> dims[std::to_string(p) + "," + std::to_string(q)];
    }
    return dims;
  }
  FAIL("flavor " << flavor << " not rendered");
  return dims;
}

}  // namespace

TEST_CASE("compute renders a Hodge diamond per flavor") {
  RunResult r = cli({"compute", "iwasawa", "--flavors", "dolbeault,derham"});
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  auto dol = parse_table(r.out, "dolbeault");
  CHECK(dol["1,0"] == 3);
  CHECK(dol["0,1"] == 2);
  auto dr = parse_table(r.out, "derham");
  CHECK(dr["3"] == 10);
}

TEST_CASE("table, JSON and CSV carry the same numbers") {
  for (const char* model : {"iwasawa", "kodaira_thurston", "hopf2"}) {
    CAPTURE(model);
    RunResult t = cli({"compute", model, "--flavors", "all"});
    RunResult j = cli({"compute", model, "--flavors", "all", "--output", "json"});
    RunResult c = cli({"compute", model, "--flavors", "all", "--output", "csv"});
    REQUIRE(t.exit_code == 0);
    REQUIRE(j.exit_code == 0);
    REQUIRE(c.exit_code == 0);
    auto json = nlohmann::json::parse(j.out);
    CHECK(json["model"] == model);
    std::size_t csv_rows = 0;
    for (const auto& line : lines_of(c.out)) csv_rows += line.rfind("flavor,", 0) == 0 ? 0 : 1;
    std::size_t json_entries = 0;
    for (const auto& [flavor, table] : json["tables"].items()) {
      CAPTURE(flavor);
      auto rendered = parse_table(t.out, flavor);
      for (const auto& [key, value] : table.items()) {
        CHECK(rendered.at(key) == value.get<std::size_t>());
        CHECK(golden()[model][flavor][key] == value);
        ++json_entries;
      }
    }
    CHECK(csv_rows == json_entries);
  }
}

TEST_CASE("ABC flavors") {
  RunResult r = cli({"compute", "iwasawa", "--flavors", "abc", "--output", "json"});
  REQUIRE(r.exit_code == 0);
  auto json = nlohmann::json::parse(r.out);
  for (const char* f : {"A", "B", "C", "C_cokernel"}) CHECK(json["tables"].contains(f));
  auto aeppli = nlohmann::json::parse(cli({"compute", "iwasawa", "--flavors", "aeppli", "--output", "json"}).out);
  CHECK(json["tables"]["C"] == aeppli["tables"]["aeppli"]);
}

TEST_CASE("verify on the catalog") {
  SUBCASE("Iwasawa five-term and Frolicher") {
    RunResult r = cli({"verify", "iwasawa", "--checks", "five-term,frolicher"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS five-term") != std::string::npos);
    CHECK(r.out.find("PASS frolicher: strict at k=1 (4 < 5)") != std::string::npos);
  }
  SUBCASE("a nontrivial action is a finding, not a failure") {
    RunResult r = cli({"verify", "iwasawa", "--checks", "action:phi1-dual"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("NONTRIVIAL action:phi1-dual") != std::string::npos);
    CHECK(r.out.find("[phi3] -> -[phi2]") != std::string::npos);
    CHECK(cli({"verify", "iwasawa", "--checks", "action:central"}).out.find("TRIVIAL action:central") !=
          std::string::npos);
  }
  SUBCASE("Hopf surface") {
    RunResult r = cli({"verify", "hopf2", "--checks", "cone-les,theorem-crosscheck,action:lee"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS cone-les") != std::string::npos);
    CHECK(r.out.find("PASS theorem-crosscheck") != std::string::npos);
    CHECK(r.out.find("printed indexing differs") != std::string::npos);
    CHECK(r.out.find("TRIVIAL action:lee") != std::string::npos);
  }
  SUBCASE("default checks") {
    for (const auto& spec : catalog()) {
      CAPTURE(spec.name);
      RunResult r = cli({"verify", spec.name});
      CHECK(r.exit_code == 0);
      CHECK(r.out.find("FAIL") == std::string::npos);
    }
  }
  SUBCASE("Bott-Chern kernel into de Rham on the Hopf surface") {
    RunResult r = cli({"verify", "hopf2", "--checks", "natural-maps"});
    CHECK(r.out.find("ker(BC->dR): (1,1) 1") != std::string::npos);
    CHECK(golden()["hopf2"]["bc_to_derham_kernel_1_1"] == 1);
  }
}

TEST_CASE("random suite reports its seed") {
  RunResult a = cli({"verify", "torus1", "--checks", "random"});
  CHECK(a.out.find("seed=" + std::to_string(kDefaultSeed)) != std::string::npos);
  RunResult b = cli({"verify", "torus1", "--checks", "random", "--seed", "99"});
  CHECK(b.out.find("seed=99") != std::string::npos);
  CHECK(b.exit_code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* fmt : {"table", "json", "csv"}) {
    RunResult a = cli({"verify", "iwasawa", "--flavors", "all", "--output", fmt});
    RunResult b = cli({"verify", "iwasawa", "--flavors", "all", "--output", fmt});
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("usage, parse and applicability errors exit with 2") {
  CHECK(cli({}).exit_code == 2);
  CHECK(cli({"frobnicate"}).exit_code == 2);
  CHECK(cli({"compute"}).exit_code == 2);
  CHECK(cli({"compute", "no-such-model"}).exit_code == 2);
  CHECK(cli({"compute", "iwasawa", "--flavors", "hodge"}).exit_code == 2);
  CHECK(cli({"compute", "iwasawa", "--output", "xml"}).exit_code == 2);
  CHECK(cli({"verify", "iwasawa", "--checks", "nonsense"}).exit_code == 2);
  RunResult r = cli({"verify", "torus1", "--checks", "cone-les"});
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("vaisman") != std::string::npos);
  CHECK(cli({"verify", "iwasawa", "--checks", "action:nobody"}).exit_code == 2);
  CHECK(cli({"compute", HODGEKIT_SOURCE_DIR "/models/lshape.cplx", "--flavors", "bc"}).exit_code == 2);
  CHECK(cli({"compute", "--help"}).exit_code == 0);
}

TEST_CASE("model files are accepted by path") {
  RunResult r = cli({"compute", HODGEKIT_SOURCE_DIR "/models/lshape.cplx"});
  CHECK(r.exit_code == 0);
  CHECK(parse_table(r.out, "dolbeault")["1,0"] == 1);
  RunResult same = cli({"compute", HODGEKIT_SOURCE_DIR "/models/iwasawa.cplx", "--flavors", "all"});
  CHECK(same.out == cli({"compute", "iwasawa", "--flavors", "all"}).out);
}

TEST_CASE("list") {
  RunResult r = cli({"list"});
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out).size() == catalog().size());
  CHECK(r.out.find("phi1-dual") != std::string::npos);
}

TEST_CASE("flavor expansion") {
  CHECK(expand_flavors({"all"}) ==
        std::vector<Flavor>{Flavor::dolbeault, Flavor::anti_dolbeault, Flavor::derham, Flavor::bott_chern, Flavor::aeppli});
  CHECK(expand_flavors({"bc", "dolbeault", "bc"}) == std::vector<Flavor>{Flavor::dolbeault, Flavor::bott_chern});
  CHECK(expand_flavors({"abc"}).size() == 4);
  CHECK_THROWS(expand_flavors({"hodge"}));
}
