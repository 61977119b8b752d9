#include "helpers.hpp"

#include "hodgekit/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace hodgekit;
using testing_support::built;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    parse_model_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const char* kHeader = "model bad\ndim 3\ngenerator f1 (1,0)\ngenerator f2 (1,0)\ngenerator f3 (1,0)\n";

}  // namespace

TEST_CASE("catalog contents") {
  std::vector<std::string> names;
  for (const auto& m : catalog()) names.push_back(m.name);
  CHECK(names == std::vector<std::string>{"torus1", "torus2", "torus3", "iwasawa", "kodaira_thurston", "hopf2", "hopf3"});
  CHECK_FALSE(find_in_catalog("nope"));
  CHECK(find_in_catalog("hopf2")->kind == ModelKind::vaisman);
  CHECK(find_in_catalog("iwasawa")->contractions.size() == 2);
}

TEST_CASE("parse and serialize round-trip") {
  for (const auto& m : catalog()) {
    CAPTURE(m.name);
    std::string text = serialize(m);
    ModelSpec again = parse_model_file(text);
    CHECK(serialize(again) == text);
    CHECK(again.name == m.name);
    CHECK(again.kind == m.kind);
    CHECK(again.contractions == m.contractions);
    if (m.kind == ModelKind::lie) CHECK(again.structure() == m.structure());
    CHECK(parse_model_file(catalog_text(m.name)).name == m.name);
  }
}

TEST_CASE("expressions with complex coefficients") {
  ModelSpec m = parse_model_file(
      "model c\ndim 3\ngenerator a (1,0)\ngenerator b (1,0)\ngenerator c (1,0)\n"
      "d c = (1+i) a^b - 2i a^~a + 1/2 b^~b\n");
  const Expression& e = m.structure().differentials.at("c");
  REQUIRE(e.size() == 3);
  CHECK(e[0].coeff == GaussianRational(1, 1));
  CHECK(e[1].coeff == GaussianRational(0, -2));
  CHECK(e[2].coeff == GaussianRational::fraction(1, 2));
  CHECK(e[1].factors == std::vector<std::string>{"a", "~a"});
  CHECK(parse_model_file(serialize(m)).structure() == m.structure());
}

TEST_CASE("parse errors carry line numbers") {
  std::string h = kHeader;
  CHECK(parse_error_line(h + "d f3 = f1\n") == 6);
  CHECK(parse_error_line(h + "d f3 = f1^f9\n") == 6);
  CHECK(parse_error_line(h + "\n# comment\nd f3 = 2x f1^f2\n") == 8);
  CHECK(parse_error_line(h + "generator f1 (1,0)\n") == 6);
  CHECK(parse_error_line(h + "generator g (1,1)\n") == 6);
  CHECK(parse_error_line(h + "d f3 = f1^f2\nd f3 = f1^f2\n") == 7);
  CHECK(parse_error_line(h + "frobnicate\n") == 6);
  CHECK_THROWS_AS(parse_model_file(""), ParseError);
  CHECK(parse_error_line("banana\n") == 1);
  CHECK(parse_error_line("model x\ngenerator a (1,0)\n") == 2);
  CHECK(parse_error_line("matrix m\ndim 1\nslot (0,0) 1\nslot (0,1) 1\ndelbar (0,0): 1 2\n") == 5);
  CHECK(parse_error_line("matrix m\ndim 1\nslot (2,0) 1\n") == 3);
  CHECK(parse_error_line("vaisman v\ndim 2\nmode sideways\n") == 3);
  CHECK(parse_error_line("vaisman v\ndim 2\nbasic (0,0) 1\ncontract lee theta01 = 1\n") == 4);

  try {
    parse_model_file(h + "d f3 = f1\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("degree 2") != std::string::npos);
  }
}

TEST_CASE("semantic errors surface when building") {
  // d f2 = f1^~f1 and d f3 = f2^~f2 parse fine but d^2 f3 != 0.
  ModelSpec m = parse_model_file(std::string(kHeader) + "d f2 = f1^~f1\nd f3 = f2^~f2\n");
  CHECK_THROWS_AS(build_model(m), InvalidModel);
  ModelSpec v = parse_model_file("vaisman v\ndim 2\nbasic (1,1) 1\n");
  CHECK_THROWS_AS(build_model(v), InvalidModel);
}

TEST_CASE("built models") {
  BuiltModel kt = built("kodaira_thurston");
  CHECK(rank(kt.complex.delbar.block_or_zero(kt.complex.space, {1, 0})) == 1);
  BuiltModel iw = built("iwasawa");
  CHECK(iw.complex.space.dim({2, 0}) == 3);
  CHECK(iw.exterior.has_value());
  CHECK(iw.find_contraction("central"));
  CHECK_FALSE(iw.find_contraction("missing"));
  BuiltModel h = built("hopf2");
  CHECK(h.vaisman.has_value());
  CHECK(h.complex.space.total_dim() == 8);
  CHECK(h.find_contraction("lee"));
}

TEST_CASE("matrix models") {
  ModelSpec m = parse_model_file(read_file(std::filesystem::path(HODGEKIT_SOURCE_DIR) / "models" / "square.cplx"));
  CHECK(m.kind == ModelKind::matrix);
  BuiltModel b = build_model(m);
  CHECK(b.complex.space.total_dim() == 4);
  CHECK(validate(b.complex).ok);
  CHECK(dolbeault(b.complex).total() == 0);
  CHECK(bott_chern(b.complex).total() == 0);
  CHECK(aeppli(b.complex).total() == 0);
  CHECK(parse_model_file(serialize(m)).matrix().delbar == m.matrix().delbar);

  // Anticommutation broken: del (0,1) should be -1.
  std::string bad = serialize(m);
  bad.replace(bad.find("del (0,1): -1"), 13, "del (0,1): 1");
  CHECK_THROWS_AS(build_model(parse_model_file(bad)), InvalidModel);

  ModelSpec l = parse_model_file(read_file(std::filesystem::path(HODGEKIT_SOURCE_DIR) / "models" / "lshape.cplx"));
  BuiltModel lb = build_model(l);
  CHECK_FALSE(lb.complex.has_del);
  CHECK(dolbeault(lb.complex).total() == 1);
}

TEST_CASE("shipped model files match the catalog") {
  namespace fs = std::filesystem;
  std::size_t matched = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(HODGEKIT_SOURCE_DIR) / "models")) {
    CAPTURE(entry.path().string());
    ModelSpec m = parse_model_file(read_file(entry.path()));
    CHECK((entry.path().extension() == ".vsm") == (m.kind == ModelKind::vaisman));
    if (auto c = find_in_catalog(m.name)) {
      CHECK(serialize(*c) == serialize(m));
      ++matched;
    }
  }
  CHECK(matched == catalog().size());
}
