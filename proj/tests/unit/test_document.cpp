#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "lieforge/document.hpp"
#include "random_algebra.hpp"
#include "suites.hpp"

using namespace lieforge;
using namespace lieforge::testing;

namespace {

const char* kHeisHeader = R"({"ring": {"l": 5, "N": 1}, "kind": "lie", "degrees": [2, 1],
  "basis": [["x", "y"], ["z"]], "brackets": [)";

std::string heis_with(const std::string& brackets) { return std::string(kHeisHeader) + brackets + "]}"; }

ParseError parse_error(const std::string& text, const ParseOptions& options = {}) {
  try {
    parse_document(text, ".", options);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("document parsed: " << text);
  throw std::logic_error("unreachable");
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "lieforge_test_document") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("Heis_5 round-trips") {
  auto heis = heisenberg(5);
  auto text = serialize_lie(heis);
  auto doc = parse_document(text, ".");
  REQUIRE(doc.lie);
  CHECK(*doc.lie == heis);
  CHECK(serialize_lie(*doc.lie) == text);
}

TEST_CASE("random algebras and Artin algebras round-trip") {
  Rng rng(17);
  for (std::uint32_t l : {2u, 3u, 5u})
    for (int i = 0; i < 20; ++i) {
      auto lie = random_lie(rng, CoeffRing(l), {});
      auto doc = parse_document(serialize_lie(lie), ".");
      CHECK(*doc.lie == lie);
    }
  for (const auto& a : artin_suite(3)) {
    CAPTURE(a.name);
    auto doc = parse_document(serialize_artin(*a.algebra), ".");
    REQUIRE(doc.artin);
    CHECK(*doc.artin == *a.algebra);
  }
}

TEST_CASE("[x,y] = z together with [y,x] = z is an antisymmetry error naming both entries") {
  auto e = parse_error(heis_with(R"({"left": [1, 0], "right": [1, 1], "value": [[0, 1]]},
    {"left": [1, 1], "right": [1, 0], "value": [[0, 1]]})"));
  std::string what = e.what();
  CHECK(e.mathematical());
  CHECK(what.find("antisymmetry") != std::string::npos);
  CHECK(what.find("/brackets/0") != std::string::npos);
  CHECK(what.find("/brackets/1") != std::string::npos);
  CHECK(what.find("[y,x]") != std::string::npos);
  CHECK(what.find("[x,y]") != std::string::npos);
}

TEST_CASE("a value in the wrong degree is rejected with its JSON path") {
  auto e = parse_error(heis_with(R"({"left": [1, 0], "right": [1, 1], "value": [[1, 0, 1]]})"));
  CHECK(e.path() == "/brackets/0/value/0/0");
  CHECK(e.mathematical());
  CHECK(std::string(e.what()).find("grading") != std::string::npos);
}

TEST_CASE("Jacobi violations name the offending triple") {
  // x, y, w in degree 1, z = [x,y], a = [z,w]: J(x,y,w) = [w,z] = -a.
  const std::string text = R"({"ring": {"l": 3, "N": 1}, "kind": "lie", "degrees": [3, 1, 1],
    "basis": [["x", "y", "w"], ["z"], ["a"]], "brackets": [
      {"left": [1, 0], "right": [1, 1], "value": [[0, 1]]},
      {"left": [1, 2], "right": [2, 0], "value": [[0, 2]]}]})";
  auto e = parse_error(text);
  CHECK(e.mathematical());
  std::string what = e.what();
  CHECK(what.find("x") != std::string::npos);
  CHECK(what.find("y") != std::string::npos);
  CHECK(what.find("w") != std::string::npos);
}

TEST_CASE("unknown keys: strict rejects, lax ignores") {
  const std::string text = R"({"ring": {"l": 5, "N": 1}, "kind": "lie", "degrees": [1], "colour": "red"})";
  auto e = parse_error(text);
  CHECK(e.path() == "/colour");
  CHECK_FALSE(e.mathematical());
  ParseOptions lax;
  lax.strict = false;
  CHECK(parse_document(text, ".", lax).lie);
}

TEST_CASE("syntax and schema errors") {
  CHECK_FALSE(parse_error("{\"ring\": ").mathematical());
  CHECK(parse_error(R"({"kind": "lie", "degrees": [1]})").path() == "/ring");
  CHECK(parse_error(R"({"ring": {"l": 4}, "kind": "lie", "degrees": [1]})").path() == "/ring");
  CHECK(parse_error(R"({"ring": {"l": 5}, "kind": "magma"})").path() == "/kind");
  CHECK(parse_error(heis_with(R"({"left": [1, 0], "right": [1, 2], "value": []})")).path() == "/brackets/0/right/1");
  CHECK(parse_error(heis_with(R"({"left": [1, 1], "right": [1, 0], "value": [[0, 1]]})")).path() == "/brackets/0");
}

TEST_CASE("morphisms, reps and deformations resolve relative references") {
  TempDir dir;
  dir.write("heis.json", serialize_lie(heisenberg(5)));
  dir.write("ab.json", serialize_lie(abelian_21(5)));
  dir.write("t2.json", serialize_artin(ArtinLocalAlgebra::truncated_polynomial(5, 2)));
  dir.write("id.json", R"({"ring": {"l": 5, "N": 1}, "kind": "rep", "source": "heis.json", "target": "heis.json",
    "blocks": [[[1, 0], [0, 1]], [[1]]]})");
  dir.write("bad.json", R"({"ring": {"l": 5, "N": 1}, "kind": "morphism", "source": "ab.json", "target": "heis.json",
    "blocks": [[[1, 0], [0, 1]], [[0]]]})");
  dir.write("def.json", R"({"ring": {"l": 5, "N": 1}, "kind": "deformation", "lie": "ab.json", "base": "t2.json",
    "brackets": [{"left": [1, 0], "right": [1, 1], "value": [[2, 0, 1, 1]]}]})");
  auto rep = load_document(dir.path / "id.json");
  REQUIRE(rep.rep);
  CHECK(rep.morphism->respects_brackets());
  try {
    load_document(dir.path / "bad.json");
    FAIL("Ab -> Heis accepted");
  } catch (const ParseError& e) {
    CHECK(e.mathematical());
    CHECK(e.path() == "/blocks");
  }
  auto def = load_document(dir.path / "def.json");
  REQUIRE(def.deformation);
  CHECK(def.deformation->base()->rank() == 2);
  dir.write("dangling.json", R"({"ring": {"l": 5, "N": 1}, "kind": "rep", "source": "missing.json", "target": "heis.json",
    "blocks": []})");
  CHECK_THROWS_AS(load_document(dir.path / "dangling.json"), ParseError);
}
