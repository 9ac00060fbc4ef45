#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fugue/document.hpp"
#include "fugue/generators.hpp"

using namespace fugue;

namespace {

std::string corpus(const std::string& name) {
  return std::string(FUGUE_CORPUS_DIR) + "/" + name;
}

} // namespace

TEST_CASE("golden xor document") {
  Document doc = load_document(corpus("xor.json"));
  REQUIRE(doc.kind == Document::Kind::Mealy);
  const MealyMachine& m = doc.as<MealyMachine>();
  CHECK(m.states().size() == 2);
  CHECK(m.name() == "xor");
  CHECK(m == xor_machine());
}

TEST_CASE("empty file is a syntax error at 1:1") {
  try {
    parse_document("");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 1);
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_document("{\n  \"kind\": \"mealy\",\n  oops\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column >= 1);
  }
}

TEST_CASE("unknown kinds and missing fields") {
  CHECK_THROWS_AS(parse_document(R"({"kind": "mystery"})"), MalformedInputError);
  CHECK_THROWS_AS(parse_document(R"({"kind": "mealy"})"), MalformedInputError);
}

TEST_CASE("broken monoid laws are invariant violations naming the witness") {
  // Unit law: mul(0, 0) = 1 with unit 0.
  std::string unitBroken = R"({
    "kind": "monoid",
    "carrier": ["0", "1"],
    "unit": "0",
    "mul": [
      ["0", "0", "1"], ["0", "1", "1"], ["1", "0", "1"], ["1", "1", "1"]
    ]
  })";
  try {
    parse_document(unitBroken);
    FAIL("expected an invariant violation");
  } catch (const InvariantViolation& e) {
    CHECK(std::string(e.what()).find("unit law") != std::string::npos);
  }
  // Associativity: subtraction-like table on three elements.
  std::string assocBroken = R"({
    "kind": "monoid",
    "carrier": ["0", "1", "2"],
    "unit": "0",
    "mul": [
      ["0", "0", "0"], ["0", "1", "1"], ["0", "2", "2"],
      ["1", "0", "1"], ["1", "1", "0"], ["1", "2", "1"],
      ["2", "0", "2"], ["2", "1", "1"], ["2", "2", "0"]
    ]
  })";
  try {
    parse_document(assocBroken);
    FAIL("expected an invariant violation");
  } catch (const InvariantViolation& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }
}

TEST_CASE("unresolved references") {
  std::string text = R"({
    "kind": "monoid-machine",
    "states": ["*"],
    "input": "nowhere",
    "output": "nowhere",
    "d": [],
    "s": []
  })";
  CHECK_THROWS_AS(parse_document(text), UnresolvedReference);
}

TEST_CASE("duplicate defs are rejected") {
  std::string text = R"({
    "kind": "relation",
    "src": ["a"], "dst": ["a"], "pairs": [],
    "defs": [
      {"kind": "relation", "name": "r", "src": ["a"], "dst": ["a"], "pairs": []},
      {"kind": "relation", "name": "r", "src": ["a"], "dst": ["a"], "pairs": []}
    ]
  })";
  CHECK_THROWS_AS(parse_document(text), MalformedInputError);
}

TEST_CASE("nondeterministic mealy documents") {
  Document doc = load_document(corpus("nd_branch.json"));
  REQUIRE(doc.kind == Document::Kind::Mealy);
  REQUIRE(doc.holds<PowersetMealy>());
  const PowersetMealy& n = doc.as<PowersetMealy>();
  CHECK(n.d(0, 0) == std::vector<int>{1, 2});
  CHECK(n.s(2, 0).empty());
}

TEST_CASE("imports contribute defs") {
  Document doc = load_document(corpus("oswap.json"));
  REQUIRE(doc.kind == Document::Kind::SetFunctorKind);
  const SetFunctor& f = doc.as<SetFunctor>();
  CHECK(f.dom().morphisms().size() == 2);
  CHECK(f.at(0).size() == 2);
}

TEST_CASE("every corpus document round-trips") {
  namespace fs = std::filesystem;
  int seen = 0;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(FUGUE_CORPUS_DIR)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    INFO(p.string());
    Document doc = load_document(p.string());
    std::string text = serialize_document(doc);
    Document back = parse_document(text);
    CHECK(document_equal(doc, back));
    CHECK(serialize_document(back) == text);
    ++seen;
  }
  CHECK(seen >= 15);
}

TEST_CASE("monoid-machine documents validate the action") {
  std::string text = R"({
    "kind": "monoid-machine",
    "states": ["p", "q"],
    "input": {"kind": "monoid", "carrier": ["0", "1"], "unit": "0",
              "mul": [["0","0","0"],["0","1","1"],["1","0","1"],["1","1","0"]]},
    "output": {"free": ["x"]},
    "d": [["p","0","q"],["p","1","q"],["q","0","q"],["q","1","q"]],
    "s": [["p","0",[]],["p","1",["x"]],["q","0",[]],["q","1",["x"]]]
  })";
  // d(p, unit) != p: the loader must reject the table as a non-action.
  CHECK_THROWS_AS(parse_document(text), InvariantViolation);
}

TEST_CASE("serialized counterexample documents re-parse") {
  Document doc = load_document(corpus("nonfugal.json"));
  std::string text = serialize_document(doc);
  Document back = parse_document(text);
  CHECK(document_equal(doc, back));
}
