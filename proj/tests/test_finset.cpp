#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fugue/finset.hpp"
#include "fugue/generators.hpp"
#include "fugue/monoid.hpp"

using namespace fugue;

TEST_CASE("finset basics") {
  FinSet s("s", {"a", "b", "c"});
  CHECK(s.size() == 3);
  CHECK(s.index("b") == 1);
  CHECK(s.label(2) == "c");
  CHECK_THROWS_AS(s.index("z"), MalformedInputError);
  CHECK_THROWS_AS(FinSet("dup", {"a", "a"}), InvariantViolation);
  CHECK(FinSet("x", {"a", "b"}) == FinSet("y", {"a", "b"}));
  CHECK(FinSet("x", {"a", "b"}) != FinSet("x", {"b", "a"}));
}

TEST_CASE("product set") {
  FinSet e("e", {"e"});
  FinSet ab("ab", {"a", "b"});
  FinSet p = product_set(e, ab);
  CHECK(p.size() == 2);
  CHECK(p.label(0) == "e|a");
  CHECK(p.label(1) == "e|b");

  CHECK(product_set(FinSet("empty", {}), ab).size() == 0);

  FinSet bits("b", {"0", "1"});
  FinSet sq = product_set(bits, bits);
  CHECK(sq.size() == 4);
  // Lexicographic order, left factor outermost.
  CHECK(sq.labels() == std::vector<std::string>{"0|0", "0|1", "1|0", "1|1"});
  CHECK(pair_index(bits, bits, 1, 0) == 2);
  CHECK(unpair_index(bits, bits, 2) == std::pair<int, int>{1, 0});
}

TEST_CASE("finfn") {
  FinSet a("a", {"x", "y"});
  FinSet b("b", {"u", "v", "w"});
  FinFn f = FinFn::from_labels(a, b, {{"x", "w"}, {"y", "u"}});
  CHECK(f.map_label("x") == "w");
  CHECK_THROWS_AS(FinFn::from_labels(a, b, {{"x", "w"}}), MalformedInputError);
  CHECK_THROWS_AS(FinFn(a, b, {0, 5}), MalformedInputError);
  FinFn idb = FinFn::identity(b);
  CHECK(compose(idb, f) == f);
  CHECK(!f.is_bijection());
  CHECK(idb.is_bijection());
}

TEST_CASE("word concat") {
  FinSet ab("ab", {"a", "b"});
  Word empty(ab, {});
  Word wa = Word::from_labels(ab, {"a"});
  Word wab = Word::from_labels(ab, {"a", "b"});
  CHECK(word_concat(empty, wa) == wa);
  CHECK(word_concat(wa, empty) == wa);
  CHECK(word_concat(wab, Word::from_labels(ab, {"b"})) ==
        Word::from_labels(ab, {"a", "b", "b"}));
  FinSet other("cd", {"c", "d"});
  CHECK_THROWS_AS(word_concat(wa, Word(other, {})), TypeError);
}

TEST_CASE("word concat is a free monoid (random)") {
  Rng rng(42);
  FinSet ab("ab", {"a", "b", "c"});
  for (int t = 0; t < 100; ++t) {
    auto mk = [&] {
      std::vector<int> ls(static_cast<size_t>(rng.uniform(6)));
      for (auto& l : ls) l = rng.uniform(3);
      return Word(ab, std::move(ls));
    };
    Word u = mk(), v = mk(), w = mk();
    CHECK(word_concat(word_concat(u, v), w) == word_concat(u, word_concat(v, w)));
    CHECK(word_concat(u, v).length() == u.length() + v.length());
  }
}

TEST_CASE("monoid law check") {
  CHECK(check_monoid_laws(trivial_monoid()).ok);

  // Z/2 as xor; the exhaustive oracle walks all 8 triples by hand.
  FinMonoid z2 = cyclic_monoid(2);
  CHECK(check_monoid_laws(z2).ok);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(z2.mul(x, y) == (x ^ y));
      for (int z = 0; z < 2; ++z) {
        CHECK(z2.mul(z2.mul(x, y), z) == z2.mul(x, z2.mul(y, z)));
      }
    }
  }

  // Constant product 1 with unit 0: first violation is the unit pair (0, 0).
  FinMonoid broken("broken", FinSet("c", {"0", "1"}), 0, {1, 1, 1, 1});
  MonoidLawReport r = check_monoid_laws(broken);
  CHECK(!r.ok);
  CHECK(r.law == MonoidLawReport::Law::Unit);
  CHECK(r.witness == std::vector<std::string>{"0", "0"});
}

TEST_CASE("monoid errors") {
  FinMonoid partial("p", FinSet("c", {"0", "1"}), "0", {{"0", "0", "0"}});
  CHECK_THROWS_AS(check_monoid_laws(partial), MalformedInputError);
  CHECK_THROWS_AS(check_monoid_laws(FinMonoid("e", FinSet("c", {}), 0, {})),
                  MalformedInputError);
}

TEST_CASE("monoid desc values") {
  MonoidDesc fin{cyclic_monoid(3)};
  CHECK(fin.mul({1}, {2}) == MonVal{0});
  CHECK(fin.unit() == MonVal{0});
  CHECK(fin.show({2}) == "2");
  MonoidDesc free{FreeMonoidHandle{FinSet("ab", {"a", "b"})}};
  CHECK(free.unit().empty());
  CHECK(free.mul({0}, {1, 0}) == MonVal{0, 1, 0});
  CHECK(free.show({0, 1}) == "[a,b]");
  CHECK(free.show({}) == "[]");
}
