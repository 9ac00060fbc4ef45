#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fugue/generators.hpp"
#include "fugue/kleisli.hpp"

using namespace fugue;

namespace {

PowersetMealy two_branch() {
  FinSet states("E", {"e", "e0", "e1"});
  FinSet input("I", {"a"});
  FinSet output("O", {"x", "y"});
  std::vector<std::vector<int>> d{{1, 2}, {1}, {}};
  std::vector<std::vector<int>> s{{0, 1}, {0}, {}};
  return PowersetMealy("branch", std::move(states), std::move(input), std::move(output),
                       std::move(d), std::move(s));
}

} // namespace

TEST_CASE("lift gives singleton tables") {
  MealyMachine m = xor_machine();
  PowersetMealy l = lift_deterministic(m);
  for (int e = 0; e < 2; ++e) {
    for (int a = 0; a < 2; ++a) {
      CHECK(l.d(e, a) == std::vector<int>{m.d(e, a)});
      CHECK(l.s(e, a) == std::vector<int>{m.s(e, a)});
    }
  }
}

TEST_CASE("powerset ordering and labels") {
  FinSet ab("ab", {"a", "b"});
  FinSet p = powerset(ab);
  CHECK(p.labels() == std::vector<std::string>{"{}", "{a}", "{b}", "{a,b}"});
}

TEST_CASE("expand on the lifted xor machine") {
  MealyMachine big = expand(lift_deterministic(xor_machine()));
  // Subsets are indexed by bitmask; {0} = 1, {1} = 2.
  CHECK(big.d(1, 2) == 2);
  CHECK(big.s(1, 2) == 2);
  // Empty state set always maps to the empty set.
  for (int t = 0; t < big.input().size(); ++t) {
    CHECK(big.d(0, t) == 0);
    CHECK(big.s(0, t) == 0);
  }
}

TEST_CASE("expand of a branching machine takes unions") {
  MealyMachine big = expand(two_branch());
  // d({e}, {a}) = {e0, e1}: bitmask 1 -> bitmask 2|4 = 6.
  CHECK(big.d(1, 1) == 6);
  CHECK(big.s(1, 1) == 3);
}

TEST_CASE("expand refuses oversized carriers") {
  FinSet big = numbered_set("E", "e", 12);
  FinSet i1("I", {"a"});
  size_t cells = 12;
  std::vector<std::vector<int>> d(cells), s(cells);
  PowersetMealy n("big", big, i1, i1, std::move(d), std::move(s));
  CHECK_THROWS_AS(expand(n, 10), ResourceError);
}

TEST_CASE("expand-lift on singletons reproduces the machine") {
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    MealyMachine m = random_mealy(rng, 3, 3, 3);
    MealyMachine big = expand(lift_deterministic(m));
    for (int e = 0; e < m.states().size(); ++e) {
      for (int a = 0; a < m.input().size(); ++a) {
        CHECK(big.d(1 << e, 1 << a) == 1 << m.d(e, a));
        CHECK(big.s(1 << e, 1 << a) == 1 << m.s(e, a));
      }
    }
  }
}

TEST_CASE("nondeterministic run") {
  PowersetMealy n = two_branch();
  auto trace = run_nondeterministic(n, {0}, {0});
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].states == std::vector<int>{1, 2});
  CHECK(trace[0].outputs == std::vector<int>{0, 1});

  auto emptyTrace = run_nondeterministic(n, {}, {0, 0});
  CHECK(emptyTrace[0].states.empty());
  CHECK(emptyTrace[1].outputs.empty());
}

TEST_CASE("deterministic lift runs like the original") {
  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    MealyMachine m = random_mealy(rng, 3, 3, 3);
    PowersetMealy l = lift_deterministic(m);
    std::vector<int> w(5);
    for (auto& a : w) a = rng.uniform(m.input().size());
    auto trace = run_nondeterministic(l, {0}, w);
    RunResult r = run_mealy(m, 0, w);
    REQUIRE(trace.size() == w.size());
    std::vector<int> cur{0};
    for (size_t k = 0; k < w.size(); ++k) {
      CHECK(trace[k].outputs == std::vector<int>{r.output[k]});
    }
    CHECK(trace.back().states == std::vector<int>{r.final_state});
  }
}

TEST_CASE("lift preserves machine morphisms") {
  Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    MealyMachine m = random_mealy(rng, 4, 2, 2);
    int n = m.states().size();
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(rng.uniform(i + 1))]);
    }
    MealyMachine mb = permuted_machine(m, p);
    FinFn f(m.states(), mb.states(), p);
    REQUIRE(check_machine_morphism(f, m, mb).ok);
    CHECK(check_kleisli_morphism(f, lift_deterministic(m), lift_deterministic(mb)).ok);
  }
  // A non-morphism must be rejected.
  MealyMachine m = xor_machine();
  FinSet pt("pt", {"*"});
  MealyMachine flat("flat", pt, m.input(), m.output(), {0, 0}, {0, 1});
  FinFn collapse(m.states(), pt, {0, 0});
  CHECK(!check_kleisli_morphism(collapse, lift_deterministic(m),
                                lift_deterministic(flat))
             .ok);
}

TEST_CASE("expansion is monotone and union-preserving (exhaustive, |E| <= 3)") {
  Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    FinSet e3 = numbered_set("E", "e", 3);
    FinSet i2 = numbered_set("I", "i", 2);
    FinSet o2 = numbered_set("O", "o", 2);
    size_t cells = 6;
    std::vector<std::vector<int>> d(cells), s(cells);
    for (size_t k = 0; k < cells; ++k) {
      for (int x = 0; x < 3; ++x) {
        if (rng.coin()) d[k].push_back(x);
      }
      for (int y = 0; y < 2; ++y) {
        if (rng.coin()) s[k].push_back(y);
      }
    }
    MealyMachine big = expand(PowersetMealy("nd", e3, i2, o2, std::move(d), std::move(s)));
    for (int sa = 0; sa < 8; ++sa) {
      for (int sb = 0; sb < 8; ++sb) {
        for (int t = 0; t < 4; ++t) {
          CHECK(big.d(sa | sb, t) == (big.d(sa, t) | big.d(sb, t)));
          CHECK(big.s(sa | sb, t) == (big.s(sa, t) | big.s(sb, t)));
          if ((sa & sb) == sa) { // sa subset of sb
            CHECK((big.d(sa, t) & big.d(sb, t)) == big.d(sa, t));
          }
        }
      }
    }
    for (int sa = 0; sa < 8; ++sa) {
      for (int ta = 0; ta < 4; ++ta) {
        for (int tb = 0; tb < 4; ++tb) {
          CHECK(big.d(sa, ta | tb) == (big.d(sa, ta) | big.d(sa, tb)));
          CHECK(big.s(sa, ta | tb) == (big.s(sa, ta) | big.s(sa, tb)));
        }
      }
    }
  }
}
