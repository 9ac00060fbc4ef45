#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fugue/generators.hpp"
#include "fugue/rel.hpp"

using namespace fugue;

namespace {

Rel rel_of(const FinSet& a, const FinSet& b, std::vector<std::pair<int, int>> pairs) {
  Rel r(a, b);
  for (auto [i, j] : pairs) r.set(i, j, true);
  return r;
}

} // namespace

TEST_CASE("relational composition convention") {
  FinSet two = numbered_set("A", "a", 2);
  FinSet b("B", {"b"});
  Rel i = rel_of(two, two, {{0, 1}});     // 1 -> 2 in the contract's numbering
  Rel e = rel_of(two, b, {{1, 0}});       // E = {(2, b)}
  Rel ei = rel_compose(e, i);             // apply I first, then E
  CHECK(ei == rel_of(two, b, {{0, 0}}));  // {(1, b)}

  CHECK(rel_compose(e, identity_rel(two)) == e);
  Rel empty(two, two);
  CHECK(rel_compose(e, empty) == Rel(two, b));
  FinSet three = numbered_set("C", "c", 3);
  CHECK_THROWS_AS(rel_compose(rel_of(three, b, {}), e), TypeError);
}

TEST_CASE("closures") {
  FinSet two = numbered_set("A", "a", 2);
  CHECK(refl_trans_closure(Rel(two, two)) == identity_rel(two));
  Rel edge = rel_of(two, two, {{0, 1}});
  CHECK(refl_trans_closure(edge) == rel_of(two, two, {{0, 0}, {1, 1}, {0, 1}}));
  Rel preorder = refl_trans_closure(edge);
  CHECK(refl_trans_closure(preorder) == preorder);

  CHECK(trans_closure(Rel(two, two)) == Rel(two, two));
  CHECK(trans_closure(edge) == edge);
  FinSet three = numbered_set("A", "a", 3);
  Rel chain = rel_of(three, three, {{0, 1}, {1, 2}});
  CHECK(trans_closure(chain) == rel_of(three, three, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("reachability extension, moore mode") {
  FinSet two = numbered_set("A", "a", 2);
  FinSet b("B", {"b"});
  Rel empty(two, two);
  Rel o = rel_of(two, b, {{1, 0}});
  // No steps: the closure is the diagonal and R = O.
  CHECK(ran_reachability(empty, o, RelMode::Moore) == o);

  Rel i = rel_of(two, two, {{0, 1}});
  // Predecessor a0 of a1 lacks (a0, b): R is empty.
  CHECK(ran_reachability(i, o, RelMode::Moore) == Rel(two, b));
  Rel oFull = rel_of(two, b, {{0, 0}, {1, 0}});
  CHECK(ran_reachability(i, oFull, RelMode::Moore) == oFull);
}

TEST_CASE("terminality certificates on the exhaustive 2x1 grid") {
  FinSet a = numbered_set("A", "a", 2);
  FinSet b("B", {"b"});
  for (unsigned iMask = 0; iMask < 16; ++iMask) {
    Rel i(a, a);
    for (int k = 0; k < 4; ++k) {
      if (iMask & (1u << k)) i.set(k / 2, k % 2, true);
    }
    for (unsigned oMask = 0; oMask < 4; ++oMask) {
      Rel o(a, b);
      for (int k = 0; k < 2; ++k) {
        if (oMask & (1u << k)) o.set(k, 0, true);
      }
      for (RelMode mode : {RelMode::Moore, RelMode::Mealy}) {
        Rel r = ran_reachability(i, o, mode);
        CHECK(is_rel_machine(r, i, o, mode));
        CHECK(terminal_gfp(i, o, mode) == r);
        CHECK(verify_terminal(r, i, o, mode).ok);
      }
    }
  }
}

TEST_CASE("singleton base counts machines as subsets of O") {
  FinSet pt("A", {"*"});
  FinSet b = numbered_set("B", "b", 2);
  for (bool loop : {false, true}) {
    Rel i(pt, pt);
    if (loop) i.set(0, 0, true);
    for (unsigned oMask = 0; oMask < 4; ++oMask) {
      Rel o(pt, b);
      for (int k = 0; k < 2; ++k) {
        if (oMask & (1u << k)) o.set(0, k, true);
      }
      Rel r = ran_reachability(i, o, RelMode::Moore);
      TerminalReport rep = verify_terminal(r, i, o, RelMode::Moore);
      CHECK(rep.ok);
      CHECK(rep.machinesSeen == (1LL << o.count()));
    }
  }
}

TEST_CASE("mealy mode with empty input and output is the full relation") {
  FinSet a = numbered_set("A", "a", 2);
  FinSet b("B", {"b"});
  Rel i(a, a);
  Rel o(a, b);
  Rel r = ran_reachability(i, o, RelMode::Mealy);
  CHECK(r == full_rel(a, b));
  CHECK(verify_terminal(r, i, o, RelMode::Mealy).ok);
  // The Moore answer differs here: it must stay below O.
  CHECK(ran_reachability(i, o, RelMode::Moore) == Rel(a, b));
}

TEST_CASE("chain reachability separates the two closure choices") {
  // a -> b -> c, d isolated; O covers a and b only. Reflexive closure makes
  // c and d fail through themselves; the strict closure keeps both.
  FinSet av("A", {"a", "b", "c", "d"});
  FinSet x("X", {"x"});
  Rel i = rel_of(av, av, {{0, 1}, {1, 2}});
  Rel o = rel_of(av, x, {{0, 0}, {1, 0}});
  Rel moore = ran_reachability(i, o, RelMode::Moore);
  CHECK(moore == rel_of(av, x, {{0, 0}, {1, 0}}));
  Rel mealy = ran_reachability(i, o, RelMode::Mealy);
  CHECK(mealy == full_rel(av, x));
  CHECK(verify_terminal(moore, i, o, RelMode::Moore).ok);
  CHECK(verify_terminal(mealy, i, o, RelMode::Mealy).ok);
}

TEST_CASE("machines are closed under the reflexive-transitive closure") {
  FinSet a = numbered_set("A", "a", 2);
  FinSet b = numbered_set("B", "b", 2);
  for (unsigned iMask = 0; iMask < 16; ++iMask) {
    Rel i(a, a);
    for (int k = 0; k < 4; ++k) {
      if (iMask & (1u << k)) i.set(k / 2, k % 2, true);
    }
    for (unsigned eMask = 0; eMask < 16; ++eMask) {
      Rel e(a, b);
      for (int k = 0; k < 4; ++k) {
        if (eMask & (1u << k)) e.set(k / 2, k % 2, true);
      }
      if (!rel_compose(e, i).subset_of(e)) continue;
      CHECK(rel_compose(e, refl_trans_closure(i)).subset_of(e));
    }
  }
}

TEST_CASE("reachability equals the union of all machines") {
  FinSet a = numbered_set("A", "a", 2);
  FinSet b = numbered_set("B", "b", 2);
  Rng rng(91);
  for (int trial = 0; trial < 25; ++trial) {
    Rel i = random_rel(rng, a, a);
    Rel o = random_rel(rng, a, b);
    for (RelMode mode : {RelMode::Moore, RelMode::Mealy}) {
      Rel r = ran_reachability(i, o, mode);
      Rel unionAll(a, b);
      for (unsigned mask = 0; mask < 16; ++mask) {
        Rel e(a, b);
        for (int k = 0; k < 4; ++k) {
          if (mask & (1u << k)) e.set(k / 2, k % 2, true);
        }
        if (is_rel_machine(e, i, o, mode)) unionAll = unionAll.union_with(e);
      }
      CHECK(unionAll == r);
    }
  }
}

TEST_CASE("relational machine wrappers validate on construction") {
  FinSet a = numbered_set("A", "a", 2);
  FinSet b("B", {"b"});
  Rel i = rel_of(a, a, {{0, 1}});
  Rel o = rel_of(a, b, {{0, 0}, {1, 0}});
  CHECK_NOTHROW(RelMooreMachine(ran_reachability(i, o, RelMode::Moore), i, o));
  CHECK_NOTHROW(RelMealyMachine(ran_reachability(i, o, RelMode::Mealy), i, o));
  // E = {(a1, b)} is not closed under the predecessor step through (a0, a1).
  Rel notClosed = rel_of(a, b, {{1, 0}});
  CHECK_THROWS_AS(RelMooreMachine(notClosed, i, o), InvariantViolation);
  Rel aboveO = full_rel(a, b);
  CHECK_THROWS_AS(RelMooreMachine(aboveO, i, rel_of(a, b, {{0, 0}})), InvariantViolation);
}

TEST_CASE("resource limit on the enumeration") {
  FinSet a = numbered_set("A", "a", 4);
  FinSet b = numbered_set("B", "b", 4);
  Rel i(a, a);
  Rel o = full_rel(a, b);
  CHECK_THROWS_AS(verify_terminal(o, i, o, RelMode::Moore, 14), ResourceError);
}
