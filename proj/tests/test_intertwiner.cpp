#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fugue/generators.hpp"
#include "fugue/intertwiner.hpp"

using namespace fugue;

namespace {

FinFn machine_d_fn(const MealyMachine& m) {
  std::vector<int> table(static_cast<size_t>(m.states().size()) *
                         static_cast<size_t>(m.input().size()));
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < m.input().size(); ++a) {
      table[static_cast<size_t>(pair_index(m.states(), m.input(), e, a))] = m.d(e, a);
    }
  }
  return FinFn(product_set(m.states(), m.input()), m.states(), std::move(table));
}

FinFn machine_s_fn(const MealyMachine& m) {
  std::vector<int> table(static_cast<size_t>(m.states().size()) *
                         static_cast<size_t>(m.input().size()));
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < m.input().size(); ++a) {
      table[static_cast<size_t>(pair_index(m.states(), m.input(), e, a))] = m.s(e, a);
    }
  }
  return FinFn(product_set(m.states(), m.input()), m.output(), std::move(table));
}

/// Oracle: evaluate the interchange identities by composing whole functions
/// (products flatten to the same index arithmetic on both bracketings).
bool intertwiner_valid_by_composition(const Intertwiner& it) {
  FinFn dPrime = machine_d_fn(it.dst);
  FinFn sPrime = machine_s_fn(it.dst);
  FinFn d = machine_d_fn(it.src);
  FinFn s = machine_s_fn(it.src);
  FinFn idU = FinFn::identity(it.u);
  FinFn idV = FinFn::identity(it.v);
  FinFn idI = FinFn::identity(it.src.input());
  FinFn idE2 = FinFn::identity(it.dst.states());

  FinFn middle = compose(tensor_morphisms(it.eps, idI), tensor_morphisms(idE2, it.iota));
  FinFn lhsD = compose(it.eps, tensor_morphisms(dPrime, idU));
  FinFn rhsD = compose(tensor_morphisms(idV, d), middle);
  FinFn lhsS = compose(it.omega, tensor_morphisms(sPrime, idU));
  FinFn rhsS = compose(tensor_morphisms(idV, s), middle);
  return lhsD.table() == rhsD.table() && lhsS.table() == rhsS.table();
}

Intertwiner random_intertwiner(Rng& rng, const MealyMachine& m, const MealyMachine& m2,
                               int uSize, int vSize) {
  FinSet u = numbered_set("U", "u", uSize);
  FinSet v = numbered_set("V", "v", vSize);
  auto rnd = [&](const FinSet& dom, const FinSet& cod) {
    std::vector<int> t(static_cast<size_t>(dom.size()));
    for (auto& x : t) x = rng.uniform(cod.size());
    return FinFn(dom, cod, std::move(t));
  };
  FinFn iota = rnd(product_set(m2.input(), u), product_set(u, m.input()));
  FinFn eps = rnd(product_set(m2.states(), u), product_set(v, m.states()));
  FinFn omega = rnd(product_set(m2.output(), u), product_set(v, m.output()));
  return Intertwiner(m, m2, u, v, std::move(iota), std::move(eps), std::move(omega));
}

} // namespace

TEST_CASE("identity intertwiner validates") {
  Intertwiner id = identity_intertwiner(xor_machine());
  CHECK(check_intertwiner(id).ok);
}

TEST_CASE("morphism-induced intertwiners validate exactly for morphisms") {
  Rng rng(101);
  FinSet i2 = numbered_set("I", "i", 2);
  FinSet o2 = numbered_set("O", "o", 2);
  for (int trial = 0; trial < 20; ++trial) {
    auto mk = [&](const char* name) {
      FinSet st = numbered_set(name, "q", 2);
      std::vector<int> d(4), s(4);
      for (auto& x : d) x = rng.uniform(2);
      for (auto& x : s) x = rng.uniform(2);
      return MealyMachine(name, std::move(st), i2, o2, std::move(d), std::move(s));
    };
    MealyMachine m = mk("E");
    MealyMachine m2 = mk("F");
    for (int t0 = 0; t0 < 2; ++t0) {
      for (int t1 = 0; t1 < 2; ++t1) {
        FinFn f(m2.states(), m.states(), {t0, t1});
        Intertwiner it = morphism_intertwiner(m, m2, f);
        CHECK(check_intertwiner(it).ok == check_machine_morphism(f, m2, m).ok);
      }
    }
  }
}

TEST_CASE("verdicts agree with the function-composition oracle") {
  Rng rng(103);
  MealyMachine m = xor_machine();
  MealyMachine m2 = not_machine();
  int validSeen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Intertwiner it = random_intertwiner(rng, m, m2, 1 + rng.uniform(2), 1 + rng.uniform(2));
    bool viaCheck = check_intertwiner(it).ok;
    CHECK(viaCheck == intertwiner_valid_by_composition(it));
    validSeen += viaCheck ? 1 : 0;
  }
  // Identity-shaped data keeps the oracle honest on the passing side too.
  CHECK(intertwiner_valid_by_composition(identity_intertwiner(m)));
}

TEST_CASE("counterexamples name the failing equation and triple") {
  MealyMachine m = xor_machine();
  FinSet pt("pt", {"*"});
  // Break omega only: the d-identity still holds, the s-identity fails.
  auto unitor = [&](const FinSet& left) {
    std::vector<int> t(static_cast<size_t>(left.size()));
    for (int k = 0; k < left.size(); ++k) t[static_cast<size_t>(k)] = k;
    return FinFn(product_set(left, pt), product_set(pt, left), std::move(t));
  };
  FinFn badOmega(product_set(m.output(), pt), product_set(pt, m.output()), {1, 0});
  Intertwiner it(m, m, pt, pt, unitor(m.input()), unitor(m.states()), badOmega);
  IntertwinerReport r = check_intertwiner(it);
  CHECK(!r.ok);
  CHECK(r.equation == 's');
  CHECK(r.state == 0);
  CHECK(r.letter == 0);
}

TEST_CASE("two-cells between intertwiners") {
  MealyMachine m = xor_machine();
  Intertwiner id = identity_intertwiner(m);
  FinSet pt("pt", {"*"});
  IntertwinerTwoCell idCell(id, id, FinFn::identity(pt), FinFn::identity(pt));
  CHECK(check_two_cell(idCell).ok);

  // Collapse a two-point U onto the identity intertwiner: constant structure
  // maps commute with the collapse.
  FinSet u2 = numbered_set("U", "u", 2);
  auto constStruct = [&](const FinSet& left) {
    std::vector<int> t(static_cast<size_t>(left.size()) * 2);
    for (int x = 0; x < left.size(); ++x) {
      for (int u = 0; u < 2; ++u) {
        t[static_cast<size_t>(pair_index(left, u2, x, u))] =
            pair_index(u2, left, 0, x); // always lands in u0
      }
    }
    return FinFn(product_set(left, u2), product_set(u2, left), std::move(t));
  };
  // V = {*}: eps/omega collapse to (v, -) with a two-point U.
  auto constStructV = [&](const FinSet& left) {
    std::vector<int> t(static_cast<size_t>(left.size()) * 2);
    for (int x = 0; x < left.size(); ++x) {
      for (int u = 0; u < 2; ++u) {
        t[static_cast<size_t>(pair_index(left, u2, x, u))] = x;
      }
    }
    return FinFn(product_set(left, u2), product_set(pt, left), std::move(t));
  };
  Intertwiner wide(m, m, u2, pt, constStruct(m.input()), constStructV(m.states()),
                   constStructV(m.output()));
  REQUIRE(check_intertwiner(wide).ok);
  // f collapses u0, u1 to the point; g is the identity on the point. The
  // iota square needs f applied on both sides, which the constant maps obey.
  Intertwiner idPt = identity_intertwiner(m);
  FinFn collapse(u2, pt, {0, 0});
  // Squares compare wide against idPt: iota'(i, f u) = (f x I)(iota(i, u)).
  IntertwinerTwoCell cell(wide, idPt, collapse, FinFn::identity(pt));
  CHECK(check_two_cell(cell).ok);

  // Deliberately broken g: swap on a two-point V.
  FinSet v2 = numbered_set("V", "v", 2);
  auto structV2 = [&](const FinSet& left) {
    std::vector<int> t(static_cast<size_t>(left.size()));
    for (int x = 0; x < left.size(); ++x) {
      t[static_cast<size_t>(x)] = pair_index(v2, left, 0, x);
    }
    return FinFn(product_set(left, pt), product_set(v2, left), std::move(t));
  };
  Intertwiner tall(m, m, pt, v2, identity_intertwiner(m).iota, structV2(m.states()),
                   structV2(m.output()));
  REQUIRE(check_intertwiner(tall).ok);
  FinFn gBad(v2, v2, {1, 0});
  IntertwinerTwoCell bad(tall, tall, FinFn::identity(pt), gBad);
  TwoCellReport r = check_two_cell(bad);
  CHECK(!r.ok);
  CHECK(r.square == "eps");
}

TEST_CASE("pasting of valid intertwiners validates") {
  Rng rng(107);
  MealyMachine m = xor_machine();
  std::vector<Intertwiner> valid;
  valid.push_back(identity_intertwiner(m));
  for (int trial = 0; trial < 400 && valid.size() < 25; ++trial) {
    Intertwiner it = random_intertwiner(rng, m, m, 1 + rng.uniform(2), 1 + rng.uniform(2));
    if (check_intertwiner(it).ok) valid.push_back(std::move(it));
  }
  REQUIRE(valid.size() > 1);
  for (const auto& it1 : valid) {
    for (const auto& it2 : valid) {
      Intertwiner pasted = compose_intertwiners(it2, it1);
      CHECK(check_intertwiner(pasted).ok);
    }
  }
}

TEST_CASE("pasting with the identity is the unitor") {
  Rng rng(109);
  MealyMachine m = xor_machine();
  Intertwiner id = identity_intertwiner(m);
  for (int trial = 0; trial < 60; ++trial) {
    Intertwiner it = random_intertwiner(rng, m, m, 1 + rng.uniform(2), 1 + rng.uniform(2));
    if (!check_intertwiner(it).ok) continue;
    Intertwiner left = compose_intertwiners(id, it);
    auto unitor = [&](const FinSet& a, const FinSet& prod) {
      REQUIRE(a.size() == prod.size());
      std::vector<int> t(static_cast<size_t>(a.size()));
      for (int k = 0; k < a.size(); ++k) t[static_cast<size_t>(k)] = k;
      return FinFn(a, prod, std::move(t));
    };
    IntertwinerTwoCell cell(it, left, unitor(it.u, left.u), unitor(it.v, left.v));
    CHECK(check_two_cell(cell).ok);
  }
}

TEST_CASE("pasting of morphism-induced intertwiners is the composite") {
  // Machine morphisms compose contravariantly through the pasting.
  MealyMachine m = xor_machine();
  MealyMachine mb = permuted_machine(m, {1, 0});
  FinFn f(mb.states(), m.states(), {1, 0}); // morphism mb -> m as state map
  REQUIRE(check_machine_morphism(f, mb, m).ok);
  Intertwiner it1 = morphism_intertwiner(m, mb, f); // m ~> mb
  FinFn g(m.states(), mb.states(), {1, 0});
  REQUIRE(check_machine_morphism(g, m, mb).ok);
  Intertwiner it2 = morphism_intertwiner(mb, m, g); // mb ~> m
  Intertwiner pasted = compose_intertwiners(it2, it1); // m ~> m
  REQUIRE(check_intertwiner(pasted).ok);
  // The underlying composite is f . g = id on m's states; compare against
  // the identity intertwiner through the unitor bijections.
  Intertwiner viaId = morphism_intertwiner(m, m, compose(f, g));
  // Both U and V are one-point products, so the raw indices already agree.
  for (int e = 0; e < 2; ++e) {
    CHECK(pasted.eps(e) == viaId.eps(e));
  }
}

TEST_CASE("middle machine mismatch is a type error") {
  MealyMachine m = xor_machine();
  MealyMachine n = not_machine();
  Intertwiner idm = identity_intertwiner(m);
  Intertwiner idn = identity_intertwiner(n);
  CHECK_THROWS_AS(compose_intertwiners(idn, idm), TypeError);
}
