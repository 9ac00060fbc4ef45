#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fugue/generators.hpp"
#include "fugue/guitart.hpp"

using namespace fugue;

namespace {

MonoidMealyMachine swap_machine(const FinMonoid& n, int sValue) {
  // Z/2 (multiplicative) acting on two states by swap; the outputs on g are
  // the constant sValue, which is fugal iff sValue * sValue = unit holds
  // along the orbit; with s(e, 1) = unit this is fugal for sValue in a group.
  FinMonoid m = multiplicative_z2();
  FinSet pq("pq", {"p", "q"});
  std::vector<int> d{0, 1, 1, 0};
  std::vector<MonVal> s{{n.unit()}, {sValue}, {n.unit()}, {sValue}};
  return MonoidMealyMachine("swap", pq, MonoidDesc(m), MonoidDesc(n), std::move(d),
                            std::move(s));
}

} // namespace

TEST_CASE("category invariants are validated") {
  // A two-element "category" with a broken unit law.
  FinSet obj("o", {"*"});
  FinSet mor("m", {"1", "g"});
  CHECK_THROWS_AS(FinCat("bad", obj, mor, {0, 0}, {0, 0}, {0},
                         {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}}),
                  InvariantViolation);
  // The genuine one-object group.
  FinCat bz2 = monoid_as_category(multiplicative_z2());
  CHECK(bz2.objects().size() == 1);
  CHECK(bz2.morphisms().size() == 2);
  CHECK(bz2.compose(1, 1) == 0);
}

TEST_CASE("translation category of the swap action") {
  FinMonoid m = multiplicative_z2();
  FinSet e("e", {"e0", "e1"});
  FinFn action(product_set(e, m.carrier()), e, {0, 1, 1, 0});
  TranslationResult t = translation_category(e, m, action);
  CHECK(t.cat.objects().size() == 2);
  CHECK(t.cat.morphisms().size() == 4);
  // (e0, g) ; (e1, g) = (e0, g*g) = (e0, 1) = id at e0.
  int f = pair_index(e, m.carrier(), 0, 1);
  int g = pair_index(e, m.carrier(), 1, 1);
  CHECK(t.cat.compose(g, f) == t.cat.id(0));
  CHECK(is_discrete_opfibration(t.projection).ok);
}

TEST_CASE("translation category of the trivial monoid is discrete") {
  FinMonoid triv = trivial_monoid();
  FinSet e("e", {"a", "b", "c"});
  FinFn action(product_set(e, triv.carrier()), e, {0, 1, 2});
  TranslationResult t = translation_category(e, triv, action);
  CHECK(t.cat.morphisms().size() == 3);
  for (int mi = 0; mi < 3; ++mi) {
    CHECK(t.cat.src(mi) == t.cat.tgt(mi));
  }
}

TEST_CASE("translation category on a singleton is the monoid itself") {
  FinMonoid m = cyclic_monoid(3);
  FinSet pt("pt", {"*"});
  std::vector<int> table(3, 0);
  FinFn action(product_set(pt, m.carrier()), pt, table);
  TranslationResult t = translation_category(pt, m, action);
  CHECK(t.cat.objects().size() == 1);
  CHECK(t.cat.morphisms().size() == 3);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      // (*, x) ; (*, y) = (*, x*y), matching the one-object presentation.
      CHECK(t.cat.compose(y, x) == m.mul(x, y));
    }
  }
}

TEST_CASE("translation category demands an action") {
  FinMonoid m = multiplicative_z2();
  FinSet e("e", {"e0", "e1"});
  FinFn notAction(product_set(e, m.carrier()), e, {1, 1, 1, 0});
  CHECK_THROWS_AS(translation_category(e, m, notAction), PreconditionError);
}

TEST_CASE("discrete opfibration counterexample") {
  // Discrete two-object category into the one-object group: identities only
  // upstairs, so no object lifts g.
  FinSet obj("o", {"0", "1"});
  FinSet mor("m", {"i0", "i1"});
  FinCat disc("disc", obj, mor, {0, 1}, {0, 1}, {0, 1}, {{0, 0, 0}, {1, 1, 1}});
  FinCat bz2 = monoid_as_category(multiplicative_z2());
  CatFunctor p("p", disc, bz2, {0, 0}, {0, 0});
  OpfibReport r = is_discrete_opfibration(p);
  CHECK(!r.ok);
  CHECK(r.obj == 0);
  CHECK(r.baseMor == 1);
  CHECK(r.lifts == 0);
  CHECK(is_discrete_opfibration(CatFunctor::identity(bz2)).ok);
}

TEST_CASE("sigma functor of the identity machine is the projection") {
  FinMonoid m = cyclic_monoid(2);
  MonoidMealyMachine id = identity_monoid_machine(MonoidDesc(m));
  SigmaResult res = sigma_functor(id);
  REQUIRE(res.status == SigmaResult::Status::Ok);
  TranslationResult t = translation_category(id);
  CHECK(res.functor->mor(0) == t.projection.mor(0));
  CHECK(res.functor->mor(1) == t.projection.mor(1));
}

TEST_CASE("sigma fails exactly on the fugality counterexample") {
  FinMonoid z2 = multiplicative_z2();
  FinSet pt("pt", {"*"});
  MonoidMealyMachine bad("constant-g", pt, MonoidDesc(z2), MonoidDesc(z2), {0, 0},
                         {{1}, {1}});
  SigmaResult res = sigma_functor(bad);
  REQUIRE(res.status == SigmaResult::Status::UnitFailure);
  // With the unit repaired, a composition failure names the fugality triple.
  MonoidMealyMachine bad2("half-g", pt, MonoidDesc(z2), MonoidDesc(z2), {0, 0},
                          {{0}, {0}});
  CHECK(sigma_functor(bad2).status == SigmaResult::Status::Ok);
  // Unit-preserving but not fugal: g goes to the absorbing element z, and
  // z * z = z while s(*, g*g) = s(*, 1) = 1.
  MonoidMealyMachine bad3("to-idem", pt, MonoidDesc(z2), MonoidDesc(idempotent_monoid2()),
                          {0, 0}, {{0}, {1}});
  SigmaResult res3 = sigma_functor(bad3);
  FugalWitness w3 = is_fugal(bad3);
  REQUIRE(res3.status == SigmaResult::Status::CompositionFailure);
  CHECK(!w3.ok);
  CHECK(res3.state == w3.state);
  CHECK(res3.m == w3.m);
  CHECK(res3.m2 == w3.m2);
  CHECK(res3.m == MonVal{1});
  CHECK(res3.m2 == MonVal{1});
}

TEST_CASE("sigma succeeds on fugal machines") {
  FinMonoid z2 = multiplicative_z2();
  SigmaResult res = sigma_functor(swap_machine(z2, 1));
  CHECK(res.status == SigmaResult::Status::Ok);
}

TEST_CASE("span composition with the identity span") {
  FinMonoid z2 = multiplicative_z2();
  GuitartSpan sp = pi_span(swap_machine(z2, 1));
  FinCat bn = monoid_as_category(z2);
  GuitartSpan idSpan(CatFunctor::identity(bn), CatFunctor::identity(bn));
  GuitartSpan comp = compose_spans(sp, idSpan);
  CHECK(comp.apex().objects().size() == sp.apex().objects().size());
  CHECK(comp.apex().morphisms().size() == sp.apex().morphisms().size());
  // The explicit iso embeds e as (e, S e); with a one-object middle category
  // the object/morphism orders coincide, so the legs agree on the nose.
  for (int o = 0; o < comp.apex().objects().size(); ++o) {
    CHECK(comp.left.obj(o) == sp.left.obj(o));
    CHECK(comp.right.obj(o) == sp.right.obj(o));
  }
  for (int m = 0; m < comp.apex().morphisms().size(); ++m) {
    CHECK(comp.left.mor(m) == sp.left.mor(m));
    CHECK(comp.right.mor(m) == sp.right.mor(m));
  }
}

TEST_CASE("pullback of the identity one-object span with itself") {
  FinMonoid m = cyclic_monoid(3);
  FinCat bm = monoid_as_category(m);
  GuitartSpan idSpan(CatFunctor::identity(bm), CatFunctor::identity(bm));
  GuitartSpan comp = compose_spans(idSpan, idSpan);
  CHECK(comp.apex().objects().size() == 1);
  CHECK(comp.apex().morphisms().size() == 3);
}

TEST_CASE("span composition needs a matching middle category") {
  FinMonoid z2 = multiplicative_z2();
  FinMonoid z3 = cyclic_monoid(3);
  GuitartSpan sp1 = pi_span(swap_machine(z2, 1));
  FinCat b3 = monoid_as_category(z3);
  GuitartSpan sp2(CatFunctor::identity(b3), CatFunctor::identity(b3));
  CHECK_THROWS_AS(compose_spans(sp1, sp2), TypeError);
}

TEST_CASE("pi functoriality on identity machines") {
  FinMonoid z2 = multiplicative_z2();
  MonoidMealyMachine id = identity_monoid_machine(MonoidDesc(z2));
  CHECK(verify_pi_functoriality(id, id).ok);
  // m2 = identity: the comparison is the unitor.
  CHECK(verify_pi_functoriality(swap_machine(z2, 1), id).ok);
}

TEST_CASE("pi functoriality on enumerated fugal pairs") {
  FinSet pq = numbered_set("E", "p", 2);
  FinMonoid z2 = multiplicative_z2();
  FinMonoid idem = idempotent_monoid2();
  auto left = enumerate_fugal_machines(pq, z2, idem);
  auto right = enumerate_fugal_machines(pq, idem, z2);
  int checked = 0;
  for (const auto& m1 : left) {
    if (sigma_functor(m1).status != SigmaResult::Status::Ok) continue;
    for (const auto& m2 : right) {
      if (sigma_functor(m2).status != SigmaResult::Status::Ok) continue;
      CHECK(verify_pi_functoriality(m1, m2).ok);
      if (++checked >= 30) return;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("mac 2-cells") {
  FinMonoid z2 = multiplicative_z2();
  GuitartSpan sp = pi_span(swap_machine(z2, 1));
  CHECK(check_mac_2cell(CatFunctor::identity(sp.apex()), sp, sp).ok);

  // A machine morphism induces a passing 2-cell.
  MonoidMealyMachine m = swap_machine(z2, 1);
  FinFn swap(m.states(), m.states(), {1, 0});
  REQUIRE(check_monoid_machine_morphism(swap, m, m).ok);
  CHECK(check_mac_2cell(induced_mac_2cell(swap, m, m), sp, sp).ok);

  // Relabelling outputs breaks the right triangle.
  MonoidMealyMachine other = swap_machine(z2, 0); // s(-, g) = 1 instead of g
  REQUIRE(sigma_functor(other).status == SigmaResult::Status::Ok);
  GuitartSpan sp2 = pi_span(other);
  MacCellReport r = check_mac_2cell(CatFunctor::identity(sp.apex()), sp, sp2);
  CHECK(!r.ok);
  CHECK(r.which == "s-triangle");
}

TEST_CASE("composite spans keep the opfibration property") {
  FinSet pq = numbered_set("E", "p", 2);
  FinMonoid z2 = multiplicative_z2();
  auto ms = enumerate_fugal_machines(pq, z2, z2);
  int checked = 0;
  for (const auto& m1 : ms) {
    if (sigma_functor(m1).status != SigmaResult::Status::Ok) continue;
    for (const auto& m2 : ms) {
      if (sigma_functor(m2).status != SigmaResult::Status::Ok) continue;
      GuitartSpan comp = compose_spans(pi_span(m1), pi_span(m2));
      CHECK(is_discrete_opfibration(comp.left).ok);
      if (++checked >= 16) return;
    }
  }
}
