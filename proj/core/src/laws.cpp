#include "fugue/laws.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "fugue/document.hpp"
#include "fugue/generators.hpp"
#include "fugue/guitart.hpp"
#include "fugue/intertwiner.hpp"
#include "fugue/kan.hpp"
#include "fugue/kleisli.hpp"
#include "fugue/rel.hpp"

namespace fugue {

namespace {

struct LawRunner {
  const LawsOptions& opts;
  std::ostream& out;
  LawsReport report;

  void law(const std::string& name, const std::function<std::string()>& body) {
    LawOutcome o;
    o.name = name;
    try {
      o.detail = body();
      o.ok = o.detail.empty();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("error: ") + e.what();
    }
    out << (o.ok ? "ok   " : "FAIL ") << o.name;
    if (!o.ok) out << ": " << o.detail;
    out << "\n";
    report.outcomes.push_back(std::move(o));
  }
};

std::string show_word(const std::vector<int>& w, const FinSet& alphabet) {
  std::string s = "[";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += alphabet.label(w[k]);
  }
  return s + "]";
}

/// Failure details embed the offending document so the reported instance can
/// be re-checked through the CLI verbatim.
std::string with_doc(const std::string& msg, Document doc) {
  return msg + "\n" + serialize_document(doc);
}

// ---- finite monoid / word laws -------------------------------------------

std::string law_monoid_shipped() {
  for (const FinMonoid& m :
       {cyclic_monoid(2), cyclic_monoid(3), multiplicative_z2(), idempotent_monoid2(),
        trivial_monoid()}) {
    MonoidLawReport r = check_monoid_laws(m);
    if (!r.ok) return "shipped monoid '" + m.name() + "' fails: " + r.detail;
  }
  FinMonoid broken("broken", FinSet("c", {"0", "1"}), 0, {1, 1, 1, 1});
  MonoidLawReport r = check_monoid_laws(broken);
  if (r.ok) return "constant-product table passed the law check";
  if (r.law != MonoidLawReport::Law::Unit || r.witness != std::vector<std::string>{"0", "0"}) {
    return "first witness should be the unit pair (0, 0), got " + r.detail;
  }
  return {};
}

std::string law_word_concat(Rng& rng, int len) {
  FinSet alpha = numbered_set("A", "a", 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto mk = [&] {
      std::vector<int> ls(static_cast<size_t>(rng.uniform(len + 1)));
      for (auto& l : ls) l = rng.uniform(alpha.size());
      return Word(alpha, std::move(ls));
    };
    Word u = mk(), v = mk(), w = mk();
    if (word_concat(word_concat(u, v), w) != word_concat(u, word_concat(v, w))) {
      return "associativity fails";
    }
    Word unit(alpha, {});
    if (word_concat(unit, u) != u || word_concat(u, unit) != u) return "unit fails";
  }
  return {};
}

// ---- machine laws ---------------------------------------------------------

std::string law_run_compose_interchange(Rng& rng, int len) {
  for (int trial = 0; trial < 30; ++trial) {
    auto [m2, m1] = random_composable_pair(rng, 3);
    MealyMachine comp = compose_diamond(m2, m1);
    auto words = words_up_to(m1.input().size(), std::min(len, 4));
    for (int f = 0; f < m2.states().size(); ++f) {
      for (int e = 0; e < m1.states().size(); ++e) {
        int st = pair_index(m2.states(), m1.states(), f, e);
        for (const auto& w : words) {
          RunResult direct = run_mealy(comp, st, w);
          RunResult inner = run_mealy(m1, e, w);
          RunResult outer = run_mealy(m2, f, inner.output);
          if (direct.output != outer.output) {
            return with_doc(with_doc("pipeline mismatch at state " +
                                         comp.states().label(st) + " on " +
                                         show_word(w, m1.input()),
                                     {Document::Kind::Mealy, m2}),
                            {Document::Kind::Mealy, m1});
          }
          if (direct.final_state !=
              pair_index(m2.states(), m1.states(), outer.final_state, inner.final_state)) {
            return with_doc(with_doc("final state mismatch on " + show_word(w, m1.input()),
                                     {Document::Kind::Mealy, m2}),
                            {Document::Kind::Mealy, m1});
          }
        }
      }
    }
  }
  return {};
}

std::string law_diamond_assoc(Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    auto [m2, m1] = random_composable_pair(rng, 3);
    // A third machine consuming m2's output.
    FinSet g = numbered_set("G", "g", 1 + rng.uniform(3));
    FinSet dOut = numbered_set("D", "d", 1 + rng.uniform(3));
    size_t n3 = static_cast<size_t>(g.size()) * static_cast<size_t>(m2.output().size());
    std::vector<int> d3(n3), s3(n3);
    for (size_t k = 0; k < n3; ++k) {
      d3[k] = rng.uniform(g.size());
      s3[k] = rng.uniform(dOut.size());
    }
    MealyMachine m3("m3", g, m2.output(), dOut, std::move(d3), std::move(s3));
    MealyMachine left = compose_diamond(m3, compose_diamond(m2, m1));   // m3 <> (m2 <> m1)
    MealyMachine right = compose_diamond(compose_diamond(m3, m2), m1); // (m3 <> m2) <> m1
    FinFn alpha = reassociation(m3.states(), m2.states(), m1.states());
    // right has states (G x F) x E, left has G x (F x E); alpha maps them.
    for (int st = 0; st < right.states().size(); ++st) {
      for (int a = 0; a < m1.input().size(); ++a) {
        if (alpha(right.d(st, a)) != left.d(alpha(st), a) ||
            right.s(st, a) != left.s(alpha(st), a)) {
          return "reassociation mismatch at " + right.states().label(st) + ", letter " +
                 m1.input().label(a);
        }
      }
    }
  }
  return {};
}

std::string law_diamond_unitors(Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    MealyMachine m = random_mealy(rng, 3, 3, 3);
    MealyMachine lid = compose_diamond(identity_machine(m.output()), m); // 1 x E states
    MealyMachine rid = compose_diamond(m, identity_machine(m.input())); // E x 1 states
    for (int e = 0; e < m.states().size(); ++e) {
      for (int a = 0; a < m.input().size(); ++a) {
        // Unitors: index e in both composites corresponds to e.
        if (lid.d(e, a) != m.d(e, a) || lid.s(e, a) != m.s(e, a)) {
          return with_doc("left unitor mismatch", {Document::Kind::Mealy, m});
        }
        if (rid.d(e, a) != m.d(e, a) || rid.s(e, a) != m.s(e, a)) {
          return with_doc("right unitor mismatch", {Document::Kind::Mealy, m});
        }
      }
    }
  }
  return {};
}

std::string law_morphisms_compose(Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    MealyMachine m = random_mealy(rng, 4, 3, 3);
    int n = m.states().size();
    std::vector<int> p1(static_cast<size_t>(n)), p2(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p1[static_cast<size_t>(i)] = p2[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(p1[static_cast<size_t>(i)], p1[static_cast<size_t>(rng.uniform(i + 1))]);
      std::swap(p2[static_cast<size_t>(i)], p2[static_cast<size_t>(rng.uniform(i + 1))]);
    }
    MealyMachine mA = permuted_machine(m, p1);
    FinFn f(m.states(), mA.states(), p1);
    if (!check_machine_morphism(f, m, mA).ok) {
      return with_doc("permutation is not a morphism", {Document::Kind::Mealy, m});
    }
    MealyMachine mB = permuted_machine(mA, p2);
    FinFn g(mA.states(), mB.states(), p2);
    if (!check_machine_morphism(g, mA, mB).ok) {
      return with_doc("permutation is not a morphism", {Document::Kind::Mealy, mA});
    }
    if (!check_machine_morphism(compose(g, f), m, mB).ok) {
      return with_doc("composite of morphisms is not a morphism",
                      {Document::Kind::Mealy, m});
    }
  }
  return {};
}

std::string law_tensor_morphisms(Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    auto [m2, m1] = random_composable_pair(rng, 3);
    auto shuffle = [&](int n) {
      std::vector<int> p(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
      for (int i = n - 1; i > 0; --i) {
        std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(rng.uniform(i + 1))]);
      }
      return p;
    };
    std::vector<int> p1 = shuffle(m1.states().size());
    std::vector<int> p2 = shuffle(m2.states().size());
    MealyMachine m1b = permuted_machine(m1, p1);
    MealyMachine m2b = permuted_machine(m2, p2);
    FinFn f1(m1.states(), m1b.states(), p1);
    FinFn f2(m2.states(), m2b.states(), p2);
    FinFn t = tensor_morphisms(f2, f1);
    MorphismReport r =
        check_machine_morphism(t, compose_diamond(m2, m1), compose_diamond(m2b, m1b));
    if (!r.ok) {
      return with_doc(with_doc("tensor of morphisms is not a morphism: " + r.detail,
                               {Document::Kind::Mealy, m2}),
                      {Document::Kind::Mealy, m1});
    }
  }
  return {};
}

// ---- fugal laws -----------------------------------------------------------

std::string law_extension_fugal(Rng& rng, int len) {
  for (int trial = 0; trial < 40; ++trial) {
    MealyMachine m = random_mealy(rng, 3, 3, 3);
    FugalWitness w = is_fugal(fugal_extension(m), len);
    if (!w.ok) {
      return with_doc("extension of a random machine is not fugal: " + w.detail,
                      {Document::Kind::Mealy, m});
    }
  }
  return {};
}

std::string law_extension_unit() {
  MealyMachine m = xor_machine();
  MonoidMealyMachine ext = fugal_extension(m);
  for (int e = 0; e < m.states().size(); ++e) {
    if (!ext.out(e, {}).empty()) return "s-flat of the empty word is not empty";
  }
  // Frozen oracle: s-flat(0, [1,1]) unfolds to [1, 0].
  if (ext.out(0, {1, 1}) != MonVal({1, 0})) {
    return "xor extension disagrees with the hand-unfolded recursion";
  }
  return {};
}

std::string law_flat_composition(Rng& rng, int len) {
  for (int trial = 0; trial < 30; ++trial) {
    auto [m2, m1] = random_composable_pair(rng, 3);
    FlatCompositionReport r = check_flat_preserves_composition(m2, m1, len);
    if (!r.ok) {
      return with_doc(with_doc(r.detail, {Document::Kind::Mealy, m2}),
                      {Document::Kind::Mealy, m1});
    }
  }
  return {};
}

std::string law_flat_two_cells(Rng& rng, int len) {
  for (int trial = 0; trial < 20; ++trial) {
    MealyMachine m = random_mealy(rng, 4, 3, 3);
    int n = m.states().size();
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(rng.uniform(i + 1))]);
    }
    MealyMachine mb = permuted_machine(m, p);
    FinFn f(m.states(), mb.states(), p);
    MorphismReport r = check_monoid_machine_morphism(f, fugal_extension(m),
                                                     fugal_extension(mb), len);
    if (!r.ok) {
      return with_doc("extension does not preserve the 2-cell: " + r.detail,
                      {Document::Kind::Mealy, m});
    }
  }
  return {};
}

std::string law_hk_roundtrip(Rng& rng) {
  for (const FinMonoid& m : {cyclic_monoid(2), cyclic_monoid(3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      MealyMachine m0 = random_mealy_into(rng, 4, 3, m);
      RoundTripReport r = verify_hk(m0, m);
      if (!r.ok) return with_doc(r.detail, {Document::Kind::Mealy, m0});
    }
  }
  return {};
}

std::string law_kh_roundtrip(Rng& rng, int len) {
  for (int trial = 0; trial < 15; ++trial) {
    MealyMachine m = random_mealy(rng, 3, 3, 3);
    RoundTripReport r = verify_kh(fugal_extension(m), len);
    if (!r.ok) {
      return with_doc("KH on an extension: " + r.detail,
                      {Document::Kind::MonoidMachine, fugal_extension(m)});
    }
  }
  FinMonoid z2 = cyclic_monoid(2);
  for (int trial = 0; trial < 15; ++trial) {
    MealyMachine m0 = random_mealy_into(rng, 3, 3, z2);
    RoundTripReport r = verify_kh(k_extend(m0, z2), len);
    if (!r.ok) {
      return with_doc("KH on a K-image: " + r.detail,
                      {Document::Kind::MonoidMachine, k_extend(m0, z2)});
    }
  }
  return {};
}

std::string law_fugal_unit_idempotent() {
  FinSet states = numbered_set("E", "p", 2);
  for (const FinMonoid& m : {multiplicative_z2(), idempotent_monoid2()}) {
    for (const FinMonoid& n : {multiplicative_z2(), idempotent_monoid2()}) {
      for (const MonoidMealyMachine& mm : enumerate_fugal_machines(states, m, n)) {
        for (int e = 0; e < states.size(); ++e) {
          int u = mm.s_at(e, m.unit()).at(0);
          if (n.mul(u, u) != u) {
            return with_doc("s(e, unit) is not idempotent on a fugal machine",
                            {Document::Kind::MonoidMachine, mm});
          }
        }
      }
    }
  }
  return {};
}

std::string law_fold_direction(Rng& rng, int len) {
  FinMonoid z3 = cyclic_monoid(3);
  for (int trial = 0; trial < 20; ++trial) {
    MealyMachine m0 = random_mealy_into(rng, 3, 3, z3);
    MonoidMealyMachine k = k_extend(m0, z3);
    auto words = words_up_to(m0.input().size(), len);
    for (const auto& w : words) {
      for (int e = 0; e < m0.states().size(); ++e) {
        // Right fold: s(e, a :: as) = s0(e, a) * s(d(e, a), as).
        std::function<int(int, size_t)> rightFold = [&](int cur, size_t k0) -> int {
          if (k0 == w.size()) return z3.unit();
          int head = m0.s(cur, w[k0]);
          return z3.mul(head, rightFold(m0.d(cur, w[k0]), k0 + 1));
        };
        if (k.out(e, w) != MonVal{rightFold(e, 0)}) {
          return with_doc("left and right folds disagree on " + show_word(w, m0.input()),
                          {Document::Kind::MonoidMachine, k});
        }
      }
    }
  }
  return {};
}

// ---- guitart laws ---------------------------------------------------------

std::string law_translation_opfib() {
  FinSet states = numbered_set("E", "p", 3);
  for (const FinMonoid& m : {multiplicative_z2(), idempotent_monoid2()}) {
    for (const auto& action : enumerate_actions(states, m)) {
      FinFn fn(product_set(states, m.carrier()), states, action);
      TranslationResult t = translation_category(states, m, fn);
      OpfibReport r = is_discrete_opfibration(t.projection);
      if (!r.ok) return "translation projection is not a discrete opfibration: " + r.detail;
    }
  }
  return {};
}

std::string law_sigma_matches_fugality() {
  FinSet states = numbered_set("E", "p", 2);
  for (const FinMonoid& m : {multiplicative_z2(), idempotent_monoid2()}) {
    for (const FinMonoid& n : {multiplicative_z2(), idempotent_monoid2()}) {
      int nM = m.carrier().size(), nN = n.carrier().size();
      size_t cells = static_cast<size_t>(states.size()) * static_cast<size_t>(nM);
      for (const auto& action : enumerate_actions(states, m)) {
        std::vector<int> digits(cells, 0);
        for (;;) {
          std::vector<MonVal> s(cells);
          for (size_t k = 0; k < cells; ++k) s[k] = MonVal{digits[k]};
          MonoidMealyMachine mm("enum", states, MonoidDesc(m), MonoidDesc(n), action, s);
          FugalWitness fw = is_fugal(mm);
          SigmaResult sg = sigma_functor(mm);
          bool unitOk = true;
          for (int e = 0; e < states.size(); ++e) {
            unitOk = unitOk && mm.s_at(e, m.unit()).at(0) == n.unit();
          }
          bool sigmaOk = sg.status == SigmaResult::Status::Ok;
          if (sigmaOk != (fw.ok && unitOk)) {
            return with_doc("sigma verdict disagrees with fugality + unit preservation",
                            {Document::Kind::MonoidMachine, mm});
          }
          if (sg.status == SigmaResult::Status::CompositionFailure) {
            if (fw.ok || fw.state != sg.state || fw.m != sg.m || fw.m2 != sg.m2) {
              return with_doc("sigma counterexample does not match the fugality witness",
                              {Document::Kind::MonoidMachine, mm});
            }
          }
          int k = static_cast<int>(cells) - 1;
          while (k >= 0) {
            if (++digits[static_cast<size_t>(k)] < nN) break;
            digits[static_cast<size_t>(k)] = 0;
            --k;
          }
          if (k < 0) break;
        }
      }
    }
  }
  return {};
}

std::string law_pullback_stability() {
  FinSet states = numbered_set("E", "p", 2);
  FinMonoid z2 = multiplicative_z2();
  FinMonoid idem = idempotent_monoid2();
  auto machines1 = enumerate_fugal_machines(states, z2, idem);
  auto machines2 = enumerate_fugal_machines(states, idem, z2);
  int checked = 0;
  for (size_t i = 0; i < machines1.size() && checked < 12; i += 3) {
    for (size_t j = 0; j < machines2.size() && checked < 12; j += 3) {
      SigmaResult s1 = sigma_functor(machines1[i]);
      SigmaResult s2 = sigma_functor(machines2[j]);
      if (s1.status != SigmaResult::Status::Ok || s2.status != SigmaResult::Status::Ok) {
        continue;
      }
      GuitartSpan sp = compose_spans(pi_span(machines1[i]), pi_span(machines2[j]));
      OpfibReport r = is_discrete_opfibration(sp.left);
      if (!r.ok) return "composite left leg is not a discrete opfibration: " + r.detail;
      ++checked;
    }
  }
  return {};
}

std::string law_pi_functoriality_sample() {
  FinSet states = numbered_set("E", "p", 2);
  FinMonoid z2 = multiplicative_z2();
  FinMonoid idem = idempotent_monoid2();
  auto machines1 = enumerate_fugal_machines(states, z2, idem);
  auto machines2 = enumerate_fugal_machines(states, idem, z2);
  int checked = 0;
  for (size_t i = 0; i < machines1.size() && checked < 10; i += 4) {
    for (size_t j = 0; j < machines2.size() && checked < 10; j += 4) {
      if (sigma_functor(machines1[i]).status != SigmaResult::Status::Ok) continue;
      if (sigma_functor(machines2[j]).status != SigmaResult::Status::Ok) continue;
      PiReport r = verify_pi_functoriality(machines1[i], machines2[j]);
      if (!r.ok) {
        return with_doc(with_doc(r.detail, {Document::Kind::MonoidMachine, machines1[i]}),
                        {Document::Kind::MonoidMachine, machines2[j]});
      }
      ++checked;
    }
  }
  return {};
}

std::string law_mac_2cell_induced() {
  FinSet states = numbered_set("E", "p", 2);
  FinMonoid z2 = multiplicative_z2();
  auto machines = enumerate_fugal_machines(states, z2, z2);
  int checked = 0;
  for (const auto& m1 : machines) {
    if (sigma_functor(m1).status != SigmaResult::Status::Ok) continue;
    for (const auto& m2 : machines) {
      if (sigma_functor(m2).status != SigmaResult::Status::Ok) continue;
      for (int perm = 0; perm < 2; ++perm) {
        std::vector<int> table = perm ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
        FinFn f(states, states, table);
        if (!check_monoid_machine_morphism(f, m1, m2).ok) continue;
        MacCellReport r = check_mac_2cell(induced_mac_2cell(f, m1, m2), pi_span(m1),
                                          pi_span(m2));
        if (!r.ok) return "induced 2-cell fails: " + r.detail;
        ++checked;
      }
      if (checked > 40) return {};
    }
  }
  return {};
}

// ---- kleisli laws ---------------------------------------------------------

std::string law_lift_preserves_morphisms(Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    MealyMachine m = random_mealy(rng, 4, 3, 3);
    int n = m.states().size();
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(rng.uniform(i + 1))]);
    }
    MealyMachine mb = permuted_machine(m, p);
    FinFn f(m.states(), mb.states(), p);
    MorphismReport r = check_kleisli_morphism(f, lift_deterministic(m),
                                              lift_deterministic(mb));
    if (!r.ok) {
      return with_doc("lift does not preserve the morphism: " + r.detail,
                      {Document::Kind::Mealy, m});
    }
  }
  return {};
}

std::string law_expand_lift_singletons(Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    MealyMachine m = random_mealy(rng, 3, 3, 3);
    MealyMachine big = expand(lift_deterministic(m));
    for (int e = 0; e < m.states().size(); ++e) {
      for (int a = 0; a < m.input().size(); ++a) {
        int se = 1 << e, sa = 1 << a;
        int slotD = big.d(se, sa);
        int slotS = big.s(se, sa);
        if (slotD != (1 << m.d(e, a)) || slotS != (1 << m.s(e, a))) {
          return with_doc("expand . lift disagrees with the original on singletons",
                          {Document::Kind::Mealy, m});
        }
      }
    }
  }
  return {};
}

std::string law_expand_union_preserving(Rng& rng) {
  FinSet e3 = numbered_set("E", "e", 3);
  FinSet i2 = numbered_set("I", "i", 2);
  FinSet o3 = numbered_set("O", "o", 3);
  for (int trial = 0; trial < 5; ++trial) {
    size_t cells = static_cast<size_t>(e3.size()) * static_cast<size_t>(i2.size());
    std::vector<std::vector<int>> d(cells), s(cells);
    for (size_t k = 0; k < cells; ++k) {
      for (int x = 0; x < e3.size(); ++x) {
        if (rng.coin()) d[k].push_back(x);
      }
      for (int y = 0; y < o3.size(); ++y) {
        if (rng.coin()) s[k].push_back(y);
      }
    }
    PowersetMealy n("nd", e3, i2, o3, std::move(d), std::move(s));
    MealyMachine big = expand(n);
    int nStates = 1 << e3.size(), nIn = 1 << i2.size();
    for (int sA = 0; sA < nStates; ++sA) {
      for (int sB = 0; sB < nStates; ++sB) {
        for (int t = 0; t < nIn; ++t) {
          if (big.d(sA | sB, t) != (big.d(sA, t) | big.d(sB, t)) ||
              big.s(sA | sB, t) != (big.s(sA, t) | big.s(sB, t))) {
            return "d/s expansion is not union-preserving in the state argument";
          }
        }
      }
    }
    for (int sA = 0; sA < nStates; ++sA) {
      for (int tA = 0; tA < nIn; ++tA) {
        for (int tB = 0; tB < nIn; ++tB) {
          if (big.d(sA, tA | tB) != (big.d(sA, tA) | big.d(sA, tB)) ||
              big.s(sA, tA | tB) != (big.s(sA, tA) | big.s(sA, tB))) {
            return "d/s expansion is not union-preserving in the input argument";
          }
        }
      }
    }
  }
  return {};
}

std::string law_strength_order(Rng& rng) {
  // Accumulating e-first or i-first must agree (both strengths of powerset).
  for (int trial = 0; trial < 10; ++trial) {
    FinSet e2 = numbered_set("E", "e", 2);
    FinSet i2 = numbered_set("I", "i", 2);
    FinSet o2 = numbered_set("O", "o", 2);
    size_t cells = 4;
    std::vector<std::vector<int>> d(cells), s(cells);
    for (size_t k = 0; k < cells; ++k) {
      for (int x = 0; x < 2; ++x) {
        if (rng.coin()) d[k].push_back(x);
        if (rng.coin()) s[k].push_back(x);
      }
    }
    PowersetMealy n("nd", e2, i2, o2, std::move(d), std::move(s));
    for (unsigned se = 0; se < 4; ++se) {
      for (unsigned si = 0; si < 4; ++si) {
        unsigned aFirst = 0, eFirst = 0;
        for (int e = 0; e < 2; ++e) {
          if (!(se & (1u << e))) continue;
          for (int a = 0; a < 2; ++a) {
            if (!(si & (1u << a))) continue;
            for (int x : n.d(e, a)) eFirst |= 1u << x;
          }
        }
        for (int a = 0; a < 2; ++a) {
          if (!(si & (1u << a))) continue;
          for (int e = 0; e < 2; ++e) {
            if (!(se & (1u << e))) continue;
            for (int x : n.d(e, a)) aFirst |= 1u << x;
          }
        }
        if (aFirst != eFirst) return "strength order changes the expansion";
      }
    }
  }
  return {};
}

// ---- relation laws --------------------------------------------------------

std::string law_rel_double_oracle() {
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
        TerminalReport rep = verify_terminal(r, i, o, mode);
        if (!rep.ok) return "terminality certificate fails: " + rep.detail;
      }
    }
  }
  return {};
}

std::string law_closure_operator(Rng& rng) {
  FinSet a = numbered_set("A", "a", 4);
  for (int trial = 0; trial < 20; ++trial) {
    Rel i = random_rel(rng, a, a);
    Rel c = refl_trans_closure(i);
    Document witness{Document::Kind::Relation, i};
    if (!i.subset_of(c)) return with_doc("closure is not extensive", witness);
    if (!(refl_trans_closure(c) == c)) return with_doc("closure is not idempotent", witness);
    Rel j = i.union_with(random_rel(rng, a, a));
    if (!c.subset_of(refl_trans_closure(j))) {
      return with_doc("closure is not monotone", witness);
    }
    Rel t = trans_closure(i);
    if (!(rel_compose(t, t).subset_of(t))) {
      return with_doc("transitive closure is not transitive", witness);
    }
    if (!i.subset_of(t)) return with_doc("transitive closure is not extensive", witness);
  }
  return {};
}

std::string law_machine_closure_paths() {
  // E.I <= E forces E.I* <= E, by induction on the path length.
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
      if (!rel_compose(e, refl_trans_closure(i)).subset_of(e)) {
        return "E.I <= E does not propagate to the closure";
      }
    }
  }
  return {};
}

std::string law_ran_is_machine(Rng& rng) {
  FinSet a = numbered_set("A", "a", 3);
  FinSet b = numbered_set("B", "b", 2);
  for (int trial = 0; trial < 30; ++trial) {
    Rel i = random_rel(rng, a, a);
    Rel o = random_rel(rng, a, b);
    Rel moore = ran_reachability(i, o, RelMode::Moore);
    if (!is_rel_machine(moore, i, o, RelMode::Moore)) {
      return with_doc(with_doc("moore reachability is not a machine",
                               {Document::Kind::Relation, i}),
                      {Document::Kind::Relation, o});
    }
    Rel mealy = ran_reachability(i, o, RelMode::Mealy);
    if (!is_rel_machine(mealy, i, o, RelMode::Mealy)) {
      return with_doc(with_doc("mealy reachability is not a machine",
                               {Document::Kind::Relation, i}),
                      {Document::Kind::Relation, o});
    }
  }
  return {};
}

// ---- cat laws -------------------------------------------------------------

FinCat z2_group_category() { return monoid_as_category(multiplicative_z2()); }

std::vector<SetFunctor> z2_involution_functors(int maxSize) {
  // All set-functors on the one-object group Z/2 with carrier size <= maxSize:
  // the image of the generator must be an involution.
  FinCat c = z2_group_category();
  std::vector<SetFunctor> out;
  for (int size = 0; size <= maxSize; ++size) {
    FinSet carrier = numbered_set("X", "x", size);
    std::vector<int> table(static_cast<size_t>(size), 0);
    for (;;) {
      bool involution = true;
      for (int k = 0; k < size; ++k) {
        if (table[static_cast<size_t>(table[static_cast<size_t>(k)])] != k) {
          involution = false;
          break;
        }
      }
      if (involution) {
        std::vector<FinSet> onObj{carrier};
        std::vector<FinFn> onMor{FinFn::identity(carrier), FinFn(carrier, carrier, table)};
        out.emplace_back("inv", c, std::move(onObj), std::move(onMor));
      }
      int k = size - 1;
      while (k >= 0) {
        if (++table[static_cast<size_t>(k)] < size) break;
        table[static_cast<size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  return out;
}

std::string law_ran_yoneda(long long limit) {
  FinCat c = z2_group_category();
  CatFunctor idc = CatFunctor::identity(c);
  for (const SetFunctor& o : z2_involution_functors(3)) {
    RanExtension ran = ran_along(idc, o, limit);
    if (ran.functor().at(0).size() != o.at(0).size()) {
      return "|Ran_Id O| != |O| on the one-object group";
    }
  }
  return {};
}

std::string law_up_unique_mediator(Rng& rng, long long limit) {
  FinCat c = z2_group_category();
  CatFunctor idc = CatFunctor::identity(c);
  auto functors = z2_involution_functors(2);
  int done = 0;
  for (int attempt = 0; attempt < 200 && done < 20; ++attempt) {
    const SetFunctor& o = functors[static_cast<size_t>(rng.uniform(
        static_cast<int>(functors.size())))];
    const SetFunctor& e = functors[static_cast<size_t>(rng.uniform(
        static_cast<int>(functors.size())))];
    SetFunctor et = precompose(e, idc);
    std::vector<NatTrans> gammas = enumerate_nat_trans(et, o, limit);
    if (gammas.empty()) continue;
    const NatTrans& gamma =
        gammas[static_cast<size_t>(rng.uniform(static_cast<int>(gammas.size())))];
    UpReport rep = check_ran_universal_property(idc, o, e, gamma, limit);
    if (!rep.ok) return rep.detail;
    ++done;
  }
  if (done < 20) return "could not draw 20 universal-property instances";
  return {};
}

std::string law_monad_machine_identity() {
  FinCat c = z2_group_category();
  CatFunctor idc = CatFunctor::identity(c);
  std::vector<int> units{c.id(0)};
  CatMonadCell monad = make_monad_cell(idc, units, units);
  for (const SetFunctor& o : z2_involution_functors(3)) {
    MonadMachines mm = build_machine_from_monad(monad, o, idc, units);
    const FinFn& sigma = mm.moore.sigma.at(0);
    if (!sigma.is_bijection()) {
      return "identity-monad machine: sigma is not a bijection";
    }
    const FinFn& delta = mm.moore.delta.at(0);
    if (!(delta == FinFn::identity(mm.moore.e.at(0)))) {
      return "identity-monad machine: delta is not the identity";
    }
  }
  return {};
}

// ---- intertwiner laws -----------------------------------------------------

std::string law_morphism_intertwiner_iff(Rng& rng) {
  for (int trial = 0; trial < 12; ++trial) {
    FinSet i2 = numbered_set("I", "i", 2);
    FinSet o2 = numbered_set("O", "o", 2);
    auto mk = [&](const char* name, int nStates) {
      FinSet st = numbered_set(name, "q", nStates);
      size_t cells = static_cast<size_t>(nStates) * 2;
      std::vector<int> d(cells), s(cells);
      for (size_t k = 0; k < cells; ++k) {
        d[k] = rng.uniform(nStates);
        s[k] = rng.uniform(2);
      }
      return MealyMachine(name, std::move(st), i2, o2, std::move(d), std::move(s));
    };
    MealyMachine m = mk("E", 2);
    MealyMachine m2 = mk("F", 2);
    // Every map f : states(m2) -> states(m).
    for (int t0 = 0; t0 < 2; ++t0) {
      for (int t1 = 0; t1 < 2; ++t1) {
        FinFn f(m2.states(), m.states(), {t0, t1});
        bool viaIntertwiner = check_intertwiner(morphism_intertwiner(m, m2, f)).ok;
        bool viaMorphism = check_machine_morphism(f, m2, m).ok;
        if (viaIntertwiner != viaMorphism) {
          return "intertwiner verdict differs from the machine-morphism verdict";
        }
      }
    }
  }
  return {};
}

std::vector<Intertwiner> all_point_intertwiners(const MealyMachine& m) {
  // U = V = {*}: iota/eps/omega collapse to plain endo-maps; enumerate all.
  FinSet point("pt", {"*"});
  std::vector<Intertwiner> out;
  int nI = m.input().size(), nE = m.states().size(), nO = m.output().size();
  std::vector<int> ti(static_cast<size_t>(nI)), te(static_cast<size_t>(nE)),
      to(static_cast<size_t>(nO));
  std::function<void(int)> recO = [&](int k) {
    if (k == nO) {
      Intertwiner it(m, m, point, point,
                     FinFn(product_set(m.input(), point), product_set(point, m.input()), ti),
                     FinFn(product_set(m.states(), point), product_set(point, m.states()), te),
                     FinFn(product_set(m.output(), point), product_set(point, m.output()), to));
      if (check_intertwiner(it).ok) out.push_back(std::move(it));
      return;
    }
    for (int v = 0; v < nO; ++v) {
      to[static_cast<size_t>(k)] = v;
      recO(k + 1);
    }
  };
  std::function<void(int)> recE = [&](int k) {
    if (k == nE) {
      recO(0);
      return;
    }
    for (int v = 0; v < nE; ++v) {
      te[static_cast<size_t>(k)] = v;
      recE(k + 1);
    }
  };
  std::function<void(int)> recI = [&](int k) {
    if (k == nI) {
      recE(0);
      return;
    }
    for (int v = 0; v < nI; ++v) {
      ti[static_cast<size_t>(k)] = v;
      recI(k + 1);
    }
  };
  recI(0);
  return out;
}

std::string law_pasting_preserves_validity() {
  MealyMachine m = xor_machine();
  std::vector<Intertwiner> pool = all_point_intertwiners(m);
  if (pool.empty()) return "no valid point intertwiners on the xor machine";
  for (const Intertwiner& it1 : pool) {
    for (const Intertwiner& it2 : pool) {
      Intertwiner pasted = compose_intertwiners(it2, it1);
      IntertwinerReport r = check_intertwiner(pasted);
      if (!r.ok) return "pasting of valid intertwiners fails: " + r.detail;
    }
  }
  return {};
}

std::string law_identity_pasting_unit() {
  MealyMachine m = xor_machine();
  std::vector<Intertwiner> pool = all_point_intertwiners(m);
  Intertwiner idIt = identity_intertwiner(m);
  for (const Intertwiner& it : pool) {
    Intertwiner left = compose_intertwiners(idIt, it); // id after it
    // Unitor on U: u -> (*, u); with a one-point left factor the pair index
    // equals u, so the identity table is the unitor.
    auto unitor = [&](const FinSet& a, const FinSet& prod) {
      std::vector<int> t(static_cast<size_t>(a.size()));
      for (int k = 0; k < a.size(); ++k) t[static_cast<size_t>(k)] = k;
      return FinFn(a, prod, std::move(t));
    };
    IntertwinerTwoCell cell(it, left, unitor(it.u, left.u), unitor(it.v, left.v));
    TwoCellReport r = check_two_cell(cell);
    if (!r.ok) return "identity pasting is not the unitor: " + r.detail;
  }
  return {};
}

// ---- document laws --------------------------------------------------------

std::string law_document_roundtrip() {
  std::vector<Document> docs;
  docs.push_back({Document::Kind::Mealy, xor_machine()});
  docs.push_back({Document::Kind::Mealy, lift_deterministic(xor_machine())});
  docs.push_back({Document::Kind::Monoid, cyclic_monoid(3)});
  docs.push_back({Document::Kind::MonoidMachine, fugal_extension(xor_machine())});
  docs.push_back({Document::Kind::MonoidMachine, k_extend(xor_machine(), cyclic_monoid(2))});
  docs.push_back({Document::Kind::Category, z2_group_category()});
  docs.push_back({Document::Kind::Functor, CatFunctor::identity(z2_group_category())});
  {
    FinSet a = numbered_set("A", "a", 2);
    Rel i(a, a);
    i.set(0, 1, true);
    docs.push_back({Document::Kind::Relation, i});
  }
  docs.push_back({Document::Kind::SetFunctorKind, z2_involution_functors(2).back()});
  {
    FinCat c = z2_group_category();
    MonadDocument monad{CatFunctor::identity(c), {c.id(0)}, {c.id(0)}, std::nullopt, {}};
    docs.push_back({Document::Kind::Monad, monad});
  }
  docs.push_back({Document::Kind::IntertwinerKind, identity_intertwiner(xor_machine())});
  {
    Intertwiner it = identity_intertwiner(xor_machine());
    FinSet point("pt", {"*"});
    IntertwinerTwoCell cell(it, it, FinFn::identity(point), FinFn::identity(point));
    docs.push_back({Document::Kind::TwoCell, cell});
  }
  {
    FinSet bits("bit", {"0", "1"});
    MooreMachine moore("blink", bits, bits, bits, {0, 1, 1, 0}, {0, 1});
    docs.push_back({Document::Kind::Moore, moore});
  }
  for (const Document& doc : docs) {
    std::string text = serialize_document(doc);
    Document back = parse_document(text);
    if (!document_equal(doc, back)) {
      return "serialize/parse does not round-trip a " + kind_name(doc.kind) + " document";
    }
    if (serialize_document(back) != text) {
      return "serialisation is not canonical for a " + kind_name(doc.kind) + " document";
    }
  }
  return {};
}

std::string law_corpus_roundtrip(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) return "corpus directory has no .json documents";
  for (const auto& p : files) {
    Document doc = load_document(p.string());
    Document back = parse_document(serialize_document(doc));
    if (!document_equal(doc, back)) {
      return "round-trip fails for " + p.filename().string();
    }
  }
  return {};
}

} // namespace

LawsReport run_laws(const LawsOptions& opts, std::ostream& out) {
  LawRunner r{opts, out, {}};
  Rng rng(opts.seed);
  int len = opts.len;

  r.law("monoid-laws-shipped", [&] { return law_monoid_shipped(); });
  r.law("word-concat-free-monoid", [&] { return law_word_concat(rng, len); });
  r.law("run-compose-interchange", [&] { return law_run_compose_interchange(rng, len); });
  r.law("diamond-associativity", [&] { return law_diamond_assoc(rng); });
  r.law("diamond-unitors", [&] { return law_diamond_unitors(rng); });
  r.law("machine-morphisms-compose", [&] { return law_morphisms_compose(rng); });
  r.law("tensor-of-morphisms", [&] { return law_tensor_morphisms(rng); });
  r.law("extension-is-fugal", [&] { return law_extension_fugal(rng, len); });
  r.law("extension-empty-word", [&] { return law_extension_unit(); });
  r.law("flat-preserves-composition", [&] { return law_flat_composition(rng, len); });
  r.law("flat-preserves-2cells", [&] { return law_flat_two_cells(rng, len); });
  r.law("hk-roundtrip", [&] { return law_hk_roundtrip(rng); });
  r.law("kh-roundtrip", [&] { return law_kh_roundtrip(rng, len); });
  r.law("fugal-unit-idempotent", [&] { return law_fugal_unit_idempotent(); });
  r.law("fold-direction-immaterial", [&] { return law_fold_direction(rng, std::min(len, 4)); });
  r.law("translation-opfibration", [&] { return law_translation_opfib(); });
  r.law("sigma-matches-fugality", [&] { return law_sigma_matches_fugality(); });
  r.law("pullback-opfibration-stability", [&] { return law_pullback_stability(); });
  r.law("pi-functoriality-sample", [&] { return law_pi_functoriality_sample(); });
  r.law("mac-2cell-induced", [&] { return law_mac_2cell_induced(); });
  r.law("lift-preserves-morphisms", [&] { return law_lift_preserves_morphisms(rng); });
  r.law("expand-lift-singletons", [&] { return law_expand_lift_singletons(rng); });
  r.law("expand-union-preserving", [&] { return law_expand_union_preserving(rng); });
  r.law("strength-order-immaterial", [&] { return law_strength_order(rng); });
  r.law("rel-terminal-double-oracle", [&] { return law_rel_double_oracle(); });
  r.law("rel-closure-operator", [&] { return law_closure_operator(rng); });
  r.law("rel-machine-closure-paths", [&] { return law_machine_closure_paths(); });
  r.law("rel-ran-is-machine", [&] { return law_ran_is_machine(rng); });
  r.law("cat-ran-yoneda-size", [&] { return law_ran_yoneda(opts.limit); });
  r.law("cat-up-unique-mediator", [&] { return law_up_unique_mediator(rng, opts.limit); });
  r.law("cat-identity-monad-machine", [&] { return law_monad_machine_identity(); });
  r.law("intertwiner-morphism-iff", [&] { return law_morphism_intertwiner_iff(rng); });
  r.law("intertwiner-pasting-valid", [&] { return law_pasting_preserves_validity(); });
  r.law("intertwiner-identity-unit", [&] { return law_identity_pasting_unit(); });
  r.law("document-roundtrip", [&] { return law_document_roundtrip(); });
  if (!opts.corpusDir.empty()) {
    r.law("corpus-roundtrip", [&] { return law_corpus_roundtrip(opts.corpusDir); });
  }

  int failures = 0;
  for (const auto& o : r.report.outcomes) {
    if (!o.ok) ++failures;
  }
  out << "laws: " << r.report.outcomes.size() << " checks, " << failures
      << " failures; seed=" << opts.seed << " len=" << opts.len << "\n";
  return std::move(r.report);
}

} // namespace fugue
