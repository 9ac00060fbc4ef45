#include "fugue/guitart.hpp"

namespace fugue {

GuitartSpan::GuitartSpan(CatFunctor left, CatFunctor right)
    : left(std::move(left)), right(std::move(right)) {
  if (!(this->left.dom() == this->right.dom())) {
    throw TypeError("span: legs must share their apex");
  }
  OpfibReport r = is_discrete_opfibration(this->left);
  if (!r.ok) {
    throw InvariantViolation("span: left leg is not a discrete opfibration (" + r.detail +
                             ")");
  }
}

TranslationResult translation_category(const FinSet& states, const FinMonoid& m,
                                       const FinFn& action) {
  const FinSet& c = m.carrier();
  MonoidLawReport laws = check_monoid_laws(m);
  if (!laws.ok) {
    throw PreconditionError("translation_category: not a monoid (" + laws.detail + ")");
  }
  FinSet expectedDom = product_set(states, c);
  if (action.dom() != expectedDom || action.cod() != states) {
    throw TypeError("translation_category: action must be a function E x M -> E");
  }
  auto d = [&](int e, int x) { return action(pair_index(states, c, e, x)); };
  for (int e = 0; e < states.size(); ++e) {
    if (d(e, m.unit()) != e) {
      throw PreconditionError("translation_category: d(" + states.label(e) +
                              ", unit) != " + states.label(e) + "; not an action");
    }
    for (int x = 0; x < c.size(); ++x) {
      for (int y = 0; y < c.size(); ++y) {
        if (d(e, m.mul(x, y)) != d(d(e, x), y)) {
          throw PreconditionError("translation_category: action law fails at (" +
                                  states.label(e) + ", " + c.label(x) + ", " + c.label(y) +
                                  ")");
        }
      }
    }
  }

  // One morphism (e, m) : e -> d(e, m) per state and monoid element.
  FinSet morphisms = product_set(states, c);
  int nMor = morphisms.size();
  std::vector<int> src(static_cast<size_t>(nMor));
  std::vector<int> tgt(static_cast<size_t>(nMor));
  std::vector<int> id(static_cast<size_t>(states.size()));
  std::vector<std::array<int, 3>> comp;
  for (int e = 0; e < states.size(); ++e) {
    id[static_cast<size_t>(e)] = pair_index(states, c, e, m.unit());
    for (int x = 0; x < c.size(); ++x) {
      int mi = pair_index(states, c, e, x);
      src[static_cast<size_t>(mi)] = e;
      tgt[static_cast<size_t>(mi)] = d(e, x);
    }
  }
  for (int e = 0; e < states.size(); ++e) {
    for (int x = 0; x < c.size(); ++x) {
      int f = pair_index(states, c, e, x);
      int e2 = d(e, x);
      for (int y = 0; y < c.size(); ++y) {
        int g = pair_index(states, c, e2, y);
        comp.push_back({g, f, pair_index(states, c, e, m.mul(x, y))});
      }
    }
  }
  FinCat cat("E[" + m.name() + "]", states, std::move(morphisms), std::move(src),
             std::move(tgt), std::move(id), comp);
  FinCat baseCat = monoid_as_category(m);
  std::vector<int> onObj(static_cast<size_t>(states.size()), 0);
  std::vector<int> onMor(static_cast<size_t>(nMor));
  for (int e = 0; e < states.size(); ++e) {
    for (int x = 0; x < c.size(); ++x) {
      onMor[static_cast<size_t>(pair_index(states, c, e, x))] = x;
    }
  }
  CatFunctor projection("proj", cat, std::move(baseCat), std::move(onObj), std::move(onMor));
  return {std::move(cat), std::move(projection)};
}

TranslationResult translation_category(const MonoidMealyMachine& m) {
  const FinMonoid& mon = m.input().finite();
  FinSet dom = product_set(m.states(), mon.carrier());
  std::vector<int> table(static_cast<size_t>(dom.size()));
  for (int e = 0; e < m.states().size(); ++e) {
    for (int x = 0; x < mon.carrier().size(); ++x) {
      table[static_cast<size_t>(pair_index(m.states(), mon.carrier(), e, x))] = m.d_at(e, x);
    }
  }
  FinFn action(std::move(dom), m.states(), std::move(table));
  return translation_category(m.states(), mon, action);
}

SigmaResult sigma_functor(const MonoidMealyMachine& m) {
  const FinMonoid& inMon = m.input().finite();
  const FinMonoid& outMon = m.output().finite();
  const FinSet& c = inMon.carrier();
  SigmaResult res;
  // Identity preservation: s(e, 1) must be the unit, not merely idempotent.
  for (int e = 0; e < m.states().size(); ++e) {
    if (m.s_at(e, inMon.unit()).at(0) != outMon.unit()) {
      res.status = SigmaResult::Status::UnitFailure;
      res.state = e;
      res.detail = "Sigma does not preserve the identity at " + m.states().label(e) +
                   ": s(e, unit) = " + outMon.carrier().label(m.s_at(e, inMon.unit()).at(0));
      return res;
    }
  }
  // Composition preservation is the fugality equation, checked in the same
  // order as is_fugal so the two verdicts name the same witness.
  for (int e = 0; e < m.states().size(); ++e) {
    for (int x = 0; x < c.size(); ++x) {
      for (int y = 0; y < c.size(); ++y) {
        int lhs = m.s_at(e, inMon.mul(x, y)).at(0);
        int rhs = outMon.mul(m.s_at(e, x).at(0), m.s_at(m.d_at(e, x), y).at(0));
        if (lhs != rhs) {
          res.status = SigmaResult::Status::CompositionFailure;
          res.state = e;
          res.m = {x};
          res.m2 = {y};
          res.detail = "Sigma does not preserve the composite at (" + m.states().label(e) +
                       ", " + c.label(x) + ", " + c.label(y) + ")";
          return res;
        }
      }
    }
  }
  TranslationResult tr = translation_category(m);
  FinCat target = monoid_as_category(outMon);
  std::vector<int> onObj(static_cast<size_t>(m.states().size()), 0);
  std::vector<int> onMor(static_cast<size_t>(tr.cat.morphisms().size()));
  for (int e = 0; e < m.states().size(); ++e) {
    for (int x = 0; x < c.size(); ++x) {
      onMor[static_cast<size_t>(pair_index(m.states(), c, e, x))] = m.s_at(e, x).at(0);
    }
  }
  res.functor = CatFunctor("Sigma", tr.cat, std::move(target), std::move(onObj),
                           std::move(onMor));
  return res;
}

GuitartSpan pi_span(const MonoidMealyMachine& m) {
  SigmaResult sig = sigma_functor(m);
  if (sig.status != SigmaResult::Status::Ok) {
    throw PreconditionError("pi_span: machine is not fugal (" + sig.detail + ")");
  }
  TranslationResult tr = translation_category(m);
  return GuitartSpan(tr.projection, *sig.functor);
}

GuitartSpan compose_spans(const GuitartSpan& sp1, const GuitartSpan& sp2) {
  if (!(sp1.target() == sp2.base())) {
    throw TypeError("compose_spans: target of the first span is not the base of the second");
  }
  const FinCat& e = sp1.apex();
  const FinCat& f = sp2.apex();
  const CatFunctor& s1 = sp1.right;
  const CatFunctor& q2 = sp2.left;

  // Pullback objects: pairs agreeing in the middle category.
  std::vector<std::string> objLabels;
  std::vector<std::pair<int, int>> objPairs;
  std::vector<int> objIndex(static_cast<size_t>(e.objects().size()) *
                                static_cast<size_t>(f.objects().size()),
                            -1);
  for (int eo = 0; eo < e.objects().size(); ++eo) {
    for (int fo = 0; fo < f.objects().size(); ++fo) {
      if (s1.obj(eo) != q2.obj(fo)) continue;
      objIndex[static_cast<size_t>(eo) * static_cast<size_t>(f.objects().size()) +
               static_cast<size_t>(fo)] = static_cast<int>(objPairs.size());
      objPairs.emplace_back(eo, fo);
      objLabels.push_back(pair_label(e.objects().label(eo), f.objects().label(fo)));
    }
  }
  std::vector<std::string> morLabels;
  std::vector<std::pair<int, int>> morPairs;
  std::vector<int> morIndex(static_cast<size_t>(e.morphisms().size()) *
                                static_cast<size_t>(f.morphisms().size()),
                            -1);
  for (int em = 0; em < e.morphisms().size(); ++em) {
    for (int fm = 0; fm < f.morphisms().size(); ++fm) {
      if (s1.mor(em) != q2.mor(fm)) continue;
      morIndex[static_cast<size_t>(em) * static_cast<size_t>(f.morphisms().size()) +
               static_cast<size_t>(fm)] = static_cast<int>(morPairs.size());
      morPairs.emplace_back(em, fm);
      morLabels.push_back(pair_label(e.morphisms().label(em), f.morphisms().label(fm)));
    }
  }
  auto objAt = [&](int eo, int fo) {
    return objIndex[static_cast<size_t>(eo) * static_cast<size_t>(f.objects().size()) +
                    static_cast<size_t>(fo)];
  };
  auto morAt = [&](int em, int fm) {
    return morIndex[static_cast<size_t>(em) * static_cast<size_t>(f.morphisms().size()) +
                    static_cast<size_t>(fm)];
  };

  int nMor = static_cast<int>(morPairs.size());
  std::vector<int> src(static_cast<size_t>(nMor));
  std::vector<int> tgt(static_cast<size_t>(nMor));
  std::vector<int> id(objPairs.size());
  for (int mi = 0; mi < nMor; ++mi) {
    auto [em, fm] = morPairs[static_cast<size_t>(mi)];
    src[static_cast<size_t>(mi)] = objAt(e.src(em), f.src(fm));
    tgt[static_cast<size_t>(mi)] = objAt(e.tgt(em), f.tgt(fm));
  }
  for (size_t oi = 0; oi < objPairs.size(); ++oi) {
    auto [eo, fo] = objPairs[oi];
    id[oi] = morAt(e.id(eo), f.id(fo));
  }
  std::vector<std::array<int, 3>> comp;
  for (int g = 0; g < nMor; ++g) {
    for (int h = 0; h < nMor; ++h) {
      auto [ge, gf] = morPairs[static_cast<size_t>(g)];
      auto [he, hf] = morPairs[static_cast<size_t>(h)];
      if (!e.composable(ge, he) || !f.composable(gf, hf)) continue;
      int ce = e.compose(ge, he);
      int cf = f.compose(gf, hf);
      int target = morAt(ce, cf);
      if (target >= 0) comp.push_back({g, h, target});
    }
  }
  FinCat pullback(sp1.apex().name() + "*" + sp2.apex().name(),
                  FinSet("pb-obj", std::move(objLabels)), FinSet("pb-mor", std::move(morLabels)),
                  std::move(src), std::move(tgt), std::move(id), comp);

  std::vector<int> lObj(objPairs.size()), rObj(objPairs.size());
  std::vector<int> lMor(morPairs.size()), rMor(morPairs.size());
  for (size_t oi = 0; oi < objPairs.size(); ++oi) {
    lObj[oi] = sp1.left.obj(objPairs[oi].first);
    rObj[oi] = sp2.right.obj(objPairs[oi].second);
  }
  for (size_t mi = 0; mi < morPairs.size(); ++mi) {
    lMor[mi] = sp1.left.mor(morPairs[mi].first);
    rMor[mi] = sp2.right.mor(morPairs[mi].second);
  }
  CatFunctor left("p", pullback, sp1.base(), std::move(lObj), std::move(lMor));
  CatFunctor right("S", pullback, sp2.target(), std::move(rObj), std::move(rMor));
  return GuitartSpan(std::move(left), std::move(right));
}

PiReport verify_pi_functoriality(const MonoidMealyMachine& m1,
                                 const MonoidMealyMachine& m2) {
  if (m1.input().is_free() || m2.input().is_free()) {
    throw PreconditionError("verify_pi_functoriality: monoids must be finite");
  }
  if (!(m1.output() == m2.input())) {
    throw TypeError("verify_pi_functoriality: machines are not composable");
  }
  GuitartSpan sp1 = pi_span(m1);
  GuitartSpan sp2 = pi_span(m2);
  GuitartSpan composite = compose_spans(sp1, sp2);
  MonoidMealyMachine diamond = compose_diamond(m2, m1);
  GuitartSpan direct = pi_span(diamond);

  PiReport r;
  const FinSet& eStates = m1.states();
  const FinSet& fStates = m2.states();
  const FinSet& carrier = m1.input().symbols();
  if (composite.apex().objects().size() != direct.apex().objects().size() ||
      composite.apex().morphisms().size() != direct.apex().morphisms().size()) {
    r.ok = false;
    r.detail = "pullback and translation category of the composite differ in size";
    return r;
  }
  // Canonical comparison: pullback object (e, f) to composite state (f, e);
  // pullback morphism ((e, m), (f, n)) with n = s1(e, m) to ((f, e), m).
  // The pair structure is rebuilt by replaying the enumeration order used in
  // compose_spans (left component outermost, matching middle images only).
  std::vector<int> onObj;
  std::vector<int> onMor;
  onObj.reserve(static_cast<size_t>(composite.apex().objects().size()));
  onMor.reserve(static_cast<size_t>(composite.apex().morphisms().size()));
  for (int e = 0; e < eStates.size(); ++e) {
    for (int f = 0; f < fStates.size(); ++f) {
      // One-object middle category: every pair agrees.
      onObj.push_back(pair_index(fStates, eStates, f, e));
    }
  }
  const int nCar = carrier.size();
  const int nMid = m2.input().symbols().size();
  for (int em = 0; em < eStates.size() * nCar; ++em) {
    int e = em / nCar;
    int x = em % nCar;
    int mid = m1.s_at(e, x).at(0);
    for (int fm = 0; fm < fStates.size() * nMid; ++fm) {
      if (fm % nMid != mid) continue;
      int f = fm / nMid;
      onMor.push_back(pair_index(fStates, eStates, f, e) * nCar + x);
    }
  }
  if (static_cast<int>(onObj.size()) != composite.apex().objects().size() ||
      static_cast<int>(onMor.size()) != composite.apex().morphisms().size()) {
    r.ok = false;
    r.detail = "pullback enumeration does not match the expected pair structure";
    return r;
  }
  CatFunctor comparison("can", composite.apex(), direct.apex(), std::move(onObj),
                        std::move(onMor));
  // Isomorphism of categories: bijective on objects and on morphisms.
  {
    std::vector<char> hitO(static_cast<size_t>(direct.apex().objects().size()), 0);
    for (int zo = 0; zo < composite.apex().objects().size(); ++zo) {
      if (hitO[static_cast<size_t>(comparison.obj(zo))]++) {
        r.ok = false;
        r.detail = "comparison is not injective on objects";
        return r;
      }
    }
    std::vector<char> hitM(static_cast<size_t>(direct.apex().morphisms().size()), 0);
    for (int zm = 0; zm < composite.apex().morphisms().size(); ++zm) {
      if (hitM[static_cast<size_t>(comparison.mor(zm))]++) {
        r.ok = false;
        r.detail = "comparison is not injective on morphisms";
        return r;
      }
    }
  }
  if (!(compose_functors(direct.left, comparison) == composite.left)) {
    r.ok = false;
    r.detail = "comparison does not commute with the left legs";
    return r;
  }
  if (!(compose_functors(direct.right, comparison) == composite.right)) {
    r.ok = false;
    r.detail = "comparison does not commute with the right legs";
    return r;
  }
  return r;
}

MacCellReport check_mac_2cell(const CatFunctor& h, const GuitartSpan& sp1,
                              const GuitartSpan& sp2) {
  if (!(h.dom() == sp1.apex()) || !(h.cod() == sp2.apex())) {
    throw TypeError("check_mac_2cell: H must go from the first apex to the second");
  }
  if (!(sp1.base() == sp2.base()) || !(sp1.target() == sp2.target())) {
    throw TypeError("check_mac_2cell: spans must be parallel");
  }
  MacCellReport r;
  CatFunctor qh = compose_functors(sp2.left, h);
  for (int o = 0; o < sp1.apex().objects().size(); ++o) {
    if (qh.obj(o) != sp1.left.obj(o)) {
      r.ok = false;
      r.which = "p-triangle";
      r.obj = o;
      r.detail = "q(H(" + sp1.apex().objects().label(o) + ")) != p(...)";
      return r;
    }
  }
  for (int m = 0; m < sp1.apex().morphisms().size(); ++m) {
    if (qh.mor(m) != sp1.left.mor(m)) {
      r.ok = false;
      r.which = "p-triangle";
      r.mor = m;
      r.detail = "q(H(" + sp1.apex().morphisms().label(m) + ")) != p(...)";
      return r;
    }
  }
  CatFunctor th = compose_functors(sp2.right, h);
  for (int o = 0; o < sp1.apex().objects().size(); ++o) {
    if (th.obj(o) != sp1.right.obj(o)) {
      r.ok = false;
      r.which = "s-triangle";
      r.obj = o;
      r.detail = "T(H(" + sp1.apex().objects().label(o) + ")) != S(...)";
      return r;
    }
  }
  for (int m = 0; m < sp1.apex().morphisms().size(); ++m) {
    if (th.mor(m) != sp1.right.mor(m)) {
      r.ok = false;
      r.which = "s-triangle";
      r.mor = m;
      r.detail = "T(H(" + sp1.apex().morphisms().label(m) + ")) != S(...)";
      return r;
    }
  }
  // H must send the unique lift at e to the unique lift at H(e).
  const FinCat& base = sp1.base();
  for (int e = 0; e < sp1.apex().objects().size(); ++e) {
    for (int m = 0; m < base.morphisms().size(); ++m) {
      if (base.src(m) != sp1.left.obj(e)) continue;
      int lift1 = opcartesian_lift(sp1.left, e, m);
      int lift2 = opcartesian_lift(sp2.left, h.obj(e), m);
      if (h.mor(lift1) != lift2) {
        r.ok = false;
        r.which = "opcartesian";
        r.obj = e;
        r.mor = m;
        r.detail = "H does not preserve the lift of '" + base.morphisms().label(m) +
                   "' at '" + sp1.apex().objects().label(e) + "'";
        return r;
      }
    }
  }
  return r;
}

CatFunctor induced_mac_2cell(const FinFn& f, const MonoidMealyMachine& m,
                             const MonoidMealyMachine& m2) {
  TranslationResult t1 = translation_category(m);
  TranslationResult t2 = translation_category(m2);
  const FinSet& carrier = m.input().symbols();
  std::vector<int> onObj(static_cast<size_t>(m.states().size()));
  std::vector<int> onMor(static_cast<size_t>(t1.cat.morphisms().size()));
  for (int e = 0; e < m.states().size(); ++e) {
    onObj[static_cast<size_t>(e)] = f(e);
    for (int x = 0; x < carrier.size(); ++x) {
      onMor[static_cast<size_t>(pair_index(m.states(), carrier, e, x))] =
          pair_index(m2.states(), carrier, f(e), x);
    }
  }
  return CatFunctor("H(" + std::string("f") + ")", t1.cat, t2.cat, std::move(onObj),
                    std::move(onMor));
}

} // namespace fugue
