#include "fugue/kan.hpp"

namespace fugue {

MonadLawReport check_monad_laws(const CatFunctor& t, const std::vector<int>& eta,
                                const std::vector<int>& mu) {
  MonadLawReport r;
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.detail = msg;
    return r;
  };
  if (!(t.dom() == t.cod())) return fail("T is not an endofunctor");
  const FinCat& c = t.dom();
  if (static_cast<int>(eta.size()) != c.objects().size() ||
      static_cast<int>(mu.size()) != c.objects().size()) {
    return fail("eta and mu need one component per object");
  }
  for (int o = 0; o < c.objects().size(); ++o) {
    int e = eta[static_cast<size_t>(o)];
    int m = mu[static_cast<size_t>(o)];
    if (e < 0 || e >= c.morphisms().size() || m < 0 || m >= c.morphisms().size()) {
      return fail("eta/mu component out of range");
    }
    if (c.src(e) != o || c.tgt(e) != t.obj(o)) {
      return fail("eta at '" + c.objects().label(o) + "' is not a morphism c -> T c");
    }
    if (c.src(m) != t.obj(t.obj(o)) || c.tgt(m) != t.obj(o)) {
      return fail("mu at '" + c.objects().label(o) + "' is not a morphism TTc -> Tc");
    }
  }
  for (int f = 0; f < c.morphisms().size(); ++f) {
    int so = c.src(f), to = c.tgt(f);
    if (c.compose(eta[static_cast<size_t>(to)], f) !=
        c.compose(t.mor(f), eta[static_cast<size_t>(so)])) {
      return fail("eta is not natural at '" + c.morphisms().label(f) + "'");
    }
    if (c.compose(mu[static_cast<size_t>(to)], t.mor(t.mor(f))) !=
        c.compose(t.mor(f), mu[static_cast<size_t>(so)])) {
      return fail("mu is not natural at '" + c.morphisms().label(f) + "'");
    }
  }
  for (int o = 0; o < c.objects().size(); ++o) {
    int to = t.obj(o);
    int m = mu[static_cast<size_t>(o)];
    if (c.compose(m, eta[static_cast<size_t>(to)]) != c.id(to)) {
      return fail("left unit law fails at '" + c.objects().label(o) + "'");
    }
    if (c.compose(m, t.mor(eta[static_cast<size_t>(o)])) != c.id(to)) {
      return fail("right unit law fails at '" + c.objects().label(o) + "'");
    }
    if (c.compose(m, mu[static_cast<size_t>(to)]) != c.compose(m, t.mor(m))) {
      return fail("associativity fails at '" + c.objects().label(o) + "'");
    }
  }
  return r;
}

CatMonadCell make_monad_cell(CatFunctor t, std::vector<int> eta, std::vector<int> mu) {
  MonadLawReport r = check_monad_laws(t, eta, mu);
  if (!r.ok) throw PreconditionError("monad laws fail: " + r.detail);
  return {std::move(t), std::move(eta), std::move(mu)};
}

namespace {

std::string family_label(const SetFunctor& o, const std::vector<RanExtension::Slot>& slots,
                         const std::vector<int>& values) {
  std::string l = "[";
  for (size_t k = 0; k < slots.size(); ++k) {
    if (k > 0) l += ";";
    l += o.at(slots[k].obj).label(values[k]);
  }
  return l + "]";
}

} // namespace

int RanExtension::eval(int obj, int elem, int x, int f) const {
  const auto& ss = slots_.at(static_cast<size_t>(obj));
  for (size_t k = 0; k < ss.size(); ++k) {
    if (ss[k].obj == x && ss[k].mor == f) {
      return families_[static_cast<size_t>(obj)][static_cast<size_t>(elem)][k];
    }
  }
  throw PreconditionError("ran: no slot for the requested pair");
}

RanExtension ran_along(const CatFunctor& t, const SetFunctor& o, long long cap) {
  if (!(t.dom() == t.cod())) {
    throw TypeError("ran_along: T must be an endofunctor");
  }
  if (!(o.dom() == t.dom())) {
    throw TypeError("ran_along: O must live over the domain of T");
  }
  const FinCat& c = t.dom();
  RanExtension ran;
  ran.slots_.resize(static_cast<size_t>(c.objects().size()));
  ran.families_.resize(static_cast<size_t>(c.objects().size()));
  std::vector<FinSet> onObj(static_cast<size_t>(c.objects().size()));

  for (int co = 0; co < c.objects().size(); ++co) {
    auto& slots = ran.slots_[static_cast<size_t>(co)];
    for (int x = 0; x < c.objects().size(); ++x) {
      for (int f = 0; f < c.morphisms().size(); ++f) {
        if (c.src(f) == co && c.tgt(f) == t.obj(x)) slots.push_back({x, f});
      }
    }
    long long total = 1;
    for (const auto& sl : slots) {
      total *= o.at(sl.obj).size();
      if (total > cap) {
        throw ResourceError("ran_along: component product at '" + c.objects().label(co) +
                            "' exceeds " + std::to_string(cap) + " candidates");
      }
      if (total == 0) break;
    }
    // Enumerate all families over the slots, keep the natural ones: for
    // every g : x -> y the family must send (y, Tg . f) to O(g) of its value
    // at (x, f).
    std::vector<std::string> labels;
    auto& families = ran.families_[static_cast<size_t>(co)];
    if (total > 0) {
      std::vector<int> values(slots.size(), 0);
      for (;;) {
        bool natural = true;
        for (int g = 0; natural && g < c.morphisms().size(); ++g) {
          int x = c.src(g), y = c.tgt(g);
          for (size_t k = 0; k < slots.size(); ++k) {
            if (slots[k].obj != x) continue;
            int shifted = c.compose(t.mor(g), slots[k].mor);
            size_t k2 = 0;
            for (; k2 < slots.size(); ++k2) {
              if (slots[k2].obj == y && slots[k2].mor == shifted) break;
            }
            if (k2 == slots.size()) {
              throw InvariantViolation("ran_along: missing slot for a shifted morphism");
            }
            if (o.map(g)(values[k]) != values[k2]) {
              natural = false;
              break;
            }
          }
        }
        if (natural) {
          labels.push_back(family_label(o, slots, values));
          families.push_back(values);
        }
        int k = static_cast<int>(values.size()) - 1;
        while (k >= 0) {
          if (++values[static_cast<size_t>(k)] < o.at(slots[static_cast<size_t>(k)].obj).size())
            break;
          values[static_cast<size_t>(k)] = 0;
          --k;
        }
        if (k < 0) break;
      }
    }
    onObj[static_cast<size_t>(co)] = FinSet("ran@" + c.objects().label(co), std::move(labels));
  }

  auto elem_of = [&](int obj, const std::vector<int>& values) {
    const auto& fams = ran.families_[static_cast<size_t>(obj)];
    for (size_t e = 0; e < fams.size(); ++e) {
      if (fams[e] == values) return static_cast<int>(e);
    }
    throw InvariantViolation("ran: transported family is not natural");
  };

  std::vector<FinFn> onMor;
  onMor.reserve(static_cast<size_t>(c.morphisms().size()));
  for (int h = 0; h < c.morphisms().size(); ++h) {
    int co = c.src(h), co2 = c.tgt(h);
    const auto& fams = ran.families_[static_cast<size_t>(co)];
    const auto& slots2 = ran.slots_[static_cast<size_t>(co2)];
    std::vector<int> table(fams.size());
    for (size_t e = 0; e < fams.size(); ++e) {
      std::vector<int> moved(slots2.size());
      for (size_t k = 0; k < slots2.size(); ++k) {
        int pulled = c.compose(slots2[k].mor, h); // f . h : src(h) -> T x
        moved[k] = ran.eval(co, static_cast<int>(e), slots2[k].obj, pulled);
      }
      table[e] = elem_of(co2, moved);
    }
    onMor.emplace_back(onObj[static_cast<size_t>(co)], onObj[static_cast<size_t>(co2)],
                       std::move(table));
  }
  ran.fn_ = SetFunctor("Ran_" + t.name() + "(" + o.name() + ")", c, std::move(onObj),
                       std::move(onMor));
  return ran;
}

MonadMachines build_machine_from_monad(const CatMonadCell& monad, const SetFunctor& o,
                                       const CatFunctor& i, const std::vector<int>& kappa,
                                       long long cap) {
  MonadLawReport laws = check_monad_laws(monad.t, monad.eta, monad.mu);
  if (!laws.ok) {
    throw PreconditionError("build_machine_from_monad: " + laws.detail);
  }
  const FinCat& c = monad.t.dom();
  if (!(i.dom() == c) || !(i.cod() == c)) {
    throw TypeError("build_machine_from_monad: input must be an endofunctor on the same "
                    "category");
  }
  if (static_cast<int>(kappa.size()) != c.objects().size()) {
    throw MalformedInputError("build_machine_from_monad: kappa needs one component per "
                              "object");
  }
  for (int co = 0; co < c.objects().size(); ++co) {
    int k = kappa[static_cast<size_t>(co)];
    if (k < 0 || k >= c.morphisms().size() || c.src(k) != i.obj(co) ||
        c.tgt(k) != monad.t.obj(co)) {
      throw PreconditionError("build_machine_from_monad: kappa at '" +
                              c.objects().label(co) + "' is not a morphism i(c) -> T(c)");
    }
  }
  for (int f = 0; f < c.morphisms().size(); ++f) {
    int so = c.src(f), to = c.tgt(f);
    if (c.compose(kappa[static_cast<size_t>(to)], i.mor(f)) !=
        c.compose(monad.t.mor(f), kappa[static_cast<size_t>(so)])) {
      throw PreconditionError("build_machine_from_monad: kappa is not natural at '" +
                              c.morphisms().label(f) + "'");
    }
  }

  RanExtension ran = ran_along(monad.t, o, cap);
  const SetFunctor& e = ran.functor();
  SetFunctor ei = precompose(e, i);

  // sigma (Moore): evaluate a family at the monad unit.
  std::vector<FinFn> sigmaComps;
  for (int co = 0; co < c.objects().size(); ++co) {
    std::vector<int> table(static_cast<size_t>(e.at(co).size()));
    for (int el = 0; el < e.at(co).size(); ++el) {
      table[static_cast<size_t>(el)] =
          ran.eval(co, el, co, monad.eta[static_cast<size_t>(co)]);
    }
    sigmaComps.emplace_back(e.at(co), o.at(co), std::move(table));
  }
  NatTrans sigmaMoore("sigma", e, o, std::move(sigmaComps));

  // delta: family at i(c) to family at c through mu . T f . kappa.
  std::vector<FinFn> deltaComps;
  for (int co = 0; co < c.objects().size(); ++co) {
    int ico = i.obj(co);
    const auto& slots = ran.slots(co);
    std::vector<int> table(static_cast<size_t>(e.at(ico).size()));
    for (int el = 0; el < e.at(ico).size(); ++el) {
      std::vector<int> values(slots.size());
      for (size_t k = 0; k < slots.size(); ++k) {
        int x = slots[k].obj;
        int path = c.compose(monad.mu[static_cast<size_t>(x)],
                             c.compose(monad.t.mor(slots[k].mor),
                                       kappa[static_cast<size_t>(co)]));
        values[k] = ran.eval(ico, el, x, path);
      }
      int target = -1;
      for (int cand = 0; cand < e.at(co).size(); ++cand) {
        if (ran.family(co, cand) == values) {
          target = cand;
          break;
        }
      }
      if (target < 0) {
        throw InvariantViolation("build_machine_from_monad: delta image is not natural");
      }
      table[static_cast<size_t>(el)] = target;
    }
    deltaComps.emplace_back(e.at(ico), e.at(co), std::move(table));
  }
  NatTrans delta("delta", ei, e, std::move(deltaComps));

  // sigma (Mealy): evaluate a family at kappa.
  std::vector<FinFn> mealyComps;
  for (int co = 0; co < c.objects().size(); ++co) {
    int ico = i.obj(co);
    std::vector<int> table(static_cast<size_t>(e.at(ico).size()));
    for (int el = 0; el < e.at(ico).size(); ++el) {
      table[static_cast<size_t>(el)] = ran.eval(ico, el, co, kappa[static_cast<size_t>(co)]);
    }
    mealyComps.emplace_back(e.at(ico), o.at(co), std::move(table));
  }
  NatTrans sigmaMealy("sigma-mealy", ei, o, std::move(mealyComps));

  CatMooreMachine moore{e, i, o, delta, sigmaMoore};
  CatMealyMachine mealy{e, i, o, delta, std::move(sigmaMealy)};
  return {std::move(ran), std::move(moore), std::move(mealy)};
}

UpReport check_ran_universal_property(const CatFunctor& t, const SetFunctor& o,
                                      const SetFunctor& e, const NatTrans& gamma,
                                      long long cap) {
  SetFunctor et = precompose(e, t);
  if (!(gamma.src() == et) || !(gamma.dst() == o)) {
    throw TypeError("check_ran_universal_property: gamma must be a transformation "
                    "E.T => O");
  }
  RanExtension ran = ran_along(t, o, cap);
  const FinCat& c = t.dom();
  UpReport rep;
  std::vector<NatTrans> candidates = enumerate_nat_trans(e, ran.functor(), cap);
  for (const NatTrans& phi : candidates) {
    bool matches = true;
    for (int co = 0; matches && co < c.objects().size(); ++co) {
      int tco = t.obj(co);
      for (int v = 0; v < e.at(tco).size(); ++v) {
        int family = phi.at(tco)(v);
        int counit = ran.eval(tco, family, co, c.id(tco));
        if (counit != gamma.at(co)(v)) {
          matches = false;
          break;
        }
      }
    }
    if (matches) {
      ++rep.mediators;
      if (!rep.mediator) rep.mediator = phi;
    }
  }
  rep.ok = rep.mediators == 1;
  if (!rep.ok) {
    rep.detail = "expected exactly one mediator, found " + std::to_string(rep.mediators);
  }
  return rep;
}

} // namespace fugue
