#include "fugue/intertwiner.hpp"

namespace fugue {

Intertwiner::Intertwiner(MealyMachine src, MealyMachine dst, FinSet u, FinSet v, FinFn iota,
                         FinFn eps, FinFn omega)
    : src(std::move(src)), dst(std::move(dst)), u(std::move(u)), v(std::move(v)),
      iota(std::move(iota)), eps(std::move(eps)), omega(std::move(omega)) {
  if (this->iota.dom() != product_set(this->dst.input(), this->u) ||
      this->iota.cod() != product_set(this->u, this->src.input())) {
    throw TypeError("intertwiner: iota must map I'xU to UxI");
  }
  if (this->eps.dom() != product_set(this->dst.states(), this->u) ||
      this->eps.cod() != product_set(this->v, this->src.states())) {
    throw TypeError("intertwiner: eps must map E'xU to VxE");
  }
  if (this->omega.dom() != product_set(this->dst.output(), this->u) ||
      this->omega.cod() != product_set(this->v, this->src.output())) {
    throw TypeError("intertwiner: omega must map O'xU to VxO");
  }
}

Intertwiner identity_intertwiner(const MealyMachine& m) {
  FinSet point("pt", {"*"});
  const FinSet& i = m.input();
  const FinSet& e = m.states();
  const FinSet& o = m.output();
  // With a one-point U = V both unitors are the identity on indices.
  auto unitor = [&](const FinSet& left) {
    return FinFn(product_set(left, point), product_set(point, left),
                 [&] {
                   std::vector<int> t(static_cast<size_t>(left.size()));
                   for (int k = 0; k < left.size(); ++k) t[static_cast<size_t>(k)] = k;
                   return t;
                 }());
  };
  return Intertwiner(m, m, point, point, unitor(i), unitor(e), unitor(o));
}

Intertwiner morphism_intertwiner(const MealyMachine& src, const MealyMachine& dst,
                                 const FinFn& f) {
  if (src.input() != dst.input() || src.output() != dst.output()) {
    throw TypeError("morphism_intertwiner: machines must share their alphabets");
  }
  if (f.dom() != dst.states() || f.cod() != src.states()) {
    throw TypeError("morphism_intertwiner: map must go from target states to source states");
  }
  FinSet point("pt", {"*"});
  auto unitor = [&](const FinSet& left) {
    std::vector<int> t(static_cast<size_t>(left.size()));
    for (int k = 0; k < left.size(); ++k) t[static_cast<size_t>(k)] = k;
    return FinFn(product_set(left, point), product_set(point, left), std::move(t));
  };
  std::vector<int> epsTable(static_cast<size_t>(dst.states().size()));
  for (int e2 = 0; e2 < dst.states().size(); ++e2) epsTable[static_cast<size_t>(e2)] = f(e2);
  FinFn eps(product_set(dst.states(), point), product_set(point, src.states()),
            std::move(epsTable));
  return Intertwiner(src, dst, point, point, unitor(src.input()), std::move(eps),
                     unitor(src.output()));
}

IntertwinerReport check_intertwiner(const Intertwiner& it) {
  const FinSet& e2 = it.dst.states();
  const FinSet& i2 = it.dst.input();
  const FinSet& o2 = it.dst.output();
  const FinSet& u = it.u;
  const FinSet& v = it.v;
  const FinSet& e1 = it.src.states();
  const FinSet& i1 = it.src.input();
  const FinSet& o1 = it.src.output();

  for (int e = 0; e < e2.size(); ++e) {
    for (int i = 0; i < i2.size(); ++i) {
      for (int uu = 0; uu < u.size(); ++uu) {
        // Right-hand side shared by both identities: thread iota then eps.
        auto [u1, a] = unpair_index(u, i1, it.iota(pair_index(i2, u, i, uu)));
        auto [vv, e0] = unpair_index(v, e1, it.eps(pair_index(e2, u, e, u1)));
        // d-identity: eps(d'(e,i), u) = (v, d(e0, a)).
        int lhsD = it.eps(pair_index(e2, u, it.dst.d(e, i), uu));
        int rhsD = pair_index(v, e1, vv, it.src.d(e0, a));
        if (lhsD != rhsD) {
          IntertwinerReport r;
          r.ok = false;
          r.equation = 'd';
          r.state = e;
          r.letter = i;
          r.uElem = uu;
          r.detail = "d-identity fails at (" + e2.label(e) + ", " + i2.label(i) + ", " +
                     u.label(uu) + ")";
          return r;
        }
        // s-identity: omega(s'(e,i), u) = (v, s(e0, a)).
        int lhsS = it.omega(pair_index(o2, u, it.dst.s(e, i), uu));
        int rhsS = pair_index(v, o1, vv, it.src.s(e0, a));
        if (lhsS != rhsS) {
          IntertwinerReport r;
          r.ok = false;
          r.equation = 's';
          r.state = e;
          r.letter = i;
          r.uElem = uu;
          r.detail = "s-identity fails at (" + e2.label(e) + ", " + i2.label(i) + ", " +
                     u.label(uu) + ")";
          return r;
        }
      }
    }
  }
  return {};
}

Intertwiner compose_intertwiners(const Intertwiner& it2, const Intertwiner& it1) {
  if (!(it1.dst == it2.src)) {
    throw TypeError("compose_intertwiners: middle machines do not match");
  }
  const MealyMachine& m = it1.src;
  const MealyMachine& m2 = it2.dst;
  FinSet u = product_set(it2.u, it1.u);
  FinSet v = product_set(it2.v, it1.v);

  // iota: (i'', (u2, u1)) -> ((u2', u1'), i) through iota2 then iota1.
  FinSet iotaDom = product_set(m2.input(), u);
  FinSet iotaCod = product_set(u, m.input());
  std::vector<int> iotaT(static_cast<size_t>(iotaDom.size()));
  for (int i = 0; i < m2.input().size(); ++i) {
    for (int u2 = 0; u2 < it2.u.size(); ++u2) {
      for (int u1 = 0; u1 < it1.u.size(); ++u1) {
        auto [u2p, mid] = unpair_index(it2.u, it1.dst.input(),
                                       it2.iota(pair_index(m2.input(), it2.u, i, u2)));
        auto [u1p, a] = unpair_index(it1.u, m.input(),
                                     it1.iota(pair_index(it1.dst.input(), it1.u, mid, u1)));
        int uIdx = pair_index(it2.u, it1.u, u2, u1);
        int uOut = pair_index(it2.u, it1.u, u2p, u1p);
        iotaT[static_cast<size_t>(pair_index(m2.input(), u, i, uIdx))] =
            pair_index(u, m.input(), uOut, a);
      }
    }
  }

  FinSet epsDom = product_set(m2.states(), u);
  FinSet epsCod = product_set(v, m.states());
  std::vector<int> epsT(static_cast<size_t>(epsDom.size()));
  for (int e = 0; e < m2.states().size(); ++e) {
    for (int u2 = 0; u2 < it2.u.size(); ++u2) {
      for (int u1 = 0; u1 < it1.u.size(); ++u1) {
        auto [v2, mid] = unpair_index(it2.v, it1.dst.states(),
                                      it2.eps(pair_index(m2.states(), it2.u, e, u2)));
        auto [v1, e0] = unpair_index(it1.v, m.states(),
                                     it1.eps(pair_index(it1.dst.states(), it1.u, mid, u1)));
        int uIdx = pair_index(it2.u, it1.u, u2, u1);
        int vOut = pair_index(it2.v, it1.v, v2, v1);
        epsT[static_cast<size_t>(pair_index(m2.states(), u, e, uIdx))] =
            pair_index(v, m.states(), vOut, e0);
      }
    }
  }

  FinSet omegaDom = product_set(m2.output(), u);
  FinSet omegaCod = product_set(v, m.output());
  std::vector<int> omegaT(static_cast<size_t>(omegaDom.size()));
  for (int o = 0; o < m2.output().size(); ++o) {
    for (int u2 = 0; u2 < it2.u.size(); ++u2) {
      for (int u1 = 0; u1 < it1.u.size(); ++u1) {
        auto [v2, mid] = unpair_index(it2.v, it1.dst.output(),
                                      it2.omega(pair_index(m2.output(), it2.u, o, u2)));
        auto [v1, o0] = unpair_index(it1.v, m.output(),
                                     it1.omega(pair_index(it1.dst.output(), it1.u, mid, u1)));
        int uIdx = pair_index(it2.u, it1.u, u2, u1);
        int vOut = pair_index(it2.v, it1.v, v2, v1);
        omegaT[static_cast<size_t>(pair_index(m2.output(), u, o, uIdx))] =
            pair_index(v, m.output(), vOut, o0);
      }
    }
  }

  return Intertwiner(m, m2, std::move(u), std::move(v),
                     FinFn(std::move(iotaDom), std::move(iotaCod), std::move(iotaT)),
                     FinFn(std::move(epsDom), std::move(epsCod), std::move(epsT)),
                     FinFn(std::move(omegaDom), std::move(omegaCod), std::move(omegaT)));
}

IntertwinerTwoCell::IntertwinerTwoCell(Intertwiner src, Intertwiner dst, FinFn f, FinFn g)
    : src(std::move(src)), dst(std::move(dst)), f(std::move(f)), g(std::move(g)) {
  if (!(this->src.src == this->dst.src) || !(this->src.dst == this->dst.dst)) {
    throw TypeError("intertwiner 2-cell: endpoints must be the same machines");
  }
  if (this->f.dom() != this->src.u || this->f.cod() != this->dst.u ||
      this->g.dom() != this->src.v || this->g.cod() != this->dst.v) {
    throw TypeError("intertwiner 2-cell: f must map U to U' and g must map V to V'");
  }
}

TwoCellReport check_two_cell(const IntertwinerTwoCell& tc) {
  const Intertwiner& a = tc.src;
  const Intertwiner& b = tc.dst;
  const MealyMachine& m = a.src;
  const MealyMachine& m2 = a.dst;

  // iota square: iota'(i', f u) = (f x I)(iota(i', u)).
  for (int i = 0; i < m2.input().size(); ++i) {
    for (int u = 0; u < a.u.size(); ++u) {
      auto [u1, x] = unpair_index(a.u, m.input(), a.iota(pair_index(m2.input(), a.u, i, u)));
      int lhs = b.iota(pair_index(m2.input(), b.u, i, tc.f(u)));
      int rhs = pair_index(b.u, m.input(), tc.f(u1), x);
      if (lhs != rhs) {
        return {false, "iota", "iota square fails at (" + m2.input().label(i) + ", " +
                                   a.u.label(u) + ")"};
      }
    }
  }
  // eps square: eps'(e', f u) = (g x E)(eps(e', u)).
  for (int e = 0; e < m2.states().size(); ++e) {
    for (int u = 0; u < a.u.size(); ++u) {
      auto [v1, x] = unpair_index(a.v, m.states(), a.eps(pair_index(m2.states(), a.u, e, u)));
      int lhs = b.eps(pair_index(m2.states(), b.u, e, tc.f(u)));
      int rhs = pair_index(b.v, m.states(), tc.g(v1), x);
      if (lhs != rhs) {
        return {false, "eps", "eps square fails at (" + m2.states().label(e) + ", " +
                                  a.u.label(u) + ")"};
      }
    }
  }
  // omega square: omega'(o', f u) = (g x O)(omega(o', u)).
  for (int o = 0; o < m2.output().size(); ++o) {
    for (int u = 0; u < a.u.size(); ++u) {
      auto [v1, x] = unpair_index(a.v, m.output(), a.omega(pair_index(m2.output(), a.u, o, u)));
      int lhs = b.omega(pair_index(m2.output(), b.u, o, tc.f(u)));
      int rhs = pair_index(b.v, m.output(), tc.g(v1), x);
      if (lhs != rhs) {
        return {false, "omega", "omega square fails at (" + m2.output().label(o) + ", " +
                                    a.u.label(u) + ")"};
      }
    }
  }
  return {};
}

} // namespace fugue
