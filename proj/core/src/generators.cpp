#include "fugue/generators.hpp"

namespace fugue {

FinSet numbered_set(const std::string& name, const std::string& prefix, int size) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet(name, std::move(labels));
}

MealyMachine xor_machine() {
  FinSet bits("bit", {"0", "1"});
  // d(p, x) = s(p, x) = p xor x
  std::vector<int> d{0, 1, 1, 0};
  std::vector<int> s{0, 1, 1, 0};
  return MealyMachine("xor", bits, bits, bits, std::move(d), std::move(s));
}

MealyMachine not_machine() {
  FinSet states("pt", {"f"});
  FinSet bits("bit", {"0", "1"});
  std::vector<int> d{0, 0};
  std::vector<int> s{1, 0};
  return MealyMachine("not", std::move(states), bits, bits, std::move(d), std::move(s));
}

MealyMachine permuted_machine(const MealyMachine& m, const std::vector<int>& perm) {
  int nE = m.states().size();
  int nI = m.input().size();
  std::vector<int> inv(static_cast<size_t>(nE));
  for (int e = 0; e < nE; ++e) inv[static_cast<size_t>(perm[static_cast<size_t>(e)])] = e;
  std::vector<int> d(static_cast<size_t>(nE) * static_cast<size_t>(nI));
  std::vector<int> s(d.size());
  for (int e = 0; e < nE; ++e) {
    for (int a = 0; a < nI; ++a) {
      size_t slot = static_cast<size_t>(e) * static_cast<size_t>(nI) + static_cast<size_t>(a);
      int pre = inv[static_cast<size_t>(e)];
      d[slot] = perm[static_cast<size_t>(m.d(pre, a))];
      s[slot] = m.s(pre, a);
    }
  }
  return MealyMachine(m.name() + "~", m.states(), m.input(), m.output(), std::move(d),
                      std::move(s));
}

MealyMachine random_mealy(Rng& rng, int maxStates, int maxIn, int maxOut) {
  FinSet states = numbered_set("E", "q", 1 + rng.uniform(maxStates));
  FinSet input = numbered_set("I", "a", 1 + rng.uniform(maxIn));
  FinSet output = numbered_set("O", "x", 1 + rng.uniform(maxOut));
  size_t n = static_cast<size_t>(states.size()) * static_cast<size_t>(input.size());
  std::vector<int> d(n), s(n);
  for (size_t k = 0; k < n; ++k) {
    d[k] = rng.uniform(states.size());
    s[k] = rng.uniform(output.size());
  }
  return MealyMachine("rnd", std::move(states), std::move(input), std::move(output),
                      std::move(d), std::move(s));
}

std::pair<MealyMachine, MealyMachine> random_composable_pair(Rng& rng, int maxSize) {
  FinSet e = numbered_set("E", "q", 1 + rng.uniform(maxSize));
  FinSet f = numbered_set("F", "p", 1 + rng.uniform(maxSize));
  FinSet a = numbered_set("A", "a", 1 + rng.uniform(maxSize));
  FinSet b = numbered_set("B", "b", 1 + rng.uniform(maxSize));
  FinSet c = numbered_set("C", "c", 1 + rng.uniform(maxSize));
  size_t n1 = static_cast<size_t>(e.size()) * static_cast<size_t>(a.size());
  std::vector<int> d1(n1), s1(n1);
  for (size_t k = 0; k < n1; ++k) {
    d1[k] = rng.uniform(e.size());
    s1[k] = rng.uniform(b.size());
  }
  size_t n2 = static_cast<size_t>(f.size()) * static_cast<size_t>(b.size());
  std::vector<int> d2(n2), s2(n2);
  for (size_t k = 0; k < n2; ++k) {
    d2[k] = rng.uniform(f.size());
    s2[k] = rng.uniform(c.size());
  }
  MealyMachine m1("m1", std::move(e), a, b, std::move(d1), std::move(s1));
  MealyMachine m2("m2", std::move(f), b, c, std::move(d2), std::move(s2));
  return {std::move(m2), std::move(m1)};
}

MealyMachine random_mealy_into(Rng& rng, int maxStates, int maxIn, const FinMonoid& m) {
  FinSet states = numbered_set("E", "q", 1 + rng.uniform(maxStates));
  FinSet input = numbered_set("A", "a", 1 + rng.uniform(maxIn));
  size_t n = static_cast<size_t>(states.size()) * static_cast<size_t>(input.size());
  std::vector<int> d(n), s(n);
  for (size_t k = 0; k < n; ++k) {
    d[k] = rng.uniform(states.size());
    s[k] = rng.uniform(m.carrier().size());
  }
  return MealyMachine("rnd", std::move(states), std::move(input), m.carrier(),
                      std::move(d), std::move(s));
}

Rel random_rel(Rng& rng, const FinSet& src, const FinSet& dst) {
  Rel r(src, dst);
  for (int i = 0; i < src.size(); ++i) {
    for (int j = 0; j < dst.size(); ++j) {
      if (rng.coin()) r.set(i, j, true);
    }
  }
  return r;
}

std::vector<std::vector<int>> enumerate_actions(const FinSet& states, const FinMonoid& m) {
  const FinSet& c = m.carrier();
  int nE = states.size();
  int nM = c.size();
  std::vector<std::vector<int>> out;
  // Odometer over all tables with d(e, unit) = e forced.
  std::vector<int> table(static_cast<size_t>(nE) * static_cast<size_t>(nM), 0);
  std::vector<size_t> freeSlots;
  for (int e = 0; e < nE; ++e) {
    for (int x = 0; x < nM; ++x) {
      size_t slot = static_cast<size_t>(e) * static_cast<size_t>(nM) + static_cast<size_t>(x);
      if (x == m.unit()) {
        table[slot] = e;
      } else {
        freeSlots.push_back(slot);
      }
    }
  }
  auto is_action = [&]() {
    for (int e = 0; e < nE; ++e) {
      for (int x = 0; x < nM; ++x) {
        int ex = table[static_cast<size_t>(e) * static_cast<size_t>(nM) +
                       static_cast<size_t>(x)];
        for (int y = 0; y < nM; ++y) {
          int lhs = table[static_cast<size_t>(e) * static_cast<size_t>(nM) +
                          static_cast<size_t>(m.mul(x, y))];
          int rhs = table[static_cast<size_t>(ex) * static_cast<size_t>(nM) +
                          static_cast<size_t>(y)];
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  };
  std::vector<int> digits(freeSlots.size(), 0);
  for (;;) {
    for (size_t k = 0; k < freeSlots.size(); ++k) table[freeSlots[k]] = digits[k];
    if (is_action()) out.push_back(table);
    int k = static_cast<int>(digits.size()) - 1;
    while (k >= 0) {
      if (++digits[static_cast<size_t>(k)] < nE) break;
      digits[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<MonoidMealyMachine> enumerate_fugal_machines(const FinSet& states,
                                                         const FinMonoid& m,
                                                         const FinMonoid& n) {
  std::vector<MonoidMealyMachine> out;
  int nE = states.size();
  int nM = m.carrier().size();
  int nN = n.carrier().size();
  size_t cells = static_cast<size_t>(nE) * static_cast<size_t>(nM);
  for (const auto& action : enumerate_actions(states, m)) {
    std::vector<MonVal> s(cells);
    std::vector<int> digits(cells, 0);
    for (;;) {
      bool fugal = true;
      auto sAt = [&](int e, int x) {
        return digits[static_cast<size_t>(e) * static_cast<size_t>(nM) +
                      static_cast<size_t>(x)];
      };
      auto dAt = [&](int e, int x) {
        return action[static_cast<size_t>(e) * static_cast<size_t>(nM) +
                      static_cast<size_t>(x)];
      };
      for (int e = 0; fugal && e < nE; ++e) {
        for (int x = 0; fugal && x < nM; ++x) {
          for (int y = 0; y < nM; ++y) {
            if (sAt(e, m.mul(x, y)) != n.mul(sAt(e, x), sAt(dAt(e, x), y))) {
              fugal = false;
              break;
            }
          }
        }
      }
      if (fugal) {
        for (size_t k = 0; k < cells; ++k) s[k] = MonVal{digits[k]};
        out.emplace_back("enum", states, MonoidDesc(m), MonoidDesc(n), action, s);
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
  return out;
}

std::optional<SetFunctor> try_random_set_functor(Rng& rng, const FinCat& cat, int minSize,
                                                 int maxSize) {
  std::vector<FinSet> onObj;
  onObj.reserve(static_cast<size_t>(cat.objects().size()));
  for (int o = 0; o < cat.objects().size(); ++o) {
    int size = minSize + rng.uniform(maxSize - minSize + 1);
    onObj.push_back(numbered_set("F" + cat.objects().label(o),
                                 "v" + std::to_string(o) + "_", size));
  }
  std::vector<FinFn> onMor;
  onMor.reserve(static_cast<size_t>(cat.morphisms().size()));
  for (int m = 0; m < cat.morphisms().size(); ++m) {
    const FinSet& dom = onObj[static_cast<size_t>(cat.src(m))];
    const FinSet& cod = onObj[static_cast<size_t>(cat.tgt(m))];
    if (dom.size() > 0 && cod.size() == 0) return std::nullopt;
    std::vector<int> table(static_cast<size_t>(dom.size()));
    if (m == cat.id(cat.src(m)) && cat.src(m) == cat.tgt(m)) {
      for (int x = 0; x < dom.size(); ++x) table[static_cast<size_t>(x)] = x;
    } else {
      for (int x = 0; x < dom.size(); ++x) table[static_cast<size_t>(x)] = rng.uniform(cod.size());
    }
    onMor.emplace_back(dom, cod, std::move(table));
  }
  try {
    return SetFunctor("rnd", cat, std::move(onObj), std::move(onMor));
  } catch (const InvariantViolation&) {
    return std::nullopt;
  }
}

} // namespace fugue
