#include "fugue/fugal.hpp"

#include <algorithm>

namespace fugue {

MonoidMealyMachine::MonoidMealyMachine(std::string name, FinSet states, MonoidDesc input,
                                       MonoidDesc output, std::vector<int> d,
                                       std::vector<MonVal> s)
    : name_(std::move(name)), states_(std::move(states)), input_(std::move(input)),
      output_(std::move(output)), d_(std::move(d)), s_(std::move(s)) {
  size_t expected = static_cast<size_t>(states_.size()) *
                    static_cast<size_t>(input_.symbols().size());
  if (d_.size() != expected || s_.size() != expected) {
    throw MalformedInputError("monoid machine '" + name_ + "': tables must have " +
                              std::to_string(expected) + " entries");
  }
  for (int v : d_) {
    if (v < 0 || v >= states_.size()) {
      throw MalformedInputError("monoid machine '" + name_ + "': d entry out of range");
    }
  }
  for (const MonVal& v : s_) {
    if (!output_.valid(v)) {
      throw MalformedInputError("monoid machine '" + name_ +
                                "': s entry is not a value of the output monoid");
    }
  }
  if (!input_.is_free()) {
    // d must be an action of the input monoid on the states.
    const FinMonoid& m = input_.finite();
    MonoidLawReport laws = check_monoid_laws(m);
    if (!laws.ok) {
      throw InvariantViolation("monoid machine '" + name_ + "': input monoid is not a monoid (" +
                               laws.detail + ")");
    }
    for (int e = 0; e < states_.size(); ++e) {
      if (d_at(e, m.unit()) != e) {
        throw InvariantViolation("monoid machine '" + name_ + "': d(" + states_.label(e) +
                                 ", unit) != " + states_.label(e) + "; d is not an action");
      }
      for (int x = 0; x < m.carrier().size(); ++x) {
        for (int y = 0; y < m.carrier().size(); ++y) {
          if (d_at(e, m.mul(x, y)) != d_at(d_at(e, x), y)) {
            throw InvariantViolation("monoid machine '" + name_ + "': d(" + states_.label(e) +
                                     ", " + m.carrier().label(x) + "*" + m.carrier().label(y) +
                                     ") != d(d(e, x), y); d is not an action");
          }
        }
      }
    }
    if (!output_.is_free()) {
      MonoidLawReport outLaws = check_monoid_laws(output_.finite());
      if (!outLaws.ok) {
        throw InvariantViolation("monoid machine '" + name_ +
                                 "': output monoid is not a monoid (" + outLaws.detail + ")");
      }
    }
  }
}

int MonoidMealyMachine::act(int e, const MonVal& m) const {
  if (!input_.is_free()) return d_at(e, m.at(0));
  int cur = e;
  for (int a : m) cur = d_at(cur, a);
  return cur;
}

MonVal MonoidMealyMachine::out(int e, const MonVal& m) const {
  if (!input_.is_free()) return s_at(e, m.at(0));
  MonVal acc = output_.unit();
  int cur = e;
  for (int a : m) {
    acc = output_.mul(acc, s_at(cur, a));
    cur = d_at(cur, a);
  }
  return acc;
}

std::vector<std::vector<int>> words_up_to(int n, int bound) {
  long long total = 1, layerSize = 1;
  for (int len = 1; len <= bound; ++len) {
    layerSize *= n;
    total += layerSize;
    if (total > 5'000'000) {
      throw ResourceError("word enumeration: more than 5M words below the bound");
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> layer{{}};
  out.push_back({});
  for (int len = 1; len <= bound; ++len) {
    std::vector<std::vector<int>> next;
    next.reserve(layer.size() * static_cast<size_t>(n));
    for (const auto& w : layer) {
      for (int a = 0; a < n; ++a) {
        std::vector<int> w2 = w;
        w2.push_back(a);
        next.push_back(std::move(w2));
      }
    }
    for (const auto& w : next) out.push_back(w);
    layer = std::move(next);
  }
  return out;
}

namespace {

FugalWitness fugal_fail(const MonoidMealyMachine& m, int e, MonVal a, MonVal b) {
  FugalWitness w;
  w.machine = m;
  w.ok = false;
  w.state = e;
  w.m = std::move(a);
  w.m2 = std::move(b);
  w.detail = "fugality fails at (" + m.states().label(e) + ", " + m.input().show(w.m) +
             ", " + m.input().show(w.m2) + ")";
  return w;
}

} // namespace

FugalWitness is_fugal(const MonoidMealyMachine& m, std::optional<int> bound) {
  const MonoidDesc& in = m.input();
  const MonoidDesc& out = m.output();
  if (in.is_free()) {
    if (!bound) {
      throw UsageError("is_fugal: a word bound is required for a free input monoid");
    }
    const int n = in.symbols().size();
    const int lim = *bound;
    const bool outFree = out.is_free();
    // Words of length <= lim indexed length-major, lexicographic within a
    // length; appending a letter multiplies the in-length rank by n. Act and
    // out tables per state make each pair check a pair of lookups.
    std::vector<long long> offset(static_cast<size_t>(lim) + 2, 0);
    std::vector<long long> count(static_cast<size_t>(lim) + 1, 0);
    count[0] = 1;
    for (int l = 1; l <= lim; ++l) count[static_cast<size_t>(l)] = count[static_cast<size_t>(l - 1)] * n;
    for (int l = 0; l <= lim; ++l) {
      offset[static_cast<size_t>(l) + 1] = offset[static_cast<size_t>(l)] + count[static_cast<size_t>(l)];
    }
    const long long total = offset[static_cast<size_t>(lim) + 1];
    if (total > 5'000'000) {
      throw ResourceError("is_fugal: more than 5M words below the bound");
    }
    const int nStates = m.states().size();
    std::vector<std::vector<int>> act(static_cast<size_t>(nStates));
    std::vector<std::vector<MonVal>> outv(static_cast<size_t>(nStates));
    for (int e = 0; e < nStates; ++e) {
      auto& ae = act[static_cast<size_t>(e)];
      auto& oe = outv[static_cast<size_t>(e)];
      ae.assign(static_cast<size_t>(total), 0);
      oe.assign(static_cast<size_t>(total), {});
      ae[0] = e;
      oe[0] = out.unit();
      for (int l = 1; l <= lim; ++l) {
        for (long long r = 0; r < count[static_cast<size_t>(l)]; ++r) {
          long long idx = offset[static_cast<size_t>(l)] + r;
          long long parent = offset[static_cast<size_t>(l) - 1] + r / n;
          int a = static_cast<int>(r % n);
          int prev = ae[static_cast<size_t>(parent)];
          ae[static_cast<size_t>(idx)] = m.d_at(prev, a);
          oe[static_cast<size_t>(idx)] = out.mul(oe[static_cast<size_t>(parent)], m.s_at(prev, a));
        }
      }
    }
    auto word_of = [&](int l, long long r) {
      MonVal w(static_cast<size_t>(l));
      for (int i = l - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<int>(r % n);
        r /= n;
      }
      return w;
    };
    for (int e = 0; e < nStates; ++e) {
      for (int l1 = 0; l1 <= lim; ++l1) {
        for (long long r1 = 0; r1 < count[static_cast<size_t>(l1)]; ++r1) {
          long long w1 = offset[static_cast<size_t>(l1)] + r1;
          int mid = act[static_cast<size_t>(e)][static_cast<size_t>(w1)];
          const MonVal& o1 = outv[static_cast<size_t>(e)][static_cast<size_t>(w1)];
          for (int l2 = 0; l2 + l1 <= lim; ++l2) {
            for (long long r2 = 0; r2 < count[static_cast<size_t>(l2)]; ++r2) {
              long long w2 = offset[static_cast<size_t>(l2)] + r2;
              long long w12 =
                  offset[static_cast<size_t>(l1 + l2)] + r1 * count[static_cast<size_t>(l2)] + r2;
              const MonVal& lhs = outv[static_cast<size_t>(e)][static_cast<size_t>(w12)];
              const MonVal& o2 = outv[static_cast<size_t>(mid)][static_cast<size_t>(w2)];
              bool equal;
              if (outFree) {
                equal = lhs.size() == o1.size() + o2.size() &&
                        std::equal(o1.begin(), o1.end(), lhs.begin()) &&
                        std::equal(o2.begin(), o2.end(), lhs.begin() + static_cast<long>(o1.size()));
              } else {
                equal = lhs[0] == out.finite().mul(o1[0], o2[0]);
              }
              if (!equal) return fugal_fail(m, e, word_of(l1, r1), word_of(l2, r2));
            }
          }
        }
      }
    }
  } else {
    const FinSet& c = in.symbols();
    for (int e = 0; e < m.states().size(); ++e) {
      for (int x = 0; x < c.size(); ++x) {
        for (int y = 0; y < c.size(); ++y) {
          MonVal vx{x}, vy{y};
          MonVal lhs = m.out(e, in.mul(vx, vy));
          MonVal rhs = out.mul(m.out(e, vx), m.out(m.act(e, vx), vy));
          if (lhs != rhs) return fugal_fail(m, e, vx, vy);
        }
      }
    }
  }
  FugalWitness w;
  w.machine = m;
  return w;
}

MonoidMealyMachine fugal_extension(const MealyMachine& m) {
  MonoidDesc in{FreeMonoidHandle{m.input()}};
  MonoidDesc out{FreeMonoidHandle{m.output()}};
  std::vector<int> d(static_cast<size_t>(m.states().size()) *
                     static_cast<size_t>(m.input().size()));
  std::vector<MonVal> s(d.size());
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < m.input().size(); ++a) {
      size_t slot = static_cast<size_t>(e) * static_cast<size_t>(m.input().size()) +
                    static_cast<size_t>(a);
      d[slot] = m.d(e, a);
      s[slot] = MonVal{m.s(e, a)};
    }
  }
  return MonoidMealyMachine(m.name() + "^flat", m.states(), std::move(in), std::move(out),
                            std::move(d), std::move(s));
}

MonoidMealyMachine identity_monoid_machine(const MonoidDesc& m) {
  FinSet states("pt", {"*"});
  const FinSet& syms = m.symbols();
  std::vector<int> d(static_cast<size_t>(syms.size()), 0);
  std::vector<MonVal> s(static_cast<size_t>(syms.size()));
  for (int x = 0; x < syms.size(); ++x) s[static_cast<size_t>(x)] = MonVal{x};
  return MonoidMealyMachine("id", std::move(states), m, m, std::move(d), std::move(s));
}

MonoidMealyMachine compose_diamond(const MonoidMealyMachine& m2,
                                   const MonoidMealyMachine& m1) {
  if (!(m1.output() == m2.input())) {
    throw TypeError("compose_diamond: middle monoids do not match");
  }
  const FinSet& f = m2.states();
  const FinSet& e = m1.states();
  FinSet states = product_set(f, e);
  const FinSet& syms = m1.input().symbols();
  std::vector<int> d(static_cast<size_t>(states.size()) * static_cast<size_t>(syms.size()));
  std::vector<MonVal> s(d.size());
  for (int fi = 0; fi < f.size(); ++fi) {
    for (int ei = 0; ei < e.size(); ++ei) {
      int st = pair_index(f, e, fi, ei);
      for (int a = 0; a < syms.size(); ++a) {
        const MonVal& mid = m1.s_at(ei, a);
        size_t slot = static_cast<size_t>(st) * static_cast<size_t>(syms.size()) +
                      static_cast<size_t>(a);
        d[slot] = pair_index(f, e, m2.act(fi, mid), m1.d_at(ei, a));
        s[slot] = m2.out(fi, mid);
      }
    }
  }
  return MonoidMealyMachine(m2.name() + "<>" + m1.name(), std::move(states), m1.input(),
                            m2.output(), std::move(d), std::move(s));
}

FlatCompositionReport check_flat_preserves_composition(const MealyMachine& m2,
                                                       const MealyMachine& m1, int bound) {
  MealyMachine comp = compose_diamond(m2, m1);
  MonoidMealyMachine lhs = fugal_extension(comp);
  MonoidMealyMachine ext2 = fugal_extension(m2);
  MonoidMealyMachine ext1 = fugal_extension(m1);
  MonoidMealyMachine rhs = compose_diamond(ext2, ext1);
  auto words = words_up_to(m1.input().size(), bound);
  FlatCompositionReport r;
  for (int st = 0; st < comp.states().size(); ++st) {
    for (const auto& w : words) {
      MonVal a = lhs.out(st, w);
      MonVal b = rhs.out(st, w);
      bool sameState = lhs.act(st, w) == rhs.act(st, w);
      if (a != b || !sameState) {
        r.ok = false;
        r.state = comp.states().label(st);
        r.word = w;
        r.detail = "extension of the composite disagrees with the composite of the "
                   "extensions at state " +
                   r.state;
        return r;
      }
    }
  }
  return r;
}

MealyMachine h_restrict(const MonoidMealyMachine& m) {
  if (!m.input().is_free()) {
    throw UsageError("h_restrict: input monoid must be free");
  }
  const FinSet& gens = m.input().symbols();
  FinSet output;
  if (m.output().is_free()) {
    // Restriction lands in single letters; longer generator outputs have no
    // home in a set-machine over the generator alphabet.
    for (int e = 0; e < m.states().size(); ++e) {
      for (int a = 0; a < gens.size(); ++a) {
        if (m.s_at(e, a).size() != 1) {
          throw UsageError("h_restrict: free-output machine with a generator output of "
                           "length != 1 cannot be restricted");
        }
      }
    }
    output = m.output().symbols();
  } else {
    output = m.output().finite().carrier();
  }
  std::vector<int> d(static_cast<size_t>(m.states().size()) *
                     static_cast<size_t>(gens.size()));
  std::vector<int> s(d.size());
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < gens.size(); ++a) {
      size_t slot = static_cast<size_t>(e) * static_cast<size_t>(gens.size()) +
                    static_cast<size_t>(a);
      d[slot] = m.d_at(e, a);
      s[slot] = m.s_at(e, a).at(0);
    }
  }
  return MealyMachine("H(" + m.name() + ")", m.states(), gens, std::move(output),
                      std::move(d), std::move(s));
}

MonoidMealyMachine k_extend(const MealyMachine& m0, const FinMonoid& target) {
  if (m0.output() != target.carrier()) {
    throw TypeError("k_extend: output alphabet of '" + m0.name() +
                    "' is not the carrier of the target monoid");
  }
  MonoidDesc in{FreeMonoidHandle{m0.input()}};
  MonoidDesc out{target};
  std::vector<int> d(static_cast<size_t>(m0.states().size()) *
                     static_cast<size_t>(m0.input().size()));
  std::vector<MonVal> s(d.size());
  for (int e = 0; e < m0.states().size(); ++e) {
    for (int a = 0; a < m0.input().size(); ++a) {
      size_t slot = static_cast<size_t>(e) * static_cast<size_t>(m0.input().size()) +
                    static_cast<size_t>(a);
      d[slot] = m0.d(e, a);
      s[slot] = MonVal{m0.s(e, a)};
    }
  }
  return MonoidMealyMachine("K(" + m0.name() + ")", m0.states(), std::move(in),
                            std::move(out), std::move(d), std::move(s));
}

RoundTripReport verify_hk(const MealyMachine& m0, const FinMonoid& target) {
  MonoidMealyMachine k = k_extend(m0, target);
  MealyMachine h = h_restrict(k);
  RoundTripReport r;
  if (!(h.states() == m0.states() && h.input() == m0.input() && h.output() == m0.output())) {
    r.ok = false;
    r.detail = "HK changed the underlying sets";
    return r;
  }
  for (int e = 0; e < m0.states().size(); ++e) {
    for (int a = 0; a < m0.input().size(); ++a) {
      if (h.d(e, a) != m0.d(e, a) || h.s(e, a) != m0.s(e, a)) {
        r.ok = false;
        r.detail = "HK disagrees with the original at (" + m0.states().label(e) + ", " +
                   m0.input().label(a) + ")";
        return r;
      }
    }
  }
  return r;
}

RoundTripReport verify_kh(const MonoidMealyMachine& m, int bound) {
  MealyMachine m0 = h_restrict(m);
  MonoidMealyMachine back = m.output().is_free() ? fugal_extension(m0)
                                                 : k_extend(m0, m.output().finite());
  RoundTripReport r;
  auto words = words_up_to(m.input().symbols().size(), bound);
  for (int e = 0; e < m.states().size(); ++e) {
    for (const auto& w : words) {
      if (m.act(e, w) != back.act(e, w) || m.out(e, w) != back.out(e, w)) {
        r.ok = false;
        r.detail = "KH disagrees with the original at state " + m.states().label(e) +
                   " on a word of length " + std::to_string(w.size());
        return r;
      }
    }
  }
  return r;
}

MorphismReport check_monoid_machine_morphism(const FinFn& f, const MonoidMealyMachine& m,
                                             const MonoidMealyMachine& m2,
                                             std::optional<int> bound) {
  if (f.dom() != m.states() || f.cod() != m2.states()) {
    throw TypeError("monoid machine morphism: map must go between the state sets");
  }
  if (!(m.input() == m2.input()) || !(m.output() == m2.output())) {
    throw TypeError("monoid machine morphism: machines must share input and output monoids");
  }
  std::vector<MonVal> values;
  if (m.input().is_free()) {
    if (!bound) {
      throw UsageError("monoid machine morphism: a word bound is required for a free input");
    }
    values = words_up_to(m.input().symbols().size(), *bound);
  } else {
    for (int x = 0; x < m.input().symbols().size(); ++x) values.push_back(MonVal{x});
  }
  for (int e = 0; e < m.states().size(); ++e) {
    for (const auto& v : values) {
      if (m2.act(f(e), v) != f(m.act(e, v))) {
        MorphismReport r;
        r.ok = false;
        r.equation = 'd';
        r.state = e;
        r.detail = "d-equation fails at (" + m.states().label(e) + ", " +
                   m.input().show(v) + ")";
        return r;
      }
      if (m2.out(f(e), v) != m.out(e, v)) {
        MorphismReport r;
        r.ok = false;
        r.equation = 's';
        r.state = e;
        r.detail = "s-equation fails at (" + m.states().label(e) + ", " +
                   m.input().show(v) + ")";
        return r;
      }
    }
  }
  return {};
}

} // namespace fugue
