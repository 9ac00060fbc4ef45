#include "fugue/machine.hpp"

#include <tuple>

namespace fugue {

namespace {

void check_table(const std::string& name, const char* which, const std::vector<int>& t,
                 int rows, int cols, int codSize) {
  if (static_cast<int>(t.size()) != rows * cols) {
    throw MalformedInputError("machine '" + name + "': " + which + " table has " +
                              std::to_string(t.size()) + " entries, expected " +
                              std::to_string(rows * cols));
  }
  for (int v : t) {
    if (v < 0 || v >= codSize) {
      throw MalformedInputError("machine '" + name + "': " + which +
                                " table entry out of range");
    }
  }
}

std::vector<int> table_from_triples(
    const std::string& name, const char* which, const FinSet& states, const FinSet& input,
    const FinSet& cod,
    const std::vector<std::tuple<std::string, std::string, std::string>>& entries) {
  std::vector<int> t(static_cast<size_t>(states.size()) * static_cast<size_t>(input.size()),
                     -1);
  for (const auto& [e, a, v] : entries) {
    size_t slot = static_cast<size_t>(states.index(e)) * static_cast<size_t>(input.size()) +
                  static_cast<size_t>(input.index(a));
    if (t[slot] != -1) {
      throw MalformedInputError("machine '" + name + "': duplicate " + which +
                                " entry for (" + e + ", " + a + ")");
    }
    t[slot] = cod.index(v);
  }
  for (int e = 0; e < states.size(); ++e) {
    for (int a = 0; a < input.size(); ++a) {
      if (t[static_cast<size_t>(e) * static_cast<size_t>(input.size()) +
            static_cast<size_t>(a)] == -1) {
        throw MalformedInputError("machine '" + name + "': " + which + " has no entry for (" +
                                  states.label(e) + ", " + input.label(a) + ")");
      }
    }
  }
  return t;
}

} // namespace

MealyMachine::MealyMachine(std::string name, FinSet states, FinSet input, FinSet output,
                           std::vector<int> d, std::vector<int> s)
    : name_(std::move(name)), states_(std::move(states)), input_(std::move(input)),
      output_(std::move(output)), d_(std::move(d)), s_(std::move(s)) {
  check_table(name_, "d", d_, states_.size(), input_.size(), states_.size());
  check_table(name_, "s", s_, states_.size(), input_.size(), output_.size());
}

MealyMachine MealyMachine::from_labels(
    std::string name, FinSet states, FinSet input, FinSet output,
    const std::vector<std::tuple<std::string, std::string, std::string>>& dEntries,
    const std::vector<std::tuple<std::string, std::string, std::string>>& sEntries) {
  auto d = table_from_triples(name, "d", states, input, states, dEntries);
  auto s = table_from_triples(name, "s", states, input, output, sEntries);
  return MealyMachine(std::move(name), std::move(states), std::move(input),
                      std::move(output), std::move(d), std::move(s));
}

MooreMachine::MooreMachine(std::string name, FinSet states, FinSet input, FinSet output,
                           std::vector<int> d, std::vector<int> s)
    : name_(std::move(name)), states_(std::move(states)), input_(std::move(input)),
      output_(std::move(output)), d_(std::move(d)), s_(std::move(s)) {
  check_table(name_, "d", d_, states_.size(), input_.size(), states_.size());
  check_table(name_, "s", s_, states_.size(), 1, output_.size());
}

MealyMachine identity_machine(const FinSet& alphabet) {
  FinSet states("pt", {"*"});
  std::vector<int> d(static_cast<size_t>(alphabet.size()), 0);
  std::vector<int> s(static_cast<size_t>(alphabet.size()));
  for (int a = 0; a < alphabet.size(); ++a) s[static_cast<size_t>(a)] = a;
  return MealyMachine("id_" + alphabet.name(), std::move(states), alphabet, alphabet,
                      std::move(d), std::move(s));
}

RunResult run_mealy(const MealyMachine& m, int e0, const std::vector<int>& letters) {
  RunResult r;
  r.final_state = e0;
  r.output.reserve(letters.size());
  for (int a : letters) {
    r.output.push_back(m.s(r.final_state, a));
    r.final_state = m.d(r.final_state, a);
  }
  return r;
}

std::pair<std::string, Word> run_mealy(const MealyMachine& m, const std::string& start,
                                       const Word& w) {
  if (w.alphabet() != m.input()) {
    throw MalformedInputError("run: word alphabet does not match the machine input");
  }
  RunResult r = run_mealy(m, m.states().index(start), w.letters());
  return {m.states().label(r.final_state), Word(m.output(), std::move(r.output))};
}

std::vector<int> run_moore(const MooreMachine& m, int e0, const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size() + 1);
  int e = e0;
  out.push_back(m.s(e));
  for (int a : letters) {
    e = m.d(e, a);
    out.push_back(m.s(e));
  }
  return out;
}

MealyMachine compose_diamond(const MealyMachine& m2, const MealyMachine& m1) {
  if (m1.output() != m2.input()) {
    throw TypeError("compose_diamond: output alphabet of '" + m1.name() +
                    "' does not match input alphabet of '" + m2.name() + "'");
  }
  const FinSet& f = m2.states();
  const FinSet& e = m1.states();
  FinSet states = product_set(f, e);
  const FinSet& input = m1.input();
  const FinSet& output = m2.output();
  std::vector<int> d(static_cast<size_t>(states.size()) * static_cast<size_t>(input.size()));
  std::vector<int> s(d.size());
  for (int fi = 0; fi < f.size(); ++fi) {
    for (int ei = 0; ei < e.size(); ++ei) {
      int st = pair_index(f, e, fi, ei);
      for (int a = 0; a < input.size(); ++a) {
        int mid = m1.s(ei, a);
        size_t slot = static_cast<size_t>(st) * static_cast<size_t>(input.size()) +
                      static_cast<size_t>(a);
        d[slot] = pair_index(f, e, m2.d(fi, mid), m1.d(ei, a));
        s[slot] = m2.s(fi, mid);
      }
    }
  }
  return MealyMachine(m2.name() + "<>" + m1.name(), std::move(states), input, output,
                      std::move(d), std::move(s));
}

namespace {

MorphismReport morphism_fail(char eq, const FinSet& states, const FinSet& input, int e,
                             int a, const std::string& lhs, const std::string& rhs) {
  MorphismReport r;
  r.ok = false;
  r.equation = eq;
  r.state = e;
  r.letter = a;
  r.detail = std::string(1, eq) + "-equation fails at (" + states.label(e) + ", " +
             input.label(a) + "): " + lhs + " != " + rhs;
  return r;
}

} // namespace

MorphismReport check_machine_morphism(const FinFn& f, const MealyMachine& m,
                                      const MealyMachine& m2) {
  if (f.dom() != m.states() || f.cod() != m2.states()) {
    throw TypeError("machine morphism: map must go from source states to target states");
  }
  if (m.input() != m2.input() || m.output() != m2.output()) {
    throw TypeError("machine morphism: machines must share input and output alphabets");
  }
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < m.input().size(); ++a) {
      if (m2.d(f(e), a) != f(m.d(e, a))) {
        return morphism_fail('d', m.states(), m.input(), e, a,
                             m2.states().label(m2.d(f(e), a)),
                             m2.states().label(f(m.d(e, a))));
      }
      if (m2.s(f(e), a) != m.s(e, a)) {
        return morphism_fail('s', m.states(), m.input(), e, a,
                             m2.output().label(m2.s(f(e), a)),
                             m.output().label(m.s(e, a)));
      }
    }
  }
  return {};
}

MorphismReport check_machine_morphism(const FinFn& f, const MooreMachine& m,
                                      const MooreMachine& m2) {
  if (f.dom() != m.states() || f.cod() != m2.states()) {
    throw TypeError("machine morphism: map must go from source states to target states");
  }
  if (m.input() != m2.input() || m.output() != m2.output()) {
    throw TypeError("machine morphism: machines must share input and output alphabets");
  }
  for (int e = 0; e < m.states().size(); ++e) {
    if (m2.s(f(e)) != m.s(e)) {
      MorphismReport r;
      r.ok = false;
      r.equation = 's';
      r.state = e;
      r.detail = "s-equation fails at " + m.states().label(e);
      return r;
    }
    for (int a = 0; a < m.input().size(); ++a) {
      if (m2.d(f(e), a) != f(m.d(e, a))) {
        return morphism_fail('d', m.states(), m.input(), e, a,
                             m2.states().label(m2.d(f(e), a)),
                             m2.states().label(f(m.d(e, a))));
      }
    }
  }
  return {};
}

MachineMorphism::MachineMorphism(MealyMachine src, MealyMachine dst, FinFn f)
    : src(std::move(src)), dst(std::move(dst)), f(std::move(f)) {
  MorphismReport r = check_machine_morphism(this->f, this->src, this->dst);
  if (!r.ok) throw InvariantViolation("not a machine morphism: " + r.detail);
}

FinFn tensor_morphisms(const FinFn& f2, const FinFn& f1) {
  FinSet dom = product_set(f2.dom(), f1.dom());
  FinSet cod = product_set(f2.cod(), f1.cod());
  std::vector<int> table(static_cast<size_t>(dom.size()));
  for (int i = 0; i < f2.dom().size(); ++i) {
    for (int j = 0; j < f1.dom().size(); ++j) {
      table[static_cast<size_t>(pair_index(f2.dom(), f1.dom(), i, j))] =
          pair_index(f2.cod(), f1.cod(), f2(i), f1(j));
    }
  }
  return FinFn(std::move(dom), std::move(cod), std::move(table));
}

FinFn reassociation(const FinSet& f, const FinSet& e, const FinSet& d) {
  FinSet fe = product_set(f, e);
  FinSet ed = product_set(e, d);
  FinSet lhs = product_set(fe, d);
  FinSet rhs = product_set(f, ed);
  std::vector<int> table(static_cast<size_t>(lhs.size()));
  for (int fi = 0; fi < f.size(); ++fi) {
    for (int ei = 0; ei < e.size(); ++ei) {
      for (int di = 0; di < d.size(); ++di) {
        int src = pair_index(fe, d, pair_index(f, e, fi, ei), di);
        int dst = pair_index(f, ed, fi, pair_index(e, d, ei, di));
        table[static_cast<size_t>(src)] = dst;
      }
    }
  }
  return FinFn(std::move(lhs), std::move(rhs), std::move(table));
}

} // namespace fugue
