#include "fugue/kleisli.hpp"

#include <algorithm>

namespace fugue {

namespace {

void check_subset_table(const std::string& name, const char* which,
                        const std::vector<std::vector<int>>& t, size_t expected, int bound) {
  if (t.size() != expected) {
    throw MalformedInputError("machine '" + name + "': " + which + " table has wrong size");
  }
  for (const auto& sub : t) {
    int prev = -1;
    for (int v : sub) {
      if (v < 0 || v >= bound) {
        throw MalformedInputError("machine '" + name + "': " + which +
                                  " image element out of range");
      }
      if (v <= prev) {
        throw MalformedInputError("machine '" + name + "': " + which +
                                  " image must be a sorted set");
      }
      prev = v;
    }
  }
}

std::vector<int> union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace

PowersetMealy::PowersetMealy(std::string name, FinSet states, FinSet input, FinSet output,
                             std::vector<std::vector<int>> d, std::vector<std::vector<int>> s)
    : name_(std::move(name)), states_(std::move(states)), input_(std::move(input)),
      output_(std::move(output)), d_(std::move(d)), s_(std::move(s)) {
  size_t expected = static_cast<size_t>(states_.size()) * static_cast<size_t>(input_.size());
  check_subset_table(name_, "d", d_, expected, states_.size());
  check_subset_table(name_, "s", s_, expected, output_.size());
}

PowersetMealy lift_deterministic(const MealyMachine& m) {
  size_t n = static_cast<size_t>(m.states().size()) * static_cast<size_t>(m.input().size());
  std::vector<std::vector<int>> d(n), s(n);
  for (int e = 0; e < m.states().size(); ++e) {
    for (int a = 0; a < m.input().size(); ++a) {
      size_t slot = static_cast<size_t>(e) * static_cast<size_t>(m.input().size()) +
                    static_cast<size_t>(a);
      d[slot] = {m.d(e, a)};
      s[slot] = {m.s(e, a)};
    }
  }
  return PowersetMealy("L(" + m.name() + ")", m.states(), m.input(), m.output(),
                       std::move(d), std::move(s));
}

FinSet powerset(const FinSet& s) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(1) << s.size());
  for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
    std::string l = "{";
    bool first = true;
    for (int i = 0; i < s.size(); ++i) {
      if (mask & (1u << i)) {
        if (!first) l += ",";
        l += s.label(i);
        first = false;
      }
    }
    l += "}";
    labels.push_back(std::move(l));
  }
  return FinSet("P(" + s.name() + ")", std::move(labels));
}

MealyMachine expand(const PowersetMealy& n, int maxBits) {
  if (n.states().size() > maxBits || n.input().size() > maxBits ||
      n.output().size() > maxBits) {
    throw ResourceError("expand: powerset materialisation over " +
                        std::to_string(std::max({n.states().size(), n.input().size(),
                                                 n.output().size()})) +
                        " elements exceeds the limit of " + std::to_string(maxBits));
  }
  FinSet pe = powerset(n.states());
  FinSet pi = powerset(n.input());
  FinSet po = powerset(n.output());
  size_t tableSize = static_cast<size_t>(pe.size()) * static_cast<size_t>(pi.size());
  std::vector<int> d(tableSize), s(tableSize);
  for (unsigned se = 0; se < (1u << n.states().size()); ++se) {
    for (unsigned si = 0; si < (1u << n.input().size()); ++si) {
      unsigned dm = 0, sm = 0;
      for (int e = 0; e < n.states().size(); ++e) {
        if (!(se & (1u << e))) continue;
        for (int a = 0; a < n.input().size(); ++a) {
          if (!(si & (1u << a))) continue;
          for (int x : n.d(e, a)) dm |= 1u << x;
          for (int y : n.s(e, a)) sm |= 1u << y;
        }
      }
      size_t slot = static_cast<size_t>(se) * static_cast<size_t>(pi.size()) +
                    static_cast<size_t>(si);
      d[slot] = static_cast<int>(dm);
      s[slot] = static_cast<int>(sm);
    }
  }
  return MealyMachine(n.name() + "^e", std::move(pe), std::move(pi), std::move(po),
                      std::move(d), std::move(s));
}

std::vector<NdStep> run_nondeterministic(const PowersetMealy& n,
                                         const std::vector<int>& start,
                                         const std::vector<int>& letters) {
  for (int e : start) {
    if (e < 0 || e >= n.states().size()) {
      throw MalformedInputError("run: start state index out of range");
    }
  }
  std::vector<NdStep> trace;
  trace.reserve(letters.size());
  std::vector<int> current = start;
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  for (int a : letters) {
    NdStep step;
    for (int e : current) {
      step.states = union_sorted(step.states, n.d(e, a));
      step.outputs = union_sorted(step.outputs, n.s(e, a));
    }
    current = step.states;
    trace.push_back(std::move(step));
  }
  return trace;
}

MorphismReport check_kleisli_morphism(const FinFn& f, const PowersetMealy& n,
                                      const PowersetMealy& n2) {
  if (f.dom() != n.states() || f.cod() != n2.states()) {
    throw TypeError("kleisli morphism: map must go between the state sets");
  }
  if (n.input() != n2.input() || n.output() != n2.output()) {
    throw TypeError("kleisli morphism: machines must share input and output");
  }
  for (int e = 0; e < n.states().size(); ++e) {
    for (int a = 0; a < n.input().size(); ++a) {
      std::vector<int> image;
      for (int x : n.d(e, a)) image.push_back(f(x));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image != n2.d(f(e), a)) {
        MorphismReport r;
        r.ok = false;
        r.equation = 'd';
        r.state = e;
        r.letter = a;
        r.detail = "d-equation fails at (" + n.states().label(e) + ", " +
                   n.input().label(a) + ")";
        return r;
      }
      if (n.s(e, a) != n2.s(f(e), a)) {
        MorphismReport r;
        r.ok = false;
        r.equation = 's';
        r.state = e;
        r.letter = a;
        r.detail = "s-equation fails at (" + n.states().label(e) + ", " +
                   n.input().label(a) + ")";
        return r;
      }
    }
  }
  return {};
}

} // namespace fugue
