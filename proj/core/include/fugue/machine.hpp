#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fugue/finset.hpp"

namespace fugue {

/// A Mealy machine (E, d, s) over finite input/output alphabets:
/// d : E x I -> E, s : E x I -> O, both total and tabulated.
class MealyMachine {
public:
  MealyMachine() = default;
  MealyMachine(std::string name, FinSet states, FinSet input, FinSet output,
               std::vector<int> d, std::vector<int> s);
  static MealyMachine from_labels(
      std::string name, FinSet states, FinSet input, FinSet output,
      const std::vector<std::tuple<std::string, std::string, std::string>>& dEntries,
      const std::vector<std::tuple<std::string, std::string, std::string>>& sEntries);

  const std::string& name() const { return name_; }
  const FinSet& states() const { return states_; }
  const FinSet& input() const { return input_; }
  const FinSet& output() const { return output_; }
  int d(int e, int a) const { return d_[idx(e, a)]; }
  int s(int e, int a) const { return s_[idx(e, a)]; }

  bool operator==(const MealyMachine& other) const {
    return states_ == other.states_ && input_ == other.input_ &&
           output_ == other.output_ && d_ == other.d_ && s_ == other.s_;
  }

private:
  size_t idx(int e, int a) const {
    return static_cast<size_t>(e) * static_cast<size_t>(input_.size()) +
           static_cast<size_t>(a);
  }
  std::string name_;
  FinSet states_, input_, output_;
  std::vector<int> d_, s_;
};

/// A Moore machine: as above but s : E -> O depends on the state only.
class MooreMachine {
public:
  MooreMachine() = default;
  MooreMachine(std::string name, FinSet states, FinSet input, FinSet output,
               std::vector<int> d, std::vector<int> s);

  const std::string& name() const { return name_; }
  const FinSet& states() const { return states_; }
  const FinSet& input() const { return input_; }
  const FinSet& output() const { return output_; }
  int d(int e, int a) const {
    return d_[static_cast<size_t>(e) * static_cast<size_t>(input_.size()) +
              static_cast<size_t>(a)];
  }
  int s(int e) const { return s_[static_cast<size_t>(e)]; }

  bool operator==(const MooreMachine& other) const {
    return states_ == other.states_ && input_ == other.input_ &&
           output_ == other.output_ && d_ == other.d_ && s_ == other.s_;
  }

private:
  std::string name_;
  FinSet states_, input_, output_;
  std::vector<int> d_, s_;
};

/// The identity 1-cell on an alphabet: one state "*", s(*, a) = a.
MealyMachine identity_machine(const FinSet& alphabet);

struct RunResult {
  int final_state = 0;
  std::vector<int> output; // same length as the input word
};

/// Runs from state e0 on letter indices; the letters are assumed in range.
RunResult run_mealy(const MealyMachine& m, int e0, const std::vector<int>& letters);
/// Label-level run; validates the start state and the word's alphabet.
std::pair<std::string, Word> run_mealy(const MealyMachine& m, const std::string& start,
                                       const Word& w);
/// Moore trace: outputs of the visited states, length |w| + 1.
std::vector<int> run_moore(const MooreMachine& m, int e0, const std::vector<int>& letters);

/// Series composition m2 after m1 (output of m1 feeds m2). The composite
/// state set is m2-states x m1-states, in that order.
MealyMachine compose_diamond(const MealyMachine& m2, const MealyMachine& m1);

struct MorphismReport {
  bool ok = true;
  char equation = ' ';    // 'd' or 's'
  int state = -1, letter = -1;
  std::string detail;
};

/// Checks the two commutation equations of a Mealy machine morphism
/// f : states(m) -> states(m2): d2(f e, a) = f(d e a) and s2(f e, a) = s(e, a).
MorphismReport check_machine_morphism(const FinFn& f, const MealyMachine& m,
                                      const MealyMachine& m2);
MorphismReport check_machine_morphism(const FinFn& f, const MooreMachine& m,
                                      const MooreMachine& m2);

/// A validated machine morphism; the constructor rejects non-morphisms.
struct MachineMorphism {
  MealyMachine src, dst;
  FinFn f;
  MachineMorphism(MealyMachine src, MealyMachine dst, FinFn f);
};

/// f2 x f1 on (state set of f2) x (state set of f1); a machine morphism
/// between the diamond composites whenever f1, f2 are machine morphisms.
FinFn tensor_morphisms(const FinFn& f2, const FinFn& f1);

/// Reassociation bijection (FxE)xD -> Fx(ExD) between composite state sets.
FinFn reassociation(const FinSet& f, const FinSet& e, const FinSet& d);

} // namespace fugue
