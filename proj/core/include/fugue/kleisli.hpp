#pragma once

#include <string>
#include <vector>

#include "fugue/machine.hpp"

namespace fugue {

/// A nondeterministic Mealy machine: d and s assign to every (state, letter)
/// a subset of the states resp. of the outputs (possibly empty). Subsets are
/// kept as sorted index vectors.
class PowersetMealy {
public:
  PowersetMealy() = default;
  PowersetMealy(std::string name, FinSet states, FinSet input, FinSet output,
                std::vector<std::vector<int>> d, std::vector<std::vector<int>> s);

  const std::string& name() const { return name_; }
  const FinSet& states() const { return states_; }
  const FinSet& input() const { return input_; }
  const FinSet& output() const { return output_; }
  const std::vector<int>& d(int e, int a) const { return d_[idx(e, a)]; }
  const std::vector<int>& s(int e, int a) const { return s_[idx(e, a)]; }

  bool operator==(const PowersetMealy& other) const {
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
  std::vector<std::vector<int>> d_, s_;
};

/// Unit of the powerset monad applied to the tables: all images singletons.
PowersetMealy lift_deterministic(const MealyMachine& m);

/// The powerset of a set, one atom "{a,b}" per subset, bitmask order.
FinSet powerset(const FinSet& s);

/// Deterministic expansion over the powersets: states P(E), input P(I),
/// output P(O), with d(S, T) the union of all one-step images. Sets larger
/// than maxBits elements are refused (the tables grow as 4^bits).
MealyMachine expand(const PowersetMealy& n, int maxBits = 10);

struct NdStep {
  std::vector<int> states;  // subset reached after the step
  std::vector<int> outputs; // subset emitted at the step
};

/// Stepwise image of a start subset under singleton input letters.
std::vector<NdStep> run_nondeterministic(const PowersetMealy& n,
                                         const std::vector<int>& start,
                                         const std::vector<int>& letters);

/// Kleisli 2-cell check for a plain function between state sets:
/// d2(f e, a) = { f x : x in d(e, a) } and s2(f e, a) = s(e, a).
MorphismReport check_kleisli_morphism(const FinFn& f, const PowersetMealy& n,
                                      const PowersetMealy& n2);

} // namespace fugue
