#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fugue/fugal.hpp"
#include "fugue/machine.hpp"
#include "fugue/rel.hpp"
#include "fugue/setfunctor.hpp"

namespace fugue {

/// Deterministic RNG wrapper. Avoids std distributions so that a fixed seed
/// yields the same stream everywhere.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  /// Uniform in [0, n).
  int uniform(int n) { return static_cast<int>(eng_() % static_cast<uint64_t>(n)); }
  bool coin() { return uniform(2) == 1; }

private:
  std::mt19937_64 eng_;
};

FinSet numbered_set(const std::string& name, const std::string& prefix, int size);

/// The workhorse examples: the xor machine on {0,1} (d = s = exclusive or)
/// and the one-state negation mapper.
MealyMachine xor_machine();
MealyMachine not_machine();

/// The machine with states relabelled along a permutation of indices;
/// the permutation is a machine morphism onto the result.
MealyMachine permuted_machine(const MealyMachine& m, const std::vector<int>& perm);

/// A random Mealy machine with uniformly drawn sizes in [1, maxStates] etc.
MealyMachine random_mealy(Rng& rng, int maxStates, int maxIn, int maxOut);
/// A composable pair (m2 after m1) with all carriers in [1, maxSize].
std::pair<MealyMachine, MealyMachine> random_composable_pair(Rng& rng, int maxSize);
/// A random machine whose output alphabet is exactly the carrier of m.
MealyMachine random_mealy_into(Rng& rng, int maxStates, int maxIn, const FinMonoid& m);

Rel random_rel(Rng& rng, const FinSet& src, const FinSet& dst);

/// All actions d : E x M -> E of a finite monoid on a state set, as flat
/// symbol-indexed tables.
std::vector<std::vector<int>> enumerate_actions(const FinSet& states, const FinMonoid& m);
/// All fugal machines over (m, n) with the given states: every action paired
/// with every output table passing the fugality filter.
std::vector<MonoidMealyMachine> enumerate_fugal_machines(const FinSet& states,
                                                         const FinMonoid& m,
                                                         const FinMonoid& n);

/// A random set-valued functor on a finite category: object sizes in
/// [minSize, maxSize], morphism images drawn by closing a random generator
/// assignment under the relations that already hold in the category. Returns
/// nothing when the random draw violates functoriality (caller retries).
std::optional<SetFunctor> try_random_set_functor(Rng& rng, const FinCat& cat, int minSize,
                                                 int maxSize);

} // namespace fugue
