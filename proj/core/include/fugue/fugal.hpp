#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fugue/machine.hpp"
#include "fugue/monoid.hpp"

namespace fugue {

/// A Mealy machine between monoids. When the input monoid is finite, d and s
/// are full tables over states x carrier and d is required to be a monoid
/// action (checked exhaustively at construction). When the input monoid is
/// free, the machine is given intensionally by generator tables: d extends to
/// the iterated action d*, and s extends along words by
///   s(e, [])      = unit
///   s(e, a :: as) = s(e, a) * s(d(e, a), as)
/// which is the fold that concatenation (free output) and multiplication
/// (finite output) share.
class MonoidMealyMachine {
public:
  MonoidMealyMachine() = default;
  MonoidMealyMachine(std::string name, FinSet states, MonoidDesc input, MonoidDesc output,
                     std::vector<int> d, std::vector<MonVal> s);

  const std::string& name() const { return name_; }
  const FinSet& states() const { return states_; }
  const MonoidDesc& input() const { return input_; }
  const MonoidDesc& output() const { return output_; }

  /// Raw table access, indexed by an input symbol (carrier element when the
  /// input monoid is finite, generator when it is free).
  int d_at(int e, int sym) const { return d_[idx(e, sym)]; }
  const MonVal& s_at(int e, int sym) const { return s_[idx(e, sym)]; }

  /// d(e, m) for an arbitrary input value.
  int act(int e, const MonVal& m) const;
  /// s(e, m) for an arbitrary input value.
  MonVal out(int e, const MonVal& m) const;

  bool operator==(const MonoidMealyMachine& other) const {
    return states_ == other.states_ && input_ == other.input_ &&
           output_ == other.output_ && d_ == other.d_ && s_ == other.s_;
  }

private:
  size_t idx(int e, int sym) const {
    return static_cast<size_t>(e) * static_cast<size_t>(input_.symbols().size()) +
           static_cast<size_t>(sym);
  }
  std::string name_;
  FinSet states_;
  MonoidDesc input_, output_;
  std::vector<int> d_;
  std::vector<MonVal> s_;
};

/// Verdict of the fugality check s(e, m*m') = s(e, m) * s(d(e, m), m').
struct FugalWitness {
  MonoidMealyMachine machine;
  bool ok = true;
  int state = -1;
  MonVal m, m2;
  std::string detail;
};

/// Decides fugality exhaustively when the input monoid is finite; checks all
/// word pairs with |m| + |m'| <= bound when it is free (bound required then).
/// The first counterexample in iteration order (state, then m, then m',
/// words ordered by length then lexicographically) is reported.
FugalWitness is_fugal(const MonoidMealyMachine& m, std::optional<int> bound = std::nullopt);

/// The canonical lift of a set-machine to a machine between free monoids.
MonoidMealyMachine fugal_extension(const MealyMachine& m);

/// The identity machine over a monoid: one state, s(*, m) = m.
MonoidMealyMachine identity_monoid_machine(const MonoidDesc& m);

/// Diamond composition of monoid machines (same shape as the set-machine
/// case, evaluated through the monoid structure). Requires matching middle
/// monoids and inputs of the same kind.
MonoidMealyMachine compose_diamond(const MonoidMealyMachine& m2,
                                   const MonoidMealyMachine& m1);

struct FlatCompositionReport {
  bool ok = true;
  std::string state; // composite state label "f|e"
  std::vector<int> word;
  std::string detail;
};

/// Compares the extension of the composite against the composite of the
/// extensions on every state pair and every word of length <= bound.
FlatCompositionReport check_flat_preserves_composition(const MealyMachine& m2,
                                                       const MealyMachine& m1, int bound);

/// Restriction of a free-input machine to its generators. The output monoid
/// must be finite, or free with single-letter generator outputs.
MealyMachine h_restrict(const MonoidMealyMachine& m);

/// Extension of a set-machine whose output alphabet is the carrier of a
/// finite monoid: words act through d*, outputs fold through the monoid.
MonoidMealyMachine k_extend(const MealyMachine& m0, const FinMonoid& target);

struct RoundTripReport {
  bool ok = true;
  std::string detail;
};

/// HK = identity, exactly, on tables.
RoundTripReport verify_hk(const MealyMachine& m0, const FinMonoid& target);
/// KH = identity on every state and every word of length <= bound.
RoundTripReport verify_kh(const MonoidMealyMachine& m, int bound);

/// Machine morphism between monoid machines; exhaustive over the carrier for
/// finite inputs, over words of length <= bound for free ones.
MorphismReport check_monoid_machine_morphism(const FinFn& f, const MonoidMealyMachine& m,
                                             const MonoidMealyMachine& m2,
                                             std::optional<int> bound = std::nullopt);

/// Enumerates the words of length <= bound over an alphabet of n letters,
/// ordered by length then lexicographically.
std::vector<std::vector<int>> words_up_to(int n, int bound);

} // namespace fugue
