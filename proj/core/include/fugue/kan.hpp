#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fugue/setfunctor.hpp"

namespace fugue {

/// A monad on an object of the 2-category of categories: an endofunctor T
/// with unit and multiplication components chosen among the morphisms of the
/// underlying category. Use make_monad_cell to get a validated value.
struct CatMonadCell {
  CatFunctor t;
  std::vector<int> eta; // per object c: a morphism c -> T c
  std::vector<int> mu;  // per object c: a morphism T(T c) -> T c
};

struct MonadLawReport {
  bool ok = true;
  std::string detail;
};

MonadLawReport check_monad_laws(const CatFunctor& t, const std::vector<int>& eta,
                                const std::vector<int>& mu);
/// PreconditionError when the laws fail.
CatMonadCell make_monad_cell(CatFunctor t, std::vector<int> eta, std::vector<int> mu);

/// The pointwise right Kan extension of O along an endofunctor T. An element
/// of (Ran O)(c) is a natural family assigning to every slot (x, f : c -> Tx)
/// an element of O(x); the families are enumerated as the equaliser inside
/// the finite product of powers and carry content-derived atom labels.
class RanExtension {
public:
  struct Slot {
    int obj; // x
    int mor; // f : c -> T x
  };

  const SetFunctor& functor() const { return fn_; }
  const std::vector<Slot>& slots(int obj) const { return slots_.at(static_cast<size_t>(obj)); }
  /// Values of the family behind element elem of (Ran O)(obj), per slot.
  const std::vector<int>& family(int obj, int elem) const {
    return families_.at(static_cast<size_t>(obj)).at(static_cast<size_t>(elem));
  }
  /// Value of a family at a concrete slot (x, f).
  int eval(int obj, int elem, int x, int f) const;

  friend RanExtension ran_along(const CatFunctor& t, const SetFunctor& o, long long cap);

private:
  SetFunctor fn_;
  std::vector<std::vector<Slot>> slots_;
  std::vector<std::vector<std::vector<int>>> families_;
};

/// ResourceError once a component product exceeds cap candidates.
RanExtension ran_along(const CatFunctor& t, const SetFunctor& o, long long cap = 1'000'000);

/// Machines valued in functor categories: state, input and output functors
/// with the structure transformations of the corresponding shape.
struct CatMooreMachine {
  SetFunctor e;
  CatFunctor i;
  SetFunctor o;
  NatTrans delta; // E.i => E
  NatTrans sigma; // E => O
};

struct CatMealyMachine {
  SetFunctor e;
  CatFunctor i;
  SetFunctor o;
  NatTrans delta; // E.i => E
  NatTrans sigma; // E.i => O
};

struct MonadMachines {
  RanExtension carrier;
  CatMooreMachine moore;
  CatMealyMachine mealy;
};

/// The machine carried by Ran_T O, with input functor i compared into T by
/// kappa (one morphism i(c) -> T(c) per object, natural in c):
///   sigma (Moore) evaluates a family at the monad unit,
///   delta precomposes with mu . T(f) . kappa,
///   sigma (Mealy) evaluates at kappa itself.
MonadMachines build_machine_from_monad(const CatMonadCell& monad, const SetFunctor& o,
                                       const CatFunctor& i, const std::vector<int>& kappa,
                                       long long cap = 1'000'000);

struct UpReport {
  bool ok = true;
  long long mediators = 0;
  std::optional<NatTrans> mediator;
  std::string detail;
};

/// Universal property of the right Kan extension: among all natural
/// transformations E => Ran_T O, exactly one must satisfy
/// counit . (phi * T) = gamma, where gamma : E(T c) -> O(c) is natural and
/// the counit evaluates a family at the identity of T c.
UpReport check_ran_universal_property(const CatFunctor& t, const SetFunctor& o,
                                      const SetFunctor& e, const NatTrans& gamma,
                                      long long cap = 1'000'000);

} // namespace fugue
