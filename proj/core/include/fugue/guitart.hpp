#pragma once

#include <optional>
#include <string>

#include "fugue/fincat.hpp"
#include "fugue/fugal.hpp"

namespace fugue {

/// A span of categories whose left leg is a discrete opfibration; the
/// constructor validates both the shared apex and the opfibration property.
struct GuitartSpan {
  CatFunctor left;  // p : apex -> base
  CatFunctor right; // S : apex -> target
  GuitartSpan(CatFunctor left, CatFunctor right);
  const FinCat& apex() const { return left.dom(); }
  const FinCat& base() const { return left.cod(); }
  const FinCat& target() const { return right.cod(); }
};

struct TranslationResult {
  FinCat cat;            // objects: the states; morphisms: (state, monoid element)
  CatFunctor projection; // to monoid_as_category(M); a discrete opfibration
};

/// Translation category of a monoid action d : E x M -> E (the category of
/// elements of the action): a morphism e -> d(e, m) for every m, composing
/// through the multiplication.
TranslationResult translation_category(const FinSet& states, const FinMonoid& m,
                                       const FinFn& action);
/// Overload on a finite-input monoid machine (its d is an action by
/// construction).
TranslationResult translation_category(const MonoidMealyMachine& m);

struct SigmaResult {
  enum class Status { Ok, UnitFailure, CompositionFailure };
  Status status = Status::Ok;
  std::optional<CatFunctor> functor; // present when status == Ok
  int state = -1;
  MonVal m, m2; // composition failure data (the fugality counterexample)
  std::string detail;
};

/// The output functor Sigma : E[d] -> B(N) of a finite monoid machine;
/// functoriality on composites is exactly the fugality equation, so a
/// non-fugal machine yields that counterexample. Identity preservation
/// (s(e, 1) = 1) is reported separately: fugality alone only forces s(e, 1)
/// to be idempotent.
SigmaResult sigma_functor(const MonoidMealyMachine& m);

/// The span B(M) <- E[d] -> B(N) of a fugal machine; PreconditionError when
/// sigma_functor does not produce a functor.
GuitartSpan pi_span(const MonoidMealyMachine& m);

/// Span composition by strict pullback; TypeError when the middle category
/// does not match.
GuitartSpan compose_spans(const GuitartSpan& sp1, const GuitartSpan& sp2);

struct PiReport {
  bool ok = true;
  std::string detail;
};

/// Builds Pi(m1), Pi(m2), their pullback composite, and Pi(m2 <> m1), then
/// checks the canonical comparison (e, f) -> (f, e)-state is an isomorphism
/// of categories commuting with both legs.
PiReport verify_pi_functoriality(const MonoidMealyMachine& m1,
                                 const MonoidMealyMachine& m2);

struct MacCellReport {
  bool ok = true;
  std::string which; // "p-triangle" | "s-triangle" | "opcartesian"
  int obj = -1, mor = -1;
  std::string detail;
};

/// 2-cell check in the span bicategory: both triangles commute and H maps
/// unique lifts to unique lifts.
MacCellReport check_mac_2cell(const CatFunctor& h, const GuitartSpan& sp1,
                              const GuitartSpan& sp2);

/// The apex functor induced by a machine morphism f between finite monoid
/// machines: f on objects, (e, m) -> (f e, m) on morphisms.
CatFunctor induced_mac_2cell(const FinFn& f, const MonoidMealyMachine& m,
                             const MonoidMealyMachine& m2);

} // namespace fugue
