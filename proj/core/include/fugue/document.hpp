#pragma once

#include <optional>
#include <string>
#include <variant>

#include "fugue/fincat.hpp"
#include "fugue/fugal.hpp"
#include "fugue/intertwiner.hpp"
#include "fugue/kan.hpp"
#include "fugue/kleisli.hpp"
#include "fugue/machine.hpp"
#include "fugue/monoid.hpp"
#include "fugue/rel.hpp"
#include "fugue/setfunctor.hpp"

namespace fugue {

/// A user-supplied monad with an optional input cell (i, kappa); when the
/// input is absent it defaults to T itself with identity comparison.
struct MonadDocument {
  CatFunctor t;
  std::vector<int> eta, mu;
  std::optional<CatFunctor> input;
  std::vector<int> kappa;

  bool operator==(const MonadDocument& other) const {
    return t == other.t && eta == other.eta && mu == other.mu && input == other.input &&
           kappa == other.kappa;
  }
};

/// One parsed document: a kind tag plus exactly one core value. A "mealy"
/// document with `"nondeterministic": true` parses to a PowersetMealy.
struct Document {
  enum class Kind {
    Mealy,
    Moore,
    Monoid,
    MonoidMachine,
    Category,
    Functor,
    Relation,
    SetFunctorKind,
    Monad,
    IntertwinerKind,
    TwoCell,
  };
  Kind kind;
  std::variant<MealyMachine, PowersetMealy, MooreMachine, FinMonoid, MonoidMealyMachine,
               FinCat, CatFunctor, Rel, SetFunctor, MonadDocument, Intertwiner,
               IntertwinerTwoCell>
      value;

  template <typename T> const T& as() const {
    const T* p = std::get_if<T>(&value);
    if (!p) throw TypeError("document does not hold the requested kind");
    return *p;
  }
  template <typename T> bool holds() const { return std::holds_alternative<T>(value); }
};

bool document_equal(const Document& a, const Document& b);

/// Parses document text (defs resolve within the file; imports are only
/// available through load_document). Raises ParseError with a 1-based
/// position on syntax errors, UnresolvedReference for dangling names, and
/// InvariantViolation / MalformedInputError from the validators.
Document parse_document(const std::string& text);

/// Loads a document from a file, resolving "imports" relative to it.
Document load_document(const std::string& path);

/// Canonical serialisation: fixed key order, two-space indent, one trailing
/// newline. serialize(parse(x)) parses to an equal document.
std::string serialize_document(const Document& doc);

std::string kind_name(Document::Kind kind);

} // namespace fugue
