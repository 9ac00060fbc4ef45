#pragma once

#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "fugue/finset.hpp"

namespace fugue {

/// A finite monoid given by its full multiplication table. The table may be
/// partial at construction time; totality and the monoid laws are the
/// business of check_monoid_laws (the document loader runs it on load).
class FinMonoid {
public:
  FinMonoid() = default;
  FinMonoid(std::string name, FinSet carrier, const std::string& unitLabel,
            const std::vector<std::tuple<std::string, std::string, std::string>>& mulEntries);
  /// Table form: mul[a * n + b] = a*b, all entries present.
  FinMonoid(std::string name, FinSet carrier, int unit, std::vector<int> mul);

  const std::string& name() const { return name_; }
  const FinSet& carrier() const { return carrier_; }
  int unit() const { return unit_; }
  bool total() const;
  /// MalformedInputError when the entry is missing from the table.
  int mul(int a, int b) const;

  bool operator==(const FinMonoid& other) const {
    return carrier_ == other.carrier_ && unit_ == other.unit_ && mul_ == other.mul_;
  }

private:
  std::string name_;
  FinSet carrier_;
  int unit_ = -1;
  std::vector<int> mul_; // -1 marks a missing entry
};

struct MonoidLawReport {
  enum class Law { Totality, Unit, Assoc };
  bool ok = true;
  Law law = Law::Unit;
  std::vector<std::string> witness; // unit: the two factors; assoc: the triple
  std::string detail;
};

/// Decides the monoid laws exhaustively; reports the first violation in
/// iteration order (unit checks first, then associativity triples).
/// Preconditions: nonempty carrier; a partial table is a MalformedInputError.
MonoidLawReport check_monoid_laws(const FinMonoid& m);

/// The free monoid on a generator set, kept symbolic: elements are Words,
/// multiplication is concatenation, the unit is the empty word.
struct FreeMonoidHandle {
  FinSet generators;
  bool operator==(const FreeMonoidHandle& other) const {
    return generators == other.generators;
  }
};

/// A monoid element in a form shared by both cases: indices into the carrier
/// (always exactly one) for a finite monoid, a generator-index word for a
/// free one.
using MonVal = std::vector<int>;

/// Either a finite monoid or a free monoid handle, with a uniform value API.
class MonoidDesc {
public:
  MonoidDesc() = default;
  explicit MonoidDesc(FinMonoid m) : repr_(std::move(m)) {}
  explicit MonoidDesc(FreeMonoidHandle h) : repr_(std::move(h)) {}

  bool is_free() const { return std::holds_alternative<FreeMonoidHandle>(repr_); }
  const FinMonoid& finite() const;
  const FreeMonoidHandle& free_handle() const;
  /// Carrier of a finite monoid, generators of a free one.
  const FinSet& symbols() const;

  MonVal unit() const;
  MonVal mul(const MonVal& a, const MonVal& b) const;
  /// Singleton value for a symbol (carrier element resp. one-letter word).
  MonVal of_symbol(int sym) const { return MonVal{sym}; }
  bool valid(const MonVal& v) const;
  std::string show(const MonVal& v) const;

  bool operator==(const MonoidDesc& other) const;

private:
  std::variant<FinMonoid, FreeMonoidHandle> repr_;
};

FinMonoid cyclic_monoid(int n);        // Z/n additive on labels "0".."n-1"
FinMonoid multiplicative_z2();         // {1, g}, g*g = 1
FinMonoid idempotent_monoid2();        // {1, z}, z*z = z
FinMonoid trivial_monoid();            // {1}

} // namespace fugue
