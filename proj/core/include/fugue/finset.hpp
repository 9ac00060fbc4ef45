#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fugue/error.hpp"

namespace fugue {

/// A finite set of named atoms. Iteration order is the declaration order and
/// is stable; every "first counterexample" in the library refers to it.
/// Equality compares the element lists (order-sensitive); names are cosmetic.
class FinSet {
public:
  FinSet() = default;
  FinSet(std::string name, std::vector<std::string> elements);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  const std::string& label(int i) const { return elems_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& labels() const { return elems_; }

  std::optional<int> find(std::string_view label) const;
  /// Index of a label; throws MalformedInputError when absent.
  int index(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  bool operator==(const FinSet& other) const { return elems_ == other.elems_; }
  bool operator!=(const FinSet& other) const { return !(*this == other); }

private:
  std::string name_;
  std::vector<std::string> elems_;
  std::map<std::string, int, std::less<>> index_;
};

/// Cartesian product with pair labels "a|b", lexicographic iteration order
/// (left factor outermost).
FinSet product_set(const FinSet& a, const FinSet& b);

/// Index of the pair (i, j) inside product_set(a, b).
inline int pair_index(const FinSet& /*a*/, const FinSet& b, int i, int j) {
  return i * b.size() + j;
}
inline std::pair<int, int> unpair_index(const FinSet& /*a*/, const FinSet& b, int k) {
  return {k / b.size(), k % b.size()};
}
std::string pair_label(const std::string& a, const std::string& b);

/// A total function between finite sets, tabulated on the domain.
class FinFn {
public:
  FinFn() = default;
  FinFn(FinSet dom, FinSet cod, std::vector<int> table);

  /// Builds from (argument, value) label pairs; the table must be total.
  static FinFn from_labels(FinSet dom, FinSet cod,
                           const std::vector<std::pair<std::string, std::string>>& entries);
  static FinFn identity(const FinSet& s);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  int operator()(int i) const { return table_.at(static_cast<size_t>(i)); }
  const std::string& map_label(std::string_view x) const;
  const std::vector<int>& table() const { return table_; }

  bool is_bijection() const;

  bool operator==(const FinFn& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && table_ == other.table_;
  }
  bool operator!=(const FinFn& other) const { return !(*this == other); }

private:
  FinSet dom_;
  FinSet cod_;
  std::vector<int> table_;
};

/// g after f; TypeError unless cod(f) = dom(g).
FinFn compose(const FinFn& g, const FinFn& f);

/// A finite word over an alphabet, stored as letter indices.
class Word {
public:
  Word() = default;
  Word(FinSet alphabet, std::vector<int> letters);
  static Word from_labels(FinSet alphabet, const std::vector<std::string>& letters);

  const FinSet& alphabet() const { return alphabet_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  std::vector<std::string> letter_labels() const;

  bool operator==(const Word& other) const {
    return alphabet_ == other.alphabet_ && letters_ == other.letters_;
  }

private:
  FinSet alphabet_;
  std::vector<int> letters_;
};

/// Concatenation in the free monoid; TypeError on alphabet mismatch.
Word word_concat(const Word& u, const Word& v);

} // namespace fugue
