#include "fugue/finset.hpp"

#include <algorithm>

namespace fugue {

FinSet::FinSet(std::string name, std::vector<std::string> elements)
    : name_(std::move(name)), elems_(std::move(elements)) {
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i) {
    auto [it, fresh] = index_.emplace(elems_[static_cast<size_t>(i)], i);
    if (!fresh) {
      throw InvariantViolation("set '" + name_ + "': duplicate element '" +
                               elems_[static_cast<size_t>(i)] + "'");
    }
  }
}

std::optional<int> FinSet::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FinSet::index(std::string_view label) const {
  auto found = find(label);
  if (!found) {
    throw MalformedInputError("element '" + std::string(label) + "' is not in set '" +
                              name_ + "'");
  }
  return *found;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return a + "|" + b;
}

FinSet product_set(const FinSet& a, const FinSet& b) {
  std::vector<std::string> elems;
  elems.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      elems.push_back(pair_label(a.label(i), b.label(j)));
    }
  }
  return FinSet(a.name() + "x" + b.name(), std::move(elems));
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != dom_.size()) {
    throw MalformedInputError("function on '" + dom_.name() + "': table has " +
                              std::to_string(table_.size()) + " entries for " +
                              std::to_string(dom_.size()) + " elements");
  }
  for (int v : table_) {
    if (v < 0 || v >= cod_.size()) {
      throw MalformedInputError("function into '" + cod_.name() +
                                "': image index out of range");
    }
  }
}

FinFn FinFn::from_labels(FinSet dom, FinSet cod,
                         const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<int> table(static_cast<size_t>(dom.size()), -1);
  for (const auto& [x, y] : entries) {
    int i = dom.index(x);
    if (table[static_cast<size_t>(i)] != -1) {
      throw MalformedInputError("function table: duplicate entry for '" + x + "'");
    }
    table[static_cast<size_t>(i)] = cod.index(y);
  }
  for (int i = 0; i < dom.size(); ++i) {
    if (table[static_cast<size_t>(i)] == -1) {
      throw MalformedInputError("function table: no entry for '" + dom.label(i) + "'");
    }
  }
  return FinFn(std::move(dom), std::move(cod), std::move(table));
}

FinFn FinFn::identity(const FinSet& s) {
  std::vector<int> table(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) table[static_cast<size_t>(i)] = i;
  return FinFn(s, s, std::move(table));
}

const std::string& FinFn::map_label(std::string_view x) const {
  return cod_.label((*this)(dom_.index(x)));
}

bool FinFn::is_bijection() const {
  if (dom_.size() != cod_.size()) return false;
  std::vector<char> hit(static_cast<size_t>(cod_.size()), 0);
  for (int v : table_) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  return true;
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (f.cod() != g.dom()) {
    throw TypeError("compose: codomain of '" + f.cod().name() +
                    "' does not match domain '" + g.dom().name() + "'");
  }
  std::vector<int> table(static_cast<size_t>(f.dom().size()));
  for (int i = 0; i < f.dom().size(); ++i) table[static_cast<size_t>(i)] = g(f(i));
  return FinFn(f.dom(), g.cod(), std::move(table));
}

Word::Word(FinSet alphabet, std::vector<int> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (int a : letters_) {
    if (a < 0 || a >= alphabet_.size()) {
      throw MalformedInputError("word over '" + alphabet_.name() +
                                "': letter index out of range");
    }
  }
}

Word Word::from_labels(FinSet alphabet, const std::vector<std::string>& letters) {
  std::vector<int> ls;
  ls.reserve(letters.size());
  for (const auto& l : letters) ls.push_back(alphabet.index(l));
  return Word(std::move(alphabet), std::move(ls));
}

std::vector<std::string> Word::letter_labels() const {
  std::vector<std::string> out;
  out.reserve(letters_.size());
  for (int a : letters_) out.push_back(alphabet_.label(a));
  return out;
}

Word word_concat(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw TypeError("word_concat: words over different alphabets");
  }
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(letters));
}

} // namespace fugue
