#pragma once

#include <string>
#include <vector>

#include "fugue/fincat.hpp"

namespace fugue {

/// A functor from a finite category to finite sets; the functor laws are
/// checked exhaustively at construction.
class SetFunctor {
public:
  SetFunctor() = default;
  SetFunctor(std::string name, FinCat dom, std::vector<FinSet> onObj,
             std::vector<FinFn> onMor);

  const std::string& name() const { return name_; }
  const FinCat& dom() const { return dom_; }
  const FinSet& at(int obj) const { return onObj_.at(static_cast<size_t>(obj)); }
  const FinFn& map(int mor) const { return onMor_.at(static_cast<size_t>(mor)); }

  bool operator==(const SetFunctor& other) const {
    return dom_ == other.dom_ && onObj_ == other.onObj_ && onMor_ == other.onMor_;
  }

private:
  std::string name_;
  FinCat dom_;
  std::vector<FinSet> onObj_;
  std::vector<FinFn> onMor_;
};

/// F after G for a functor G between categories: (F.G)(c) = F(G c).
SetFunctor precompose(const SetFunctor& f, const CatFunctor& g);

/// A natural transformation between parallel set-valued functors; naturality
/// is checked exhaustively at construction.
class NatTrans {
public:
  NatTrans() = default;
  NatTrans(std::string name, SetFunctor src, SetFunctor dst, std::vector<FinFn> components);

  const std::string& name() const { return name_; }
  const SetFunctor& src() const { return src_; }
  const SetFunctor& dst() const { return dst_; }
  const FinFn& at(int obj) const { return components_.at(static_cast<size_t>(obj)); }
  const std::vector<FinFn>& components() const { return components_; }

  bool operator==(const NatTrans& other) const {
    return src_ == other.src_ && dst_ == other.dst_ && components_ == other.components_;
  }

private:
  std::string name_;
  SetFunctor src_, dst_;
  std::vector<FinFn> components_;
};

/// All natural transformations F => G, in lexicographic component order;
/// ResourceError once more than cap candidate families would be visited.
std::vector<NatTrans> enumerate_nat_trans(const SetFunctor& f, const SetFunctor& g,
                                          long long cap = 1'000'000);

} // namespace fugue
