#pragma once

#include <array>
#include <string>
#include <vector>

#include "fugue/finset.hpp"
#include "fugue/monoid.hpp"

namespace fugue {

/// A finite category: objects, morphisms, source/target/identity tables and
/// a composition table on composable pairs. The constructor checks the
/// category laws exhaustively.
class FinCat {
public:
  FinCat() = default;
  FinCat(std::string name, FinSet objects, FinSet morphisms, std::vector<int> src,
         std::vector<int> tgt, std::vector<int> id,
         const std::vector<std::array<int, 3>>& compEntries); // {g, f, g.f}

  const std::string& name() const { return name_; }
  const FinSet& objects() const { return objects_; }
  const FinSet& morphisms() const { return morphisms_; }
  int src(int m) const { return src_.at(static_cast<size_t>(m)); }
  int tgt(int m) const { return tgt_.at(static_cast<size_t>(m)); }
  int id(int obj) const { return id_.at(static_cast<size_t>(obj)); }
  bool composable(int g, int f) const { return tgt(f) == src(g); }
  /// g after f; TypeError when not composable.
  int compose(int g, int f) const;

  bool operator==(const FinCat& other) const {
    return objects_ == other.objects_ && morphisms_ == other.morphisms_ &&
           src_ == other.src_ && tgt_ == other.tgt_ && id_ == other.id_ &&
           comp_ == other.comp_;
  }

private:
  void validate() const;
  std::string name_;
  FinSet objects_, morphisms_;
  std::vector<int> src_, tgt_, id_;
  std::vector<int> comp_; // g * nMor + f, -1 when not composable
};

/// The one-object category of a finite monoid; composition g.f (f first) is
/// the product f*g, so that paths compose in diagram order.
FinCat monoid_as_category(const FinMonoid& m);

/// A functor between finite categories, checked exhaustively.
class CatFunctor {
public:
  CatFunctor() = default;
  CatFunctor(std::string name, FinCat dom, FinCat cod, std::vector<int> onObj,
             std::vector<int> onMor);
  static CatFunctor identity(const FinCat& c);

  const std::string& name() const { return name_; }
  const FinCat& dom() const { return dom_; }
  const FinCat& cod() const { return cod_; }
  int obj(int o) const { return onObj_.at(static_cast<size_t>(o)); }
  int mor(int m) const { return onMor_.at(static_cast<size_t>(m)); }

  bool operator==(const CatFunctor& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && onObj_ == other.onObj_ &&
           onMor_ == other.onMor_;
  }

private:
  std::string name_;
  FinCat dom_, cod_;
  std::vector<int> onObj_, onMor_;
};

/// g after f; TypeError unless cod(f) = dom(g).
CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f);

struct OpfibReport {
  bool ok = true;
  int obj = -1;     // apex object
  int baseMor = -1; // base morphism lacking a unique lift
  int lifts = 0;
  std::string detail;
};

/// Discrete opfibration check: every base morphism starting at p(e) has
/// exactly one lift starting at e.
OpfibReport is_discrete_opfibration(const CatFunctor& p);

/// The unique lift of baseMor at apex object e; PreconditionError if the
/// lift is not unique.
int opcartesian_lift(const CatFunctor& p, int e, int baseMor);

} // namespace fugue
