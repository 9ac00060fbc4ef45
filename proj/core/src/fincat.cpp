#include "fugue/fincat.hpp"

namespace fugue {

FinCat::FinCat(std::string name, FinSet objects, FinSet morphisms, std::vector<int> src,
               std::vector<int> tgt, std::vector<int> id,
               const std::vector<std::array<int, 3>>& compEntries)
    : name_(std::move(name)), objects_(std::move(objects)), morphisms_(std::move(morphisms)),
      src_(std::move(src)), tgt_(std::move(tgt)), id_(std::move(id)) {
  int nMor = morphisms_.size();
  if (static_cast<int>(src_.size()) != nMor || static_cast<int>(tgt_.size()) != nMor) {
    throw MalformedInputError("category '" + name_ + "': src/tgt tables have wrong size");
  }
  if (static_cast<int>(id_.size()) != objects_.size()) {
    throw MalformedInputError("category '" + name_ + "': id table has wrong size");
  }
  for (int v : src_) {
    if (v < 0 || v >= objects_.size())
      throw MalformedInputError("category '" + name_ + "': src entry out of range");
  }
  for (int v : tgt_) {
    if (v < 0 || v >= objects_.size())
      throw MalformedInputError("category '" + name_ + "': tgt entry out of range");
  }
  for (int v : id_) {
    if (v < 0 || v >= nMor)
      throw MalformedInputError("category '" + name_ + "': id entry out of range");
  }
  comp_.assign(static_cast<size_t>(nMor) * static_cast<size_t>(nMor), -1);
  for (const auto& [g, f, gf] : compEntries) {
    if (g < 0 || g >= nMor || f < 0 || f >= nMor || gf < 0 || gf >= nMor) {
      throw MalformedInputError("category '" + name_ + "': composition entry out of range");
    }
    comp_[static_cast<size_t>(g) * static_cast<size_t>(nMor) + static_cast<size_t>(f)] = gf;
  }
  validate();
}

int FinCat::compose(int g, int f) const {
  if (!composable(g, f)) {
    throw TypeError("category '" + name_ + "': morphisms " + morphisms_.label(g) + " and " +
                    morphisms_.label(f) + " are not composable");
  }
  return comp_[static_cast<size_t>(g) * static_cast<size_t>(morphisms_.size()) +
               static_cast<size_t>(f)];
}

void FinCat::validate() const {
  int nMor = morphisms_.size();
  for (int o = 0; o < objects_.size(); ++o) {
    int i = id_[static_cast<size_t>(o)];
    if (src_[static_cast<size_t>(i)] != o || tgt_[static_cast<size_t>(i)] != o) {
      throw InvariantViolation("category '" + name_ + "': id of '" + objects_.label(o) +
                               "' is not an endomorphism of it");
    }
  }
  for (int g = 0; g < nMor; ++g) {
    for (int f = 0; f < nMor; ++f) {
      int gf = comp_[static_cast<size_t>(g) * static_cast<size_t>(nMor) +
                     static_cast<size_t>(f)];
      if (composable(g, f)) {
        if (gf < 0) {
          throw InvariantViolation("category '" + name_ + "': composition undefined on the "
                                   "composable pair (" + morphisms_.label(g) + ", " +
                                   morphisms_.label(f) + ")");
        }
        if (src(gf) != src(f) || tgt(gf) != tgt(g)) {
          throw InvariantViolation("category '" + name_ + "': composite of (" +
                                   morphisms_.label(g) + ", " + morphisms_.label(f) +
                                   ") has wrong endpoints");
        }
      } else if (gf >= 0) {
        throw InvariantViolation("category '" + name_ + "': composition defined on the "
                                 "non-composable pair (" + morphisms_.label(g) + ", " +
                                 morphisms_.label(f) + ")");
      }
    }
  }
  for (int f = 0; f < nMor; ++f) {
    if (compose(id_[static_cast<size_t>(tgt(f))], f) != f ||
        compose(f, id_[static_cast<size_t>(src(f))]) != f) {
      throw InvariantViolation("category '" + name_ + "': unit law fails at " +
                               morphisms_.label(f));
    }
  }
  for (int h = 0; h < nMor; ++h) {
    for (int g = 0; g < nMor; ++g) {
      if (!composable(h, g)) continue;
      for (int f = 0; f < nMor; ++f) {
        if (!composable(g, f)) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
          throw InvariantViolation("category '" + name_ + "': associativity fails on (" +
                                   morphisms_.label(h) + ", " + morphisms_.label(g) + ", " +
                                   morphisms_.label(f) + ")");
        }
      }
    }
  }
}

FinCat monoid_as_category(const FinMonoid& m) {
  FinSet objects("pt", {"*"});
  const FinSet& c = m.carrier();
  std::vector<int> src(static_cast<size_t>(c.size()), 0);
  std::vector<int> tgt(static_cast<size_t>(c.size()), 0);
  std::vector<int> id{m.unit()};
  std::vector<std::array<int, 3>> comp;
  comp.reserve(static_cast<size_t>(c.size()) * static_cast<size_t>(c.size()));
  for (int g = 0; g < c.size(); ++g) {
    for (int f = 0; f < c.size(); ++f) {
      comp.push_back({g, f, m.mul(f, g)}); // g after f = f*g, diagram order
    }
  }
  return FinCat("B(" + m.name() + ")", std::move(objects), c, std::move(src), std::move(tgt),
                std::move(id), comp);
}

CatFunctor::CatFunctor(std::string name, FinCat dom, FinCat cod, std::vector<int> onObj,
                       std::vector<int> onMor)
    : name_(std::move(name)), dom_(std::move(dom)), cod_(std::move(cod)),
      onObj_(std::move(onObj)), onMor_(std::move(onMor)) {
  if (static_cast<int>(onObj_.size()) != dom_.objects().size() ||
      static_cast<int>(onMor_.size()) != dom_.morphisms().size()) {
    throw MalformedInputError("functor '" + name_ + "': tables have wrong size");
  }
  for (int v : onObj_) {
    if (v < 0 || v >= cod_.objects().size())
      throw MalformedInputError("functor '" + name_ + "': object image out of range");
  }
  for (int v : onMor_) {
    if (v < 0 || v >= cod_.morphisms().size())
      throw MalformedInputError("functor '" + name_ + "': morphism image out of range");
  }
  for (int f = 0; f < dom_.morphisms().size(); ++f) {
    if (cod_.src(mor(f)) != obj(dom_.src(f)) || cod_.tgt(mor(f)) != obj(dom_.tgt(f))) {
      throw InvariantViolation("functor '" + name_ + "': does not preserve endpoints of " +
                               dom_.morphisms().label(f));
    }
  }
  for (int o = 0; o < dom_.objects().size(); ++o) {
    if (mor(dom_.id(o)) != cod_.id(obj(o))) {
      throw InvariantViolation("functor '" + name_ + "': does not preserve the identity of " +
                               dom_.objects().label(o));
    }
  }
  for (int g = 0; g < dom_.morphisms().size(); ++g) {
    for (int f = 0; f < dom_.morphisms().size(); ++f) {
      if (!dom_.composable(g, f)) continue;
      if (mor(dom_.compose(g, f)) != cod_.compose(mor(g), mor(f))) {
        throw InvariantViolation("functor '" + name_ + "': does not preserve the composite (" +
                                 dom_.morphisms().label(g) + ", " + dom_.morphisms().label(f) +
                                 ")");
      }
    }
  }
}

CatFunctor CatFunctor::identity(const FinCat& c) {
  std::vector<int> onObj(static_cast<size_t>(c.objects().size()));
  std::vector<int> onMor(static_cast<size_t>(c.morphisms().size()));
  for (size_t i = 0; i < onObj.size(); ++i) onObj[i] = static_cast<int>(i);
  for (size_t i = 0; i < onMor.size(); ++i) onMor[i] = static_cast<int>(i);
  return CatFunctor("id_" + c.name(), c, c, std::move(onObj), std::move(onMor));
}

CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f) {
  if (!(f.cod() == g.dom())) {
    throw TypeError("compose_functors: middle categories do not match");
  }
  std::vector<int> onObj(static_cast<size_t>(f.dom().objects().size()));
  std::vector<int> onMor(static_cast<size_t>(f.dom().morphisms().size()));
  for (int o = 0; o < f.dom().objects().size(); ++o)
    onObj[static_cast<size_t>(o)] = g.obj(f.obj(o));
  for (int m = 0; m < f.dom().morphisms().size(); ++m)
    onMor[static_cast<size_t>(m)] = g.mor(f.mor(m));
  return CatFunctor(g.name() + "." + f.name(), f.dom(), g.cod(), std::move(onObj),
                    std::move(onMor));
}

OpfibReport is_discrete_opfibration(const CatFunctor& p) {
  const FinCat& apex = p.dom();
  const FinCat& base = p.cod();
  for (int e = 0; e < apex.objects().size(); ++e) {
    for (int m = 0; m < base.morphisms().size(); ++m) {
      if (base.src(m) != p.obj(e)) continue;
      int count = 0;
      for (int g = 0; g < apex.morphisms().size(); ++g) {
        if (apex.src(g) == e && p.mor(g) == m) ++count;
      }
      if (count != 1) {
        OpfibReport r;
        r.ok = false;
        r.obj = e;
        r.baseMor = m;
        r.lifts = count;
        r.detail = "object '" + apex.objects().label(e) + "' has " + std::to_string(count) +
                   " lifts of base morphism '" + base.morphisms().label(m) + "'";
        return r;
      }
    }
  }
  return {};
}

int opcartesian_lift(const CatFunctor& p, int e, int baseMor) {
  const FinCat& apex = p.dom();
  int found = -1;
  for (int g = 0; g < apex.morphisms().size(); ++g) {
    if (apex.src(g) == e && p.mor(g) == baseMor) {
      if (found != -1) {
        throw PreconditionError("opcartesian_lift: lift is not unique");
      }
      found = g;
    }
  }
  if (found == -1) {
    throw PreconditionError("opcartesian_lift: no lift exists");
  }
  return found;
}

} // namespace fugue
