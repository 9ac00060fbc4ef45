#include "fugue/setfunctor.hpp"

namespace fugue {

SetFunctor::SetFunctor(std::string name, FinCat dom, std::vector<FinSet> onObj,
                       std::vector<FinFn> onMor)
    : name_(std::move(name)), dom_(std::move(dom)), onObj_(std::move(onObj)),
      onMor_(std::move(onMor)) {
  if (static_cast<int>(onObj_.size()) != dom_.objects().size() ||
      static_cast<int>(onMor_.size()) != dom_.morphisms().size()) {
    throw MalformedInputError("set functor '" + name_ + "': tables have wrong size");
  }
  for (int m = 0; m < dom_.morphisms().size(); ++m) {
    if (onMor_[static_cast<size_t>(m)].dom() != at(dom_.src(m)) ||
        onMor_[static_cast<size_t>(m)].cod() != at(dom_.tgt(m))) {
      throw InvariantViolation("set functor '" + name_ + "': image of '" +
                               dom_.morphisms().label(m) + "' has wrong endpoints");
    }
  }
  for (int o = 0; o < dom_.objects().size(); ++o) {
    if (map(dom_.id(o)) != FinFn::identity(at(o))) {
      throw InvariantViolation("set functor '" + name_ +
                               "': identity law fails at object '" +
                               dom_.objects().label(o) + "'");
    }
  }
  for (int g = 0; g < dom_.morphisms().size(); ++g) {
    for (int f = 0; f < dom_.morphisms().size(); ++f) {
      if (!dom_.composable(g, f)) continue;
      if (map(dom_.compose(g, f)) != compose(map(g), map(f))) {
        throw InvariantViolation("set functor '" + name_ +
                                 "': composition law fails on (" +
                                 dom_.morphisms().label(g) + ", " +
                                 dom_.morphisms().label(f) + ")");
      }
    }
  }
}

SetFunctor precompose(const SetFunctor& f, const CatFunctor& g) {
  if (!(g.cod() == f.dom())) {
    throw TypeError("precompose: functor codomain does not match");
  }
  std::vector<FinSet> onObj;
  std::vector<FinFn> onMor;
  onObj.reserve(static_cast<size_t>(g.dom().objects().size()));
  onMor.reserve(static_cast<size_t>(g.dom().morphisms().size()));
  for (int o = 0; o < g.dom().objects().size(); ++o) onObj.push_back(f.at(g.obj(o)));
  for (int m = 0; m < g.dom().morphisms().size(); ++m) onMor.push_back(f.map(g.mor(m)));
  return SetFunctor(f.name() + "." + g.name(), g.dom(), std::move(onObj), std::move(onMor));
}

NatTrans::NatTrans(std::string name, SetFunctor src, SetFunctor dst,
                   std::vector<FinFn> components)
    : name_(std::move(name)), src_(std::move(src)), dst_(std::move(dst)),
      components_(std::move(components)) {
  if (!(src_.dom() == dst_.dom())) {
    throw TypeError("natural transformation '" + name_ +
                    "': functors have different domains");
  }
  const FinCat& c = src_.dom();
  if (static_cast<int>(components_.size()) != c.objects().size()) {
    throw MalformedInputError("natural transformation '" + name_ +
                              "': one component per object required");
  }
  for (int o = 0; o < c.objects().size(); ++o) {
    if (at(o).dom() != src_.at(o) || at(o).cod() != dst_.at(o)) {
      throw InvariantViolation("natural transformation '" + name_ + "': component at '" +
                               c.objects().label(o) + "' has wrong endpoints");
    }
  }
  for (int m = 0; m < c.morphisms().size(); ++m) {
    if (compose(at(c.tgt(m)), src_.map(m)) != compose(dst_.map(m), at(c.src(m)))) {
      throw InvariantViolation("natural transformation '" + name_ +
                               "': naturality square fails at '" + c.morphisms().label(m) +
                               "'");
    }
  }
}

std::vector<NatTrans> enumerate_nat_trans(const SetFunctor& f, const SetFunctor& g,
                                          long long cap) {
  if (!(f.dom() == g.dom())) {
    throw TypeError("enumerate_nat_trans: functors have different domains");
  }
  const FinCat& c = f.dom();
  long long total = 1;
  for (int o = 0; o < c.objects().size(); ++o) {
    int domSize = f.at(o).size();
    int codSize = g.at(o).size();
    if (domSize > 0 && codSize == 0) return {};
    for (int k = 0; k < domSize; ++k) {
      total *= codSize;
      if (total > cap) {
        throw ResourceError("enumerate_nat_trans: more than " + std::to_string(cap) +
                            " candidate families");
      }
    }
  }
  // Odometer over all component choices, then a naturality filter.
  std::vector<std::vector<int>> tables;
  std::vector<NatTrans> out;
  tables.resize(static_cast<size_t>(c.objects().size()));
  for (int o = 0; o < c.objects().size(); ++o) {
    tables[static_cast<size_t>(o)].assign(static_cast<size_t>(f.at(o).size()), 0);
  }
  for (;;) {
    bool natural = true;
    for (int m = 0; natural && m < c.morphisms().size(); ++m) {
      int so = c.src(m), to = c.tgt(m);
      for (int x = 0; x < f.at(so).size(); ++x) {
        int lhs = tables[static_cast<size_t>(to)][static_cast<size_t>(f.map(m)(x))];
        int rhs = g.map(m)(tables[static_cast<size_t>(so)][static_cast<size_t>(x)]);
        if (lhs != rhs) {
          natural = false;
          break;
        }
      }
    }
    if (natural) {
      std::vector<FinFn> comps;
      comps.reserve(tables.size());
      for (int o = 0; o < c.objects().size(); ++o) {
        comps.emplace_back(f.at(o), g.at(o), tables[static_cast<size_t>(o)]);
      }
      out.emplace_back("nt" + std::to_string(out.size()), f, g, std::move(comps));
    }
    // Advance the odometer (innermost digit last, so output is lexicographic).
    int o = c.objects().size() - 1;
    bool carried = true;
    while (carried && o >= 0) {
      auto& t = tables[static_cast<size_t>(o)];
      int k = static_cast<int>(t.size()) - 1;
      while (k >= 0) {
        if (++t[static_cast<size_t>(k)] < g.at(o).size()) break;
        t[static_cast<size_t>(k)] = 0;
        --k;
      }
      carried = k < 0;
      --o;
    }
    if (carried) break;
  }
  return out;
}

} // namespace fugue
