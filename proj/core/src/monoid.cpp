#include "fugue/monoid.hpp"

namespace fugue {

FinMonoid::FinMonoid(std::string name, FinSet carrier, const std::string& unitLabel,
                     const std::vector<std::tuple<std::string, std::string, std::string>>& mulEntries)
    : name_(std::move(name)), carrier_(std::move(carrier)) {
  unit_ = carrier_.index(unitLabel);
  mul_.assign(static_cast<size_t>(carrier_.size()) * static_cast<size_t>(carrier_.size()), -1);
  for (const auto& [a, b, ab] : mulEntries) {
    int ia = carrier_.index(a);
    int ib = carrier_.index(b);
    size_t slot = static_cast<size_t>(ia) * static_cast<size_t>(carrier_.size()) +
                  static_cast<size_t>(ib);
    if (mul_[slot] != -1) {
      throw MalformedInputError("monoid '" + name_ + "': duplicate product entry (" + a +
                                ", " + b + ")");
    }
    mul_[slot] = carrier_.index(ab);
  }
}

FinMonoid::FinMonoid(std::string name, FinSet carrier, int unit, std::vector<int> mul)
    : name_(std::move(name)), carrier_(std::move(carrier)), unit_(unit), mul_(std::move(mul)) {
  if (unit_ < 0 || unit_ >= carrier_.size()) {
    throw MalformedInputError("monoid '" + name_ + "': unit index out of range");
  }
  if (static_cast<int>(mul_.size()) != carrier_.size() * carrier_.size()) {
    throw MalformedInputError("monoid '" + name_ + "': multiplication table has wrong size");
  }
  for (int v : mul_) {
    if (v < -1 || v >= carrier_.size()) {
      throw MalformedInputError("monoid '" + name_ + "': product index out of range");
    }
  }
}

bool FinMonoid::total() const {
  for (int v : mul_) {
    if (v == -1) return false;
  }
  return !mul_.empty() || carrier_.size() == 0;
}

int FinMonoid::mul(int a, int b) const {
  int v = mul_.at(static_cast<size_t>(a) * static_cast<size_t>(carrier_.size()) +
                  static_cast<size_t>(b));
  if (v == -1) {
    throw MalformedInputError("monoid '" + name_ + "': product (" + carrier_.label(a) +
                              ", " + carrier_.label(b) + ") is not in the table");
  }
  return v;
}

MonoidLawReport check_monoid_laws(const FinMonoid& m) {
  const FinSet& c = m.carrier();
  if (c.empty()) {
    throw MalformedInputError("monoid '" + m.name() + "': empty carrier");
  }
  if (!m.total()) {
    throw MalformedInputError("monoid '" + m.name() + "': multiplication table is not total");
  }
  MonoidLawReport r;
  for (int x = 0; x < c.size(); ++x) {
    if (m.mul(m.unit(), x) != x) {
      r.ok = false;
      r.law = MonoidLawReport::Law::Unit;
      r.witness = {c.label(m.unit()), c.label(x)};
      r.detail = "unit law fails: " + c.label(m.unit()) + "*" + c.label(x) + " = " +
                 c.label(m.mul(m.unit(), x)) + " != " + c.label(x);
      return r;
    }
    if (m.mul(x, m.unit()) != x) {
      r.ok = false;
      r.law = MonoidLawReport::Law::Unit;
      r.witness = {c.label(x), c.label(m.unit())};
      r.detail = "unit law fails: " + c.label(x) + "*" + c.label(m.unit()) + " = " +
                 c.label(m.mul(x, m.unit())) + " != " + c.label(x);
      return r;
    }
  }
  for (int x = 0; x < c.size(); ++x) {
    for (int y = 0; y < c.size(); ++y) {
      for (int z = 0; z < c.size(); ++z) {
        if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) {
          r.ok = false;
          r.law = MonoidLawReport::Law::Assoc;
          r.witness = {c.label(x), c.label(y), c.label(z)};
          r.detail = "associativity fails on (" + c.label(x) + ", " + c.label(y) + ", " +
                     c.label(z) + ")";
          return r;
        }
      }
    }
  }
  return r;
}

const FinMonoid& MonoidDesc::finite() const {
  if (is_free()) throw UsageError("expected a finite monoid, got a free one");
  return std::get<FinMonoid>(repr_);
}

const FreeMonoidHandle& MonoidDesc::free_handle() const {
  if (!is_free()) throw UsageError("expected a free monoid, got a finite one");
  return std::get<FreeMonoidHandle>(repr_);
}

const FinSet& MonoidDesc::symbols() const {
  return is_free() ? free_handle().generators : finite().carrier();
}

MonVal MonoidDesc::unit() const {
  if (is_free()) return {};
  return {finite().unit()};
}

MonVal MonoidDesc::mul(const MonVal& a, const MonVal& b) const {
  if (is_free()) {
    MonVal out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  return {finite().mul(a.at(0), b.at(0))};
}

bool MonoidDesc::valid(const MonVal& v) const {
  if (!is_free() && v.size() != 1) return false;
  for (int s : v) {
    if (s < 0 || s >= symbols().size()) return false;
  }
  return true;
}

std::string MonoidDesc::show(const MonVal& v) const {
  if (!is_free()) return symbols().label(v.at(0));
  if (v.empty()) return "[]";
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += symbols().label(v[i]);
  }
  return out + "]";
}

bool MonoidDesc::operator==(const MonoidDesc& other) const {
  if (is_free() != other.is_free()) return false;
  if (is_free()) return free_handle() == other.free_handle();
  return finite() == other.finite();
}

FinMonoid cyclic_monoid(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  FinSet carrier("z" + std::to_string(n), std::move(labels));
  std::vector<int> mul(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      mul[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
          (a + b) % n;
    }
  }
  return FinMonoid("z" + std::to_string(n), std::move(carrier), 0, std::move(mul));
}

FinMonoid multiplicative_z2() {
  FinSet carrier("z2mul", {"1", "g"});
  // 1*1=1, 1*g=g, g*1=g, g*g=1
  return FinMonoid("z2mul", std::move(carrier), 0, {0, 1, 1, 0});
}

FinMonoid idempotent_monoid2() {
  FinSet carrier("idem2", {"1", "z"});
  // z absorbs: z*z = z
  return FinMonoid("idem2", std::move(carrier), 0, {0, 1, 1, 1});
}

FinMonoid trivial_monoid() {
  FinSet carrier("triv", {"1"});
  return FinMonoid("triv", std::move(carrier), 0, {0});
}

} // namespace fugue
