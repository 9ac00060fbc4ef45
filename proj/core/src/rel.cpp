#include "fugue/rel.hpp"

namespace fugue {

Rel::Rel(FinSet src, FinSet dst) : src_(std::move(src)), dst_(std::move(dst)) {
  bits_.assign(static_cast<size_t>(src_.size()) * static_cast<size_t>(dst_.size()), 0);
}

Rel::Rel(FinSet src, FinSet dst,
         const std::vector<std::pair<std::string, std::string>>& pairs)
    : Rel(std::move(src), std::move(dst)) {
  for (const auto& [a, b] : pairs) set(src_.index(a), dst_.index(b), true);
}

std::vector<std::pair<int, int>> Rel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < src_.size(); ++i) {
    for (int j = 0; j < dst_.size(); ++j) {
      if (at(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int Rel::count() const {
  int n = 0;
  for (char b : bits_) n += b;
  return n;
}

bool Rel::subset_of(const Rel& other) const {
  if (src_ != other.src_ || dst_ != other.dst_) {
    throw TypeError("subset_of: relations have different carriers");
  }
  for (size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] && !other.bits_[k]) return false;
  }
  return true;
}

Rel Rel::union_with(const Rel& other) const {
  if (src_ != other.src_ || dst_ != other.dst_) {
    throw TypeError("union: relations have different carriers");
  }
  Rel out = *this;
  for (size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= other.bits_[k];
  return out;
}

Rel Rel::intersect(const Rel& other) const {
  if (src_ != other.src_ || dst_ != other.dst_) {
    throw TypeError("intersect: relations have different carriers");
  }
  Rel out = *this;
  for (size_t k = 0; k < bits_.size(); ++k) out.bits_[k] &= other.bits_[k];
  return out;
}

Rel identity_rel(const FinSet& a) {
  Rel r(a, a);
  for (int i = 0; i < a.size(); ++i) r.set(i, i, true);
  return r;
}

Rel full_rel(const FinSet& a, const FinSet& b) {
  Rel r(a, b);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) r.set(i, j, true);
  }
  return r;
}

Rel rel_compose(const Rel& snd, const Rel& fst) {
  if (fst.dst() != snd.src()) {
    throw TypeError("rel_compose: middle carriers do not match");
  }
  Rel out(fst.src(), snd.dst());
  for (int a = 0; a < fst.src().size(); ++a) {
    for (int b = 0; b < fst.dst().size(); ++b) {
      if (!fst.at(a, b)) continue;
      for (int c = 0; c < snd.dst().size(); ++c) {
        if (snd.at(b, c)) out.set(a, c, true);
      }
    }
  }
  return out;
}

namespace {

void require_endo(const Rel& i, const char* who) {
  if (i.src() != i.dst()) {
    throw TypeError(std::string(who) + ": expected an endorelation");
  }
}

Rel warshall(Rel r) {
  int n = r.src().size();
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!r.at(a, k)) continue;
      for (int b = 0; b < n; ++b) {
        if (r.at(k, b)) r.set(a, b, true);
      }
    }
  }
  return r;
}

} // namespace

Rel refl_trans_closure(const Rel& i) {
  require_endo(i, "refl_trans_closure");
  return warshall(i.union_with(identity_rel(i.src())));
}

Rel trans_closure(const Rel& i) {
  require_endo(i, "trans_closure");
  return warshall(i);
}

bool is_rel_machine(const Rel& e, const Rel& i, const Rel& o, RelMode mode) {
  require_endo(i, "is_rel_machine");
  Rel ei = rel_compose(e, i);
  if (!ei.subset_of(e)) return false;
  return mode == RelMode::Moore ? e.subset_of(o) : ei.subset_of(o);
}

RelMooreMachine::RelMooreMachine(Rel e, Rel i, Rel o)
    : e(std::move(e)), i(std::move(i)), o(std::move(o)) {
  if (!is_rel_machine(this->e, this->i, this->o, RelMode::Moore)) {
    throw InvariantViolation("not a relational Moore machine: needs E.I <= E and E <= O");
  }
}

RelMealyMachine::RelMealyMachine(Rel e, Rel i, Rel o)
    : e(std::move(e)), i(std::move(i)), o(std::move(o)) {
  if (!is_rel_machine(this->e, this->i, this->o, RelMode::Mealy)) {
    throw InvariantViolation("not a relational Mealy machine: needs E.I <= E and E.I <= O");
  }
}

Rel ran_reachability(const Rel& i, const Rel& o, RelMode mode) {
  require_endo(i, "ran_reachability");
  if (i.src() != o.src()) {
    throw TypeError("ran_reachability: relations must share the source carrier");
  }
  Rel closure = mode == RelMode::Moore ? refl_trans_closure(i) : trans_closure(i);
  Rel r(o.src(), o.dst());
  for (int a = 0; a < o.src().size(); ++a) {
    for (int b = 0; b < o.dst().size(); ++b) {
      bool in = true;
      for (int a2 = 0; a2 < o.src().size(); ++a2) {
        if (closure.at(a2, a) && !o.at(a2, b)) {
          in = false;
          break;
        }
      }
      r.set(a, b, in);
    }
  }
  return r;
}

Rel terminal_gfp(const Rel& i, const Rel& o, RelMode mode) {
  require_endo(i, "terminal_gfp");
  Rel e = mode == RelMode::Moore ? o : full_rel(o.src(), o.dst());
  for (;;) {
    Rel next = e;
    for (int a = 0; a < o.src().size(); ++a) {
      for (int b = 0; b < o.dst().size(); ++b) {
        if (!e.at(a, b)) continue;
        for (int a2 = 0; a2 < o.src().size(); ++a2) {
          if (!i.at(a2, a)) continue;
          bool keep = e.at(a2, b) && (mode == RelMode::Moore || o.at(a2, b));
          if (!keep) {
            next.set(a, b, false);
            break;
          }
        }
      }
    }
    if (next == e) return e;
    e = next;
  }
}

TerminalReport verify_terminal(const Rel& r, const Rel& i, const Rel& o, RelMode mode,
                               int maxBits) {
  TerminalReport rep;
  if (!is_rel_machine(r, i, o, mode)) {
    rep.ok = false;
    rep.detail = "candidate is not a machine";
    return rep;
  }
  if (!(terminal_gfp(i, o, mode) == r)) {
    rep.ok = false;
    rep.detail = "candidate differs from the greatest fixpoint";
    return rep;
  }
  int cells = o.src().size() * o.dst().size();
  if (cells > maxBits) {
    throw ResourceError("verify_terminal: enumeration over " + std::to_string(cells) +
                        " cells exceeds the limit of " + std::to_string(maxBits));
  }
  for (unsigned mask = 0; mask < (1u << cells); ++mask) {
    Rel e(o.src(), o.dst());
    for (int k = 0; k < cells; ++k) {
      if (mask & (1u << k)) e.set(k / o.dst().size(), k % o.dst().size(), true);
    }
    if (!is_rel_machine(e, i, o, mode)) continue;
    ++rep.machinesSeen;
    if (!e.subset_of(r)) {
      rep.ok = false;
      rep.detail = "a machine with " + std::to_string(e.count()) +
                   " pairs is not below the candidate";
      return rep;
    }
  }
  return rep;
}

} // namespace fugue
