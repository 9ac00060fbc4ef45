#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fugue/finset.hpp"

namespace fugue {

/// A finite binary relation between two sets, stored as a membership matrix.
class Rel {
public:
  Rel() = default;
  Rel(FinSet src, FinSet dst);
  Rel(FinSet src, FinSet dst, const std::vector<std::pair<std::string, std::string>>& pairs);

  const FinSet& src() const { return src_; }
  const FinSet& dst() const { return dst_; }
  bool at(int i, int j) const { return bits_[idx(i, j)] != 0; }
  void set(int i, int j, bool v) { bits_[idx(i, j)] = v ? 1 : 0; }
  /// Pairs in canonical order (source index outermost).
  std::vector<std::pair<int, int>> pairs() const;
  int count() const;

  bool subset_of(const Rel& other) const;
  Rel union_with(const Rel& other) const;
  Rel intersect(const Rel& other) const;

  bool operator==(const Rel& other) const {
    return src_ == other.src_ && dst_ == other.dst_ && bits_ == other.bits_;
  }

private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(dst_.size()) +
           static_cast<size_t>(j);
  }
  FinSet src_, dst_;
  std::vector<char> bits_;
};

Rel identity_rel(const FinSet& a);
Rel full_rel(const FinSet& a, const FinSet& b);

/// Relational composition with the fixed convention
///   (snd . fst)(a, c)  iff  exists b with fst(a, b) and snd(b, c),
/// so "E . I" applies I first, matching 1-cell composition e . i.
Rel rel_compose(const Rel& snd, const Rel& fst);

/// Least reflexive-transitive relation containing an endorelation.
Rel refl_trans_closure(const Rel& i);
/// Least transitive relation containing an endorelation (paths of length >= 1).
Rel trans_closure(const Rel& i);

enum class RelMode { Moore, Mealy };

/// Moore machines are E with E.I <= E and E <= O; Mealy machines E with
/// E.I <= E and E.I <= O.
bool is_rel_machine(const Rel& e, const Rel& i, const Rel& o, RelMode mode);

/// A relation certified to be a machine against fixed I and O; the
/// constructors reject non-machines.
struct RelMooreMachine {
  Rel e, i, o;
  RelMooreMachine(Rel e, Rel i, Rel o);
};
struct RelMealyMachine {
  Rel e, i, o;
  RelMealyMachine(Rel e, Rel i, Rel o);
};

/// The right-extension reachability relation: in Moore mode
///   R(a, b)  iff  for all a': I*(a', a) implies O(a', b)
/// with I* the reflexive-transitive closure; Mealy mode uses the plain
/// transitive closure instead.
Rel ran_reachability(const Rel& i, const Rel& o, RelMode mode);

/// Greatest-fixpoint oracle for the largest machine below O (Moore) resp.
/// the largest machine at all (Mealy).
Rel terminal_gfp(const Rel& i, const Rel& o, RelMode mode);

struct TerminalReport {
  bool ok = true;
  long long machinesSeen = 0;
  std::string detail;
};

/// Certifies terminality of R: R is a machine, R agrees with the
/// greatest-fixpoint oracle, and (when |A|x|B| <= maxBits) every machine in
/// the full enumeration of subsets is contained in R.
TerminalReport verify_terminal(const Rel& r, const Rel& i, const Rel& o, RelMode mode,
                               int maxBits = 14);

} // namespace fugue
