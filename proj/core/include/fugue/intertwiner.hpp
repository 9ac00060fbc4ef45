#pragma once

#include <string>

#include "fugue/machine.hpp"

namespace fugue {

/// An intertwiner between Mealy machines over possibly different alphabets:
/// a pair of mediating sets U, V and structure maps
///   iota  : I' x U -> U x I
///   eps   : E' x U -> V x E
///   omega : O' x U -> V x O
/// subject to two interchange identities (see check_intertwiner). Note the
/// codomain of iota: the equations only compose when iota lands in U x I.
struct Intertwiner {
  MealyMachine src; // (E, d, s) over (I, O)
  MealyMachine dst; // (E', d', s') over (I', O')
  FinSet u, v;
  FinFn iota, eps, omega;

  Intertwiner(MealyMachine src, MealyMachine dst, FinSet u, FinSet v, FinFn iota,
              FinFn eps, FinFn omega);

  bool operator==(const Intertwiner& other) const {
    return src == other.src && dst == other.dst && u == other.u && v == other.v &&
           iota == other.iota && eps == other.eps && omega == other.omega;
  }
};

/// The identity intertwiner on a machine: U = V = {*}, unitor structure maps.
Intertwiner identity_intertwiner(const MealyMachine& m);

/// The intertwiner induced by a map f : E' -> E with U = V = {*} and
/// identity iota/omega; it validates exactly when f is a machine morphism
/// from dst to src.
Intertwiner morphism_intertwiner(const MealyMachine& src, const MealyMachine& dst,
                                 const FinFn& f);

struct IntertwinerReport {
  bool ok = true;
  char equation = ' '; // 'd' or 's'
  int state = -1, letter = -1, uElem = -1;
  std::string detail;
};

/// Exhaustive check of the two interchange identities over E' x I' x U;
/// the first failing triple (in iteration order) is reported together with
/// the equation that failed.
IntertwinerReport check_intertwiner(const Intertwiner& it);

/// Pasting of intertwiners along a shared middle machine: U = U2 x U1,
/// V = V2 x V1, structure maps threaded through the second intertwiner
/// first.
Intertwiner compose_intertwiners(const Intertwiner& it2, const Intertwiner& it1);

/// A 2-cell between parallel intertwiners: maps f : U -> U', g : V -> V'
/// making the three structure squares commute.
struct IntertwinerTwoCell {
  Intertwiner src, dst;
  FinFn f, g;
  IntertwinerTwoCell(Intertwiner src, Intertwiner dst, FinFn f, FinFn g);

  bool operator==(const IntertwinerTwoCell& other) const {
    return src == other.src && dst == other.dst && f == other.f && g == other.g;
  }
};

struct TwoCellReport {
  bool ok = true;
  std::string square; // "iota" | "eps" | "omega"
  std::string detail;
};

TwoCellReport check_two_cell(const IntertwinerTwoCell& tc);

} // namespace fugue
