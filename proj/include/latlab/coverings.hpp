#pragma once

#include <compare>
#include <vector>

#include "latlab/finite_lattice.hpp"

namespace latlab {

/// A pair lower < upper with nothing strictly between.
struct Covering {
  int lower = 0;
  int upper = 0;
  auto operator<=>(const Covering&) const = default;
};

/// A projective-equivalence class of coverings. Classes partition the
/// coverings of a lattice; ids are assigned by smallest member.
struct CoveringClass {
  int id = 0;
  std::vector<Covering> members;  // sorted

  bool contains(Covering c) const;
};

std::vector<Covering> coverings(const FiniteLattice& L);

bool is_covering(const FiniteLattice& L, Covering c);

/// Whether the pair a transposes up to the pair b: upper(a) ∧ lower(b) =
/// lower(a) and upper(a) ∨ lower(b) = upper(b). Defined on comparable pairs,
/// not just coverings.
bool transposes_up(const FiniteLattice& L, Covering a, Covering b);

/// Restriction of transposes_up to actual coverings.
bool cover_transposes_up(const FiniteLattice& L, Covering a, Covering b);

/// Connected components of coverings under transposition in either direction.
std::vector<CoveringClass> projective_classes(const FiniteLattice& L);

/// Index of the class containing c, or -1.
int class_of(const std::vector<CoveringClass>& classes, Covering c);

/// Elements m != top such that x > m and y > m imply x ∧ y > m. For a finite
/// lattice this coincides with the strictly meet-irreducible elements (the
/// ones with a unique upper cover).
std::vector<int> meet_irreducibles(const FiniteLattice& L);

/// Whether x is a meet of finitely many meet-irreducibles. Holds for every
/// element of a finite lattice; the check computes the meet of the
/// meet-irreducibles above x and compares.
bool is_finitely_decomposable(const FiniteLattice& L, int x);

}  // namespace latlab
