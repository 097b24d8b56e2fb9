#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latlab/completions.hpp"
#include "latlab/finite_lattice.hpp"

namespace latlab::ladder {

/// Element of the infinite ladder: a descending x-chain and a descending
/// y-chain meeting only at bottom, with x_i below y_j exactly when i >= j.
/// Order, meets and joins are closed-form; nothing is materialized.
struct Elem {
  enum class Tag { Bot, X, Y };
  Tag tag = Tag::Bot;
  int depth = 0;  // >= 1 for X/Y

  static Elem bot() { return {Tag::Bot, 0}; }
  static Elem x(int k) { return {Tag::X, k}; }
  static Elem y(int k) { return {Tag::Y, k}; }
  bool operator==(const Elem&) const = default;
};

std::string name(Elem e);
bool valid(Elem e);

bool leq(Elem a, Elem b);
Elem meet(Elem a, Elem b);
Elem join(Elem a, Elem b);

/// Covering tags of the ladder: A tags every crossing x_i < y_i, B tags every
/// rung step x_{i+1} < x_i and y_{i+1} < y_i. The crossings form a single
/// projective class (each transposes up to the shallower one). The rungs do
/// not: the x-rung and y-rung at one depth transpose into each other and into
/// nothing else, so B collects one two-element class per depth. Counts for B
/// are counts of B-tagged coverings.
enum class ClassTag { A, B };

/// Class of a ladder covering; throws NotALadderCovering for pairs that are
/// not coverings (bottom has no covers: the chains descend forever).
ClassTag covering_class(Elem lower, Elem upper);

/// A count that may be infinite. Infinity is a token, never a large number.
struct Count {
  bool infinite = false;
  std::uint64_t value = 0;

  static Count inf() { return {true, 0}; }
  static Count of(std::uint64_t v) { return {false, v}; }
  bool operator==(const Count&) const = default;
  std::string str() const;
};

/// The two cataloged maximal chains of the ladder: C1 climbs the x-chain and
/// finishes at y_1; C2 is the whole y-chain.
enum class ChainId { C1, C2 };

Count chain_mu(ChainId chain, ClassTag cls);

/// Elements of the filter lattice of the ladder: the principal filters, plus
/// the two non-principal filters generated by the full x-chain and the full
/// y-chain. The x-chain filter is everything above bottom; the y-chain filter
/// sits directly above it.
struct FilElem {
  enum class Tag { PrincipalBot, XChainFilter, YChainFilter, PrincipalX, PrincipalY };
  Tag tag = Tag::PrincipalBot;
  int depth = 0;

  bool operator==(const FilElem&) const = default;
};

std::string fil_name(FilElem e);
bool fil_leq(FilElem a, FilElem b);

/// Cataloged maximal chains of the filter lattice: CrossAt(k) climbs
/// principal x-filters and crosses to the y-side at index k; AllY passes
/// through both limit filters and climbs the y-side.
struct FilChain {
  enum class Kind { CrossAt, AllY };
  Kind kind = Kind::AllY;
  int cross = 0;  // >= 1 for CrossAt
};

/// Multiplicity of a class along a cataloged filter-lattice chain. Every
/// cataloged chain carries exactly one class-A covering; class B occurs
/// infinitely often. Throws UnknownChainDescriptor.
Count fil_chain_mu(const FilChain& chain, ClassTag cls);

/// The finite sublattice on bottom plus the first `depth` rungs of each
/// chain, as a validated FiniteLattice. Modular for every depth.
FiniteLattice truncate(int depth);

/// Index of a ladder element inside truncate(depth).
int truncate_index(Elem e, int depth);
Elem truncate_elem(int index, int depth);

/// Closed-form order, meet and join agree with the tables of truncate(depth)
/// on every pair of elements present.
bool truncation_consistent(int depth);

/// Away from the boundary index, the coverings of truncate(depth) fall into
/// the projective classes predicted by covering_class: one class holding the
/// crossings, one holding the rungs, and the two never merging.
bool truncation_classes_consistent(int depth);

/// Kind of the bottom covering of the filter lattice, i.e. of the maximal
/// based filter at bottom: quasi-atomic (bottom is meet-irreducible but has
/// no cover, and everything in (bot, x_1] lies in the filter above it).
CoveringKind bottom_cover_kind();

/// Kind of the covering between the two limit filters: atomic (each base x_i
/// determines the principal filter of y_i).
CoveringKind crossing_cover_kind();

struct WitnessReport {
  bool class_a_lower_regular = true;
  bool class_a_weakly_regular = true;
  bool fil_class_a_multiplicity_constant = false;
  CoveringKind bottom_kind = CoveringKind::Atomic;
  CoveringKind crossing_kind = CoveringKind::Atomic;
  Count mu_c1_a, mu_c2_a, mu_c1_b;
  std::vector<std::string> notes;
};

/// The desk-scale witness that weak regularity fails in the ladder and is
/// restored in its filter lattice.
WitnessReport regularity_witness();

}  // namespace latlab::ladder
