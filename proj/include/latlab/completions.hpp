#pragma once

#include <optional>
#include <vector>

#include "latlab/coverings.hpp"
#include "latlab/finite_lattice.hpp"

namespace latlab {

/// A filter: nonempty, upward closed, closed under binary meet. Stored as a
/// bitset over base-lattice elements. The dual reading (ideal) is downward
/// closed and join-closed.
struct Filter {
  Bits members;
};

/// The filter generated by S: upward closure of all finite meets of S.
/// Throws EmptyGeneratorSet.
Filter fg(const FiniteLattice& L, const std::vector<int>& gens);

/// Principal generator of a filter (its least member), if principal.
std::optional<int> principal_generator(const FiniteLattice& L, const Filter& f);

enum class CompletionKind { Filters, Ideals };

/// The lattice of filters of a finite lattice (or dually of ideals), with the
/// canonical embedding x -> Fg{x} (resp. x -> Ig{x}). For a finite base every
/// filter is principal and the embedding is an order isomorphism; both facts
/// are asserted during construction.
class FilterLattice {
 public:
  const FiniteLattice& base() const { return base_; }
  CompletionKind kind() const { return kind_; }

  int count() const { return static_cast<int>(sets_.size()); }
  const Bits& members(int f) const { return sets_[f].members; }
  /// Principal generator in the base lattice.
  int generator(int f) const { return gens_[f]; }

  /// Lattice over filter indices. Filters are ordered by reverse inclusion,
  /// ideals by inclusion.
  const FiniteLattice& structure() const { return structure_; }

  int embed(int x) const { return embed_[x]; }
  int index_of(const Bits& set) const;

  friend FilterLattice fil_lattice(const FiniteLattice& L);
  friend FilterLattice idl_lattice(const FiniteLattice& L);

 private:
  FilterLattice() = default;
  static FilterLattice build(const FiniteLattice& L, CompletionKind kind);

  FiniteLattice base_;
  CompletionKind kind_ = CompletionKind::Filters;
  std::vector<Filter> sets_;
  std::vector<int> gens_;
  FiniteLattice structure_;
  std::vector<int> embed_;
};

FilterLattice fil_lattice(const FiniteLattice& L);
FilterLattice idl_lattice(const FiniteLattice& L);

/// Maximal elements of F - G for a filter covering F < G (NotACovering
/// otherwise).
std::vector<int> max_diff(const FilterLattice& FL, int f, int g);

/// A pair <x, H> with Fg{x} covered by H in the filter lattice.
struct MaximalBasedFilter {
  int base_elem = 0;
  int filter = 0;  // index into the filter lattice
};

/// The maximal based filters <x, Fg{x} v G> determined by the covering F < G,
/// one per x in F - G.
std::vector<MaximalBasedFilter> maximal_based_filters_of(const FilterLattice& FL, int f, int g);

/// Projective equivalence of maximal based filters, decided through the
/// associated filter coverings Fg{x} < H.
bool mbf_equiv(const FilterLattice& FL, const MaximalBasedFilter& m1,
               const MaximalBasedFilter& m2);

enum class CoveringKind { Atomic, QuasiAtomic, Anomalous };
const char* covering_kind_name(CoveringKind k);

/// Classifies a filter covering through its determined maximal based filters:
/// Atomic when the determined filter is principal, QuasiAtomic when it is not
/// principal but has a member y with (x < z <= y implies z in H), Anomalous
/// otherwise. All determined maximal based filters must agree (checked).
/// Over a finite base the result is always Atomic.
CoveringKind classify(const FilterLattice& FL, int f, int g);

struct EquivalenceVerdict {
  bool pass = true;
  Covering lhs{}, rhs{};  // witness pair when !pass
};

struct TransposeLemmaVerdict {
  bool pass = true;
  Covering from{}, to{};  // witness filter coverings when !pass
};

/// For every transposed pair of filter coverings F<G up to F'<G', the
/// difference and its maxima restrict along the transpose:
/// F'-G' = F' ∩ (F-G) and M(F'-G') = F' ∩ M(F-G). Checked exhaustively.
TransposeLemmaVerdict check_max_diff_lemma(const FilterLattice& FL);

/// Coverings are projectively equivalent in L exactly when their canonical
/// images are projectively equivalent in Fil L. Requires modularity
/// (NotModular).
EquivalenceVerdict check_embedding_equivalence(const FiniteLattice& L);

}  // namespace latlab
