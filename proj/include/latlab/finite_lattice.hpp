#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latlab/bits.hpp"
#include "latlab/errors.hpp"

namespace latlab {

#ifndef LATLAB_MAX_ELEMENTS
#define LATLAB_MAX_ELEMENTS 4096
#endif

/// Hard cap on element count; bounds the O(n^2) meet/join tables.
inline constexpr int kMaxElements = LATLAB_MAX_ELEMENTS;

/// A finite bounded lattice given by its Hasse diagram, validated on
/// construction. Elements are dense indices 0..n-1; labels are metadata.
/// Immutable after construction and safe to share across threads.
class FiniteLattice {
 public:
  /// Empty placeholder; every usable instance comes from build_from_covers.
  FiniteLattice() = default;

  /// Validates the cover relation and builds order, meet and join tables.
  /// The pairs must be exactly the covers (the transitive reduction) of a
  /// bounded lattice order. Throws CycleDetected, NoBoundedOrder or
  /// NotALattice otherwise.
  static FiniteLattice build_from_covers(std::vector<std::string> names,
                                         std::vector<std::pair<int, int>> cover_pairs);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int a) const { return names_[a]; }

  bool leq(int a, int b) const { return up_[a].test(b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Cover pairs (lower, upper), sorted lexicographically.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int a) const { return up_adj_[a]; }
  const std::vector<int>& lower_covers(int a) const { return down_adj_[a]; }

  /// {z : a <= z} as a bitset.
  const Bits& up_set(int a) const { return up_[a]; }
  /// {z : z <= a} as a bitset.
  const Bits& down_set(int a) const { return down_[a]; }

  /// Indices in some linear extension of the order (used by algorithms that
  /// scan for maxima/minima of subsets).
  int rank(int a) const { return rank_[a]; }

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Bits> up_, down_;
  std::vector<int> meet_, join_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_adj_, down_adj_;
  std::vector<int> rank_;
  int bottom_ = 0, top_ = 0;
};

bool is_modular(const FiniteLattice& L);
bool is_distributive(const FiniteLattice& L);

/// Order-reversed lattice; meets and joins swap. Labels are preserved.
FiniteLattice dual(const FiniteLattice& L);

/// Direct product, ordered componentwise.
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

/// The interval sublattice I[lo,hi] of a parent lattice.
struct Interval {
  const FiniteLattice* parent;
  int lo, hi;
  std::vector<int> members;  // sorted parent indices

  /// The induced lattice; element i corresponds to members[i].
  FiniteLattice as_lattice() const;
};

/// Throws NotComparable if a is not below b.
Interval interval(const FiniteLattice& L, int a, int b);

}  // namespace latlab
