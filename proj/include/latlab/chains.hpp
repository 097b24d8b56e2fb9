#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latlab/coverings.hpp"
#include "latlab/finite_lattice.hpp"

namespace latlab {

/// Chain enumeration cap; counts explode combinatorially, so enumeration is
/// truncated and the truncation is reported, never silently ignored.
inline constexpr std::size_t kDefaultChainLimit = 100000;

struct MaximalChain {
  std::vector<int> elements;  // bottom to top, consecutive pairs are coverings
};

/// Depth-first walk over the cover relation from bottom. Stops after yielding
/// `limit` chains; returns true when more chains were left.
bool for_each_maximal_chain(const FiniteLattice& L, std::size_t limit,
                            const std::function<void(const MaximalChain&)>& fn);

struct ChainSet {
  std::vector<MaximalChain> chains;
  bool truncated = false;
};

ChainSet maximal_chains(const FiniteLattice& L, std::size_t limit = kDefaultChainLimit);

/// Number of consecutive pairs of C that belong to class K. C must be a chain
/// of L (strictly ascending); throws NotAChain otherwise.
int mu_c(const FiniteLattice& L, const MaximalChain& C, const CoveringClass& K);

struct MultiplicityReport {
  int class_id = 0;
  std::vector<int> per_chain_counts;  // indexed by enumeration order
  bool weakly_regular = false;
  std::optional<int> mu;  // set when weakly regular
  int sup_mu = 0;
  int upsilon = 0;  // sup_mu + 1, the least bound exceeding every count
  int lambda = 0;   // least count over maximal chains
  bool chains_truncated = false;  // verdicts are sampled when set
};

std::vector<MultiplicityReport> weak_regularity_report(const FiniteLattice& L,
                                                       std::size_t limit = kDefaultChainLimit);

struct IntervalMu {
  int mu = 0;
  bool constant = true;
  int other = 0;  // a differing count when !constant
  bool truncated = false;
};

/// The multiplicity of K inside I[a,b], constant across maximal chains of the
/// interval when K is weakly regular with finite multiplicity in L (checked;
/// throws NotWeaklyRegular).
IntervalMu interval_mu(const FiniteLattice& L, int a, int b, const CoveringClass& K,
                       std::size_t limit = kDefaultChainLimit);

/// Least count strictly exceeding mu_C over all chains; equals max + 1 over
/// maximal chains in a finite lattice.
int upsilon(const FiniteLattice& L, const CoveringClass& K,
            std::size_t limit = kDefaultChainLimit);

/// Least mu_C over maximal chains.
int lambda_bound(const FiniteLattice& L, const CoveringClass& K,
                 std::size_t limit = kDefaultChainLimit);

std::uint64_t isqrt_u64(std::uint64_t n);

/// lambda_value(0) = 0, lambda_value(n) = 1 + lambda_value(isqrt(n) - 1).
/// Integer-exact throughout.
std::uint64_t lambda_value(std::uint64_t n);

struct LambdaTheoremVerdict {
  bool pass = true;
  int descent_length = 0;        // longest stacked descending run of K-coverings
  std::uint64_t lambda_n = 0;    // lambda_value(descent_length)
  int min_mu = 0;
  bool truncated = false;
  std::optional<MaximalChain> violating_chain;
};

/// Checks min mu_C[K] >= lambda_value(n) over maximal chains, where n is the
/// longest chain b1 > a1 >= b2 > a2 >= ... of K-coverings computed by longest
/// path over the covering DAG. Requires a modular lattice (NotModular).
LambdaTheoremVerdict check_lambda_theorem(const FiniteLattice& L, const CoveringClass& K,
                                          std::size_t limit = kDefaultChainLimit);

}  // namespace latlab
