#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latlab/finite_lattice.hpp"

namespace latlab {

FiniteLattice chain_lattice(int coverings);
FiniteLattice boolean_cube(int dims);
FiniteLattice m5();
FiniteLattice n5();
FiniteLattice downsets_of_random_poset(int points, std::uint32_t seed);
/// All subspaces of GF(p)^d ordered by inclusion. p must be prime.
FiniteLattice subspace_lattice(int p, int d);

/// Fixture generator addressed by name, as used by the CLI.
///
/// kinds: chain [k] | boolean [d] | diamond_m5 | pentagon_n5 |
///        downsets_of_random_poset [n seed] | subspace_lattice [p d] |
///        product [spec spec]
///
/// A product spec is a prefix-encoded pair of fixtures over integer kind
/// codes: 0=chain 1=boolean 2=diamond_m5 3=pentagon_n5
/// 4=downsets_of_random_poset 5=subspace_lattice 6=product, each followed by
/// its own parameters, e.g. product [2, 0, 3] is diamond_m5 x chain(3).
FiniteLattice gen_fixture(const std::string& kind, const std::vector<long long>& params);

}  // namespace latlab
