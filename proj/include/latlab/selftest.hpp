#pragma once

#include <string>
#include <vector>

#include "latlab/finite_lattice.hpp"
#include "latlab/report.hpp"

namespace latlab {

struct NamedFixture {
  std::string name;
  FiniteLattice lattice;
};

/// Fixtures embedded in the binary so the self test runs without input files.
const std::vector<NamedFixture>& bundled_fixtures();

/// Deterministic suite over all bundled fixtures plus the ladder and the
/// propositional examples.
Report run_selftest(std::size_t chain_limit);

}  // namespace latlab
