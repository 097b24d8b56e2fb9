#pragma once

#include <string>

#include <json.hpp>

#include "latlab/finite_lattice.hpp"

namespace latlab {

/// {"elements": ["⊥","a",...], "covers": [[0,1],[0,2],...]}
/// [i,j] means element i is covered by element j.
nlohmann::ordered_json lattice_to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const nlohmann::json& j);

FiniteLattice load_lattice_file(const std::string& path);
void save_lattice_file(const FiniteLattice& L, const std::string& path);

}  // namespace latlab
