#include "latlab/lattice_json.hpp"

#include <fstream>

namespace latlab {

nlohmann::ordered_json lattice_to_json(const FiniteLattice& L) {
  nlohmann::ordered_json j;
  j["elements"] = L.names();
  auto covers = nlohmann::ordered_json::array();
  for (auto [a, b] : L.covers()) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  return j;
}

FiniteLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    fail(Err::NotALattice, "lattice JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& pair : j.at("covers")) {
    if (!pair.is_array() || pair.size() != 2)
      fail(Err::NotALattice, "cover entries must be [lower, upper] pairs");
    covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

FiniteLattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::NotALattice, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, path + ": " + e.what());
  }
  return lattice_from_json(j);
}

void save_lattice_file(const FiniteLattice& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Err::NotALattice, "cannot open " + path + " for writing");
  out << lattice_to_json(L).dump(2) << "\n";
}

}  // namespace latlab
