#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace latlab {

/// Deterministic, diffable CLI report: text plus a JSON mirror.
struct Report {
  struct Verdict {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing
  };
  struct Section {
    std::string title;
    std::vector<std::string> rows;
  };

  std::string command;
  std::string input_digest;
  std::vector<Section> sections;
  std::vector<Verdict> verdicts;

  Section& section(const std::string& title);
  void check(const std::string& name, bool pass, const std::string& witness = "");

  bool all_pass() const;
  void render_text(std::ostream& os) const;
  nlohmann::ordered_json to_json() const;
};

/// FNV-1a hash of raw bytes, hex-encoded; used as the inputs digest.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace latlab
