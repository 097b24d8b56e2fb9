#include "latlab/report.hpp"

namespace latlab {

Report::Section& Report::section(const std::string& title) {
  for (auto& s : sections)
    if (s.title == title) return s;
  sections.push_back({title, {}});
  return sections.back();
}

void Report::check(const std::string& name, bool pass, const std::string& witness) {
  verdicts.push_back({name, pass, pass ? "" : witness});
}

bool Report::all_pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

void Report::render_text(std::ostream& os) const {
  os << "latlab " << command << "\n";
  os << "input: " << input_digest << "\n";
  for (const auto& s : sections) {
    os << "== " << s.title << "\n";
    for (const auto& r : s.rows) os << "  " << r << "\n";
  }
  if (!verdicts.empty()) {
    os << "checks:\n";
    for (const auto& v : verdicts) {
      os << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.name;
      if (!v.witness.empty()) os << ": " << v.witness;
      os << "\n";
    }
  }
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["command"] = command;
  j["input"] = input_digest;
  auto secs = nlohmann::ordered_json::array();
  for (const auto& s : sections) {
    nlohmann::ordered_json sj;
    sj["title"] = s.title;
    sj["rows"] = s.rows;
    secs.push_back(std::move(sj));
  }
  j["sections"] = std::move(secs);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json vj;
    vj["name"] = v.name;
    vj["pass"] = v.pass;
    if (!v.witness.empty()) vj["witness"] = v.witness;
    checks.push_back(std::move(vj));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

}  // namespace latlab
