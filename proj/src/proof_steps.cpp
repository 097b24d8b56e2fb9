#include "latlab/proof_steps.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace latlab::logic {

BoolAlgebra::BoolAlgebra(std::vector<std::string> generator_names)
    : g_(static_cast<int>(generator_names.size())), names_(std::move(generator_names)) {
  if (g_ < 1 || g_ > 16) fail(Err::ParamOutOfRange, "generator count must be 1..16");
  for (const auto& n : names_)
    if (n.empty() || n == "true" || n == "false")
      fail(Err::ParamOutOfRange, "bad generator name: '" + n + "'");
}

Bits BoolAlgebra::var(int i) const {
  Bits t(assignments());
  for (int a = 0; a < assignments(); ++a)
    if (truth(i, a)) t.set(a);
  return t;
}

std::string BoolAlgebra::table_string(const Bits& t) const {
  std::string s(assignments(), '0');
  for (int a = 0; a < assignments(); ++a)
    if (t.test(a)) s[a] = '1';
  return s;
}

std::string BoolAlgebra::assignment_string(int a) const {
  std::string s;
  for (int i = 0; i < g_; ++i) {
    if (i) s += ' ';
    s += names_[i] + "=" + (truth(i, a) ? "1" : "0");
  }
  return s;
}

namespace {

// Recursive-descent parser over: impl := or ('->' impl)?; or := and ('|' and)*;
// and := unary ('&' unary)*; unary := '!' unary | '(' impl ')' | atom.
struct Parser {
  const BoolAlgebra& B;
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(Err::ParseError, what + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  Bits parse_impl() {
    Bits lhs = parse_or();
    skip_ws();
    if (eat("->")) {
      Bits rhs = parse_impl();  // right-associative
      return ~lhs | rhs;
    }
    return lhs;
  }

  Bits parse_or() {
    Bits v = parse_and();
    while (true) {
      skip_ws();
      // '|' but not part of '->'; no two-char tokens start with '|'.
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        v = v | parse_and();
      } else {
        return v;
      }
    }
  }

  Bits parse_and() {
    Bits v = parse_unary();
    while (eat("&")) v = v & parse_unary();
    return v;
  }

  Bits parse_unary() {
    skip_ws();
    if (eat("!")) return ~parse_unary();
    if (eat("(")) {
      Bits v = parse_impl();
      if (!eat(")")) error("expected ')'");
      return v;
    }
    return parse_atom();
  }

  Bits parse_atom() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) error("expected a proposition");
    std::string_view word = text.substr(start, pos - start);
    if (word == "true") return B.top();
    if (word == "false") return B.bottom();
    for (int i = 0; i < B.generators(); ++i)
      if (B.names()[i] == word) return B.var(i);
    fail(Err::UnknownGenerator, std::string(word));
  }
};

}  // namespace

Bits BoolAlgebra::parse(std::string_view text) const {
  Parser p{*this, text};
  Bits v = p.parse_impl();
  p.skip_ws();
  if (p.pos != text.size()) p.error("unexpected trailing input");
  return v;
}

Pretheory pretheory_from(const BoolAlgebra& B, const std::vector<Bits>& premises) {
  Bits gen = B.top();
  for (const auto& p : premises) gen = gen & p;
  return Pretheory{gen};
}

Pretheory closure(const BoolAlgebra&, const Pretheory& T,
                  const std::vector<InferenceInstance>& instances) {
  Bits gen = T.generator;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& inst : instances) {
      bool applicable = true;
      for (const auto& p : inst.premises)
        if (!gen.is_subset_of(p)) {
          applicable = false;
          break;
        }
      if (!applicable) continue;
      Bits next = gen & inst.conclusion;
      if (next != gen) {
        gen = next;
        changed = true;
      }
    }
  }
  return Pretheory{gen};
}

StepSet steps(const BoolAlgebra& B, const Pretheory& T, const Bits& goal,
              int completion_rank) {
  if (completion_rank < 1) fail(Err::ParamOutOfRange, "completion rank must be >= 1");
  (void)B;
  return T.generator.and_not(goal);
}

namespace {

Bits instance_covered(const BoolAlgebra& B, const InferenceInstance& inst) {
  Bits prem = B.top();
  for (const auto& p : inst.premises) prem = prem & p;
  return prem.and_not(inst.conclusion & prem);
}

}  // namespace

StepSet covered(const BoolAlgebra& B, const std::vector<InferenceInstance>& instances) {
  Bits out = B.bottom();
  for (const auto& inst : instances) out = out | instance_covered(B, inst);
  return out;
}

StepSet covered_by_generating(const BoolAlgebra& B, const Pretheory& T,
                              const std::vector<InferenceInstance>& instances) {
  Pretheory closed = closure(B, T, instances);
  Bits out = B.bottom();
  for (const auto& inst : instances) {
    bool usable = std::all_of(inst.premises.begin(), inst.premises.end(),
                              [&](const Bits& p) { return closed.contains(p); });
    if (usable) out = out | instance_covered(B, inst);
  }
  return out;
}

bool is_trivial_instance(const BoolAlgebra& B, const InferenceInstance& inst) {
  Bits prem = B.top();
  for (const auto& p : inst.premises) prem = prem & p;
  bool trivial = BoolAlgebra::leq(prem, inst.conclusion);
  if (trivial != instance_covered(B, inst).none())
    throw std::logic_error("trivial-instance routes disagree");
  return trivial;
}

CoverageVerdict verify_coverage_theorem(const BoolAlgebra& B, const Pretheory& T,
                                        const Bits& goal,
                                        const std::vector<InferenceInstance>& instances) {
  CoverageVerdict v;
  Pretheory closed = closure(B, T, instances);
  v.goal_in_closure = closed.contains(goal);

  StepSet need = steps(B, T, goal);
  StepSet have = covered(B, instances);
  v.steps_covered = need.is_subset_of(have);
  v.steps_covered_by_generating = need.is_subset_of(covered_by_generating(B, T, instances));

  Bits missing = need.and_not(have);
  if (missing.any()) v.uncovered_assignment = missing.to_indices().front();

  v.pass = v.goal_in_closure == v.steps_covered;
  return v;
}

ProofProblem proof_problem_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("goal"))
    fail(Err::ParseError, "proof problem needs \"generators\" and \"goal\"");
  BoolAlgebra B(j.at("generators").get<std::vector<std::string>>());
  std::vector<Bits> premises;
  if (j.contains("premises"))
    for (const auto& s : j.at("premises")) premises.push_back(B.parse(s.get<std::string>()));
  Bits goal = B.parse(j.at("goal").get<std::string>());
  std::vector<InferenceInstance> instances;
  if (j.contains("instances"))
    for (const auto& inst : j.at("instances")) {
      InferenceInstance out;
      if (inst.contains("from"))
        for (const auto& s : inst.at("from")) out.premises.push_back(B.parse(s.get<std::string>()));
      out.conclusion = B.parse(inst.at("to").get<std::string>());
      instances.push_back(std::move(out));
    }
  return ProofProblem{std::move(B), std::move(premises), std::move(goal), std::move(instances)};
}

ProofProblem load_proof_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, path + ": " + e.what());
  }
  return proof_problem_from_json(j);
}

}  // namespace latlab::logic
