#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latlab/bits.hpp"
#include "latlab/errors.hpp"

namespace latlab::logic {

/// Free boolean algebra on up to 16 named generators. Elements are truth
/// tables over the 2^g assignments, stored as bitsets; bit a of a table is
/// the element's value at assignment a. Generator i is read off bit (g-1-i)
/// of the assignment index, so assignment order matches the generators read
/// as binary digits left to right.
class BoolAlgebra {
 public:
  explicit BoolAlgebra(std::vector<std::string> generator_names);

  int generators() const { return g_; }
  int assignments() const { return 1 << g_; }
  const std::vector<std::string>& names() const { return names_; }

  Bits top() const { return Bits::full(assignments()); }
  Bits bottom() const { return Bits(assignments()); }
  Bits var(int i) const;
  bool truth(int generator, int assignment) const {
    return assignment >> (g_ - 1 - generator) & 1;
  }

  static bool leq(const Bits& p, const Bits& q) { return p.is_subset_of(q); }

  /// Grammar: atom | !e | e & e | e "|" e | e -> e | (e) | true | false,
  /// precedence ! > & > | > ->, implication right-associative. Implication
  /// desugars to !p | q. Throws ParseError (with position) and
  /// UnknownGenerator.
  Bits parse(std::string_view text) const;

  /// Table as a 0/1 string over assignments 0..2^g-1.
  std::string table_string(const Bits& t) const;
  /// e.g. "p=1 q=0"
  std::string assignment_string(int a) const;

 private:
  int g_ = 0;
  std::vector<std::string> names_;
};

/// A filter of the boolean algebra, represented by its principal generator;
/// contains exactly the propositions above the generator. Closed under the
/// trivial inference rules (conjoining, and passing upward in the order).
struct Pretheory {
  Bits generator;

  bool contains(const Bits& q) const { return generator.is_subset_of(q); }
};

struct InferenceInstance {
  std::vector<Bits> premises;
  Bits conclusion;
};

/// A set of assignments; each assignment names the ultrafilter of
/// propositions true under it.
using StepSet = Bits;

Pretheory pretheory_from(const BoolAlgebra& B, const std::vector<Bits>& premises);

/// Least pretheory above T closed under the instances: conjoin the conclusion
/// of every instance whose premises are all contained, to a fixpoint.
Pretheory closure(const BoolAlgebra& B, const Pretheory& T,
                  const std::vector<InferenceInstance>& instances);

/// Assignments at which T holds but the goal fails. The ultrafilters of the
/// completions of higher rank collapse to the same assignment set for a
/// finite algebra; completion_rank is accepted for interface parity and must
/// be >= 1.
StepSet steps(const BoolAlgebra& B, const Pretheory& T, const Bits& goal,
              int completion_rank = 1);

/// Union over instances of the assignments where every premise holds and the
/// conclusion fails.
StepSet covered(const BoolAlgebra& B, const std::vector<InferenceInstance>& instances);

/// Like covered, but only over instances whose premises end up inside
/// closure(T, instances), i.e. the instances a derivation from T can
/// actually use. Membership of the goal in the closure is equivalent to
/// coverage by these instances, for arbitrary instance sets.
StepSet covered_by_generating(const BoolAlgebra& B, const Pretheory& T,
                              const std::vector<InferenceInstance>& instances);

/// Premises-conjunction below conclusion; cross-checked against covered of
/// the single instance being empty.
bool is_trivial_instance(const BoolAlgebra& B, const InferenceInstance& inst);

struct CoverageVerdict {
  bool pass = false;                 // goal_in_closure == steps_covered
  bool goal_in_closure = false;
  bool steps_covered = false;        // steps(T,goal) within covered(instances)
  bool steps_covered_by_generating = false;
  std::optional<int> uncovered_assignment;  // witness when steps not covered
};

/// Checks goal ∈ closure(T, N) against coverage of steps(T, goal) by N.
CoverageVerdict verify_coverage_theorem(const BoolAlgebra& B, const Pretheory& T,
                                        const Bits& goal,
                                        const std::vector<InferenceInstance>& instances);

/// {"generators": [...], "premises": [...], "goal": "...",
///  "instances": [{"from": [...], "to": "..."}]}
struct ProofProblem {
  BoolAlgebra algebra;
  std::vector<Bits> premises;
  Bits goal;
  std::vector<InferenceInstance> instances;
};

ProofProblem proof_problem_from_json(const nlohmann::json& j);
ProofProblem load_proof_problem(const std::string& path);

}  // namespace latlab::logic
