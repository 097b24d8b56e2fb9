#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latlab/chains.hpp"
#include "latlab/completions.hpp"
#include "latlab/coverings.hpp"
#include "latlab/fixtures.hpp"
#include "latlab/lattice_json.hpp"
#include "latlab/omega_ladder.hpp"
#include "latlab/proof_steps.hpp"
#include "latlab/report.hpp"
#include "latlab/selftest.hpp"

namespace {

using namespace latlab;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t chain_cap(std::size_t cli_value, bool cli_set) {
  if (cli_set) return cli_value;
  if (const char* env = std::getenv("LATLAB_MAX_CHAINS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultChainLimit;
}

std::string cover_str(const FiniteLattice& L, Covering c) {
  return L.name(c.lower) + "<" + L.name(c.upper);
}

Report cmd_check(const std::string& path) {
  Report rep;
  rep.command = "check";
  rep.input_digest = fnv1a_hex(slurp(path));
  FiniteLattice L = load_lattice_file(path);
  auto& sec = rep.section("lattice");
  sec.rows.push_back("elements: " + std::to_string(L.size()));
  sec.rows.push_back("covers: " + std::to_string(L.covers().size()));
  sec.rows.push_back("bottom: " + L.name(L.bottom()));
  sec.rows.push_back("top: " + L.name(L.top()));
  sec.rows.push_back(std::string("modular: ") + (is_modular(L) ? "true" : "false"));
  sec.rows.push_back(std::string("distributive: ") + (is_distributive(L) ? "true" : "false"));
  rep.check("valid lattice", true);
  return rep;
}

Report cmd_coverings(const std::string& path) {
  Report rep;
  rep.command = "coverings";
  rep.input_digest = fnv1a_hex(slurp(path));
  FiniteLattice L = load_lattice_file(path);
  auto classes = projective_classes(L);
  auto& sec = rep.section("projective classes");
  for (const auto& k : classes) {
    std::string row = "class " + std::to_string(k.id) + ":";
    for (auto c : k.members) row += " " + cover_str(L, c);
    sec.rows.push_back(row);
  }
  auto mi = meet_irreducibles(L);
  std::string mrow = "meet-irreducible:";
  for (int m : mi) mrow += " " + L.name(m);
  rep.section("elements").rows.push_back(mrow);
  rep.check("classes partition the coverings", [&] {
    std::size_t total = 0;
    for (const auto& k : classes) total += k.members.size();
    return total == L.covers().size();
  }());
  return rep;
}

Report cmd_chains(const std::string& path, std::size_t cap, int only_class) {
  Report rep;
  rep.command = "chains";
  rep.input_digest = fnv1a_hex(slurp(path));
  FiniteLattice L = load_lattice_file(path);
  const bool modular = is_modular(L);
  auto classes = projective_classes(L);
  auto reports = weak_regularity_report(L, cap);

  auto& sec = rep.section("multiplicity per class");
  sec.rows.push_back("class | weakly-regular | mu | upsilon | lambda | lower-bound-check");
  for (const auto& r : reports) {
    if (only_class >= 0 && r.class_id != only_class) continue;
    std::ostringstream row;
    row << r.class_id << " | ";
    row << (r.weakly_regular ? "yes" : "no") << (r.chains_truncated ? " (sampled)" : "") << " | ";
    if (r.mu)
      row << *r.mu;
    else
      row << "[" << r.lambda <<".." << r.sup_mu << "]";
    row << " | " << r.upsilon << " | " << r.lambda << " | ";
    if (modular) {
      auto verdict = check_lambda_theorem(L, classes[r.class_id], cap);
      row << (verdict.pass ? "pass" : "fail") << " (n=" << verdict.descent_length
          << ", bound=" << verdict.lambda_n << ")";
      rep.check("lower bound holds for class " + std::to_string(r.class_id), verdict.pass);
    } else {
      row << "n/a (not modular)";
    }
    sec.rows.push_back(row.str());
  }
  return rep;
}

Report cmd_filters(const std::string& path) {
  Report rep;
  rep.command = "filters";
  rep.input_digest = fnv1a_hex(slurp(path));
  FiniteLattice L = load_lattice_file(path);
  FilterLattice FL = fil_lattice(L);
  FilterLattice IL = idl_lattice(L);

  auto& sec = rep.section("completions");
  sec.rows.push_back("filters: " + std::to_string(FL.count()));
  sec.rows.push_back("ideals: " + std::to_string(IL.count()));
  rep.check("filter lattice isomorphic to base via Fg", FL.count() == L.size());
  rep.check("ideal lattice isomorphic to base via Ig", IL.count() == L.size());

  const bool modular = is_modular(L);
  auto& covs = rep.section("filter coverings");
  for (auto c : coverings(FL.structure())) {
    std::ostringstream row;
    row << FL.structure().name(c.lower) << " < " << FL.structure().name(c.upper) << " : ";
    // The atomic/quasi-atomic/anomalous taxonomy needs a modular base.
    row << (modular ? covering_kind_name(classify(FL, c.lower, c.upper)) : "unclassified");
    row << ", max-diff {";
    auto m = max_diff(FL, c.lower, c.upper);
    for (std::size_t i = 0; i < m.size(); ++i) row << (i ? "," : "") << L.name(m[i]);
    row << "}";
    covs.rows.push_back(row.str());
  }
  if (!modular)
    rep.section("completions").rows.push_back("base not modular: covering kinds skipped");
  if (L.size() <= 50) {
    auto lemma = check_max_diff_lemma(FL);
    rep.check("difference maxima restrict along transposes", lemma.pass);
  }
  if (modular) {
    auto eq = check_embedding_equivalence(L);
    rep.check("projective classes preserved by embedding", eq.pass);
  }
  return rep;
}

Report cmd_omega(const std::string& fixture, int depth) {
  Report rep;
  rep.command = "omega";
  rep.input_digest = fixture;
  if (fixture != "ladder") fail(Err::UnknownFixture, fixture);

  auto w = ladder::regularity_witness();
  auto& sec = rep.section("witness");
  sec.rows.push_back("mu(C1, crossing class) = " + w.mu_c1_a.str());
  sec.rows.push_back("mu(C2, crossing class) = " + w.mu_c2_a.str());
  sec.rows.push_back("mu(C1, rung class) = " + w.mu_c1_b.str());
  sec.rows.push_back(std::string("bottom covering: ") + covering_kind_name(w.bottom_kind));
  sec.rows.push_back(std::string("limit covering: ") + covering_kind_name(w.crossing_kind));
  for (const auto& n : w.notes) sec.rows.push_back(n);

  rep.check("crossing class not weakly regular", !w.class_a_weakly_regular);
  rep.check("crossing class not lower regular", !w.class_a_lower_regular);
  rep.check("filter chains agree on crossing class", w.fil_class_a_multiplicity_constant);
  rep.check("bottom covering quasi-atomic", w.bottom_kind == CoveringKind::QuasiAtomic);
  rep.check("limit covering atomic", w.crossing_kind == CoveringKind::Atomic);

  bool consistent = true, classes_ok = true;
  for (int k = 1; k <= depth; ++k) {
    consistent = consistent && ladder::truncation_consistent(k);
    classes_ok = classes_ok && ladder::truncation_classes_consistent(k);
  }
  rep.section("truncations")
      .rows.push_back("checked depths 1.." + std::to_string(depth));
  rep.check("truncations match closed forms", consistent);
  rep.check("truncation classes match closed forms", classes_ok);
  return rep;
}

Report cmd_proof(const std::string& path, int rank) {
  Report rep;
  rep.command = "proof";
  rep.input_digest = fnv1a_hex(slurp(path));
  logic::ProofProblem prob = logic::load_proof_problem(path);
  const auto& B = prob.algebra;

  logic::Pretheory T = logic::pretheory_from(B, prob.premises);
  logic::Pretheory closed = logic::closure(B, T, prob.instances);
  logic::StepSet need = logic::steps(B, T, prob.goal, rank);
  logic::StepSet have = logic::covered(B, prob.instances);
  logic::StepSet have_gen = logic::covered_by_generating(B, T, prob.instances);
  auto verdict = logic::verify_coverage_theorem(B, T, prob.goal, prob.instances);

  auto& sec = rep.section("problem");
  std::string gens;
  for (const auto& n : B.names()) gens += (gens.empty() ? "" : ",") + n;
  sec.rows.push_back("generators: " + gens);
  if (rank != 1)
    sec.rows.push_back("order rank " + std::to_string(rank) +
                       " collapses to rank 1 over a finite algebra");
  sec.rows.push_back("pretheory generator: " + B.table_string(T.generator));
  sec.rows.push_back("closure generator:   " + B.table_string(closed.generator));
  sec.rows.push_back("goal:                " + B.table_string(prob.goal));

  auto list_assignments = [&](const logic::StepSet& s) {
    std::vector<std::string> rows;
    s.for_each([&](int a) { rows.push_back("  " + B.assignment_string(a)); });
    if (rows.empty()) rows.push_back("  (none)");
    return rows;
  };
  auto& st = rep.section("steps of the proof");
  for (auto& r : list_assignments(need)) st.rows.push_back(r);
  auto& cv = rep.section("covered by instances");
  for (auto& r : list_assignments(have)) cv.rows.push_back(r);
  auto& cg = rep.section("covered by generating instances");
  for (auto& r : list_assignments(have_gen)) cg.rows.push_back(r);

  auto& insts = rep.section("instances");
  for (std::size_t i = 0; i < prob.instances.size(); ++i) {
    const auto& inst = prob.instances[i];
    std::ostringstream row;
    row << i << ": ";
    for (std::size_t j = 0; j < inst.premises.size(); ++j)
      row << (j ? ", " : "") << B.table_string(inst.premises[j]);
    row << " => " << B.table_string(inst.conclusion)
        << (logic::is_trivial_instance(B, inst) ? " [trivial]" : " [nontrivial]");
    insts.rows.push_back(row.str());
  }

  rep.section("result").rows.push_back(
      std::string("goal derivable: ") + (verdict.goal_in_closure ? "yes" : "no"));
  rep.check("derivability matches step coverage", verdict.pass);
  rep.check("derivability matches generating-instance coverage",
            verdict.goal_in_closure == verdict.steps_covered_by_generating);
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latlab: finite lattices, covering classes, chain multiplicities, "
               "filter/ideal completions, and propositional proof steps"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the JSON mirror of the report");

  std::string path;
  std::size_t max_chains = kDefaultChainLimit;
  int only_class = -1;
  std::string fixture = "ladder";
  int depth = 8;
  int rank = 1;

  auto* check = app.add_subcommand("check", "validate a lattice file");
  check->add_option("file", path)->required();

  auto* covs = app.add_subcommand("coverings", "projective classes of a lattice file");
  covs->add_option("file", path)->required();

  auto* chains = app.add_subcommand("chains", "chain multiplicities of a lattice file");
  chains->add_option("file", path)->required();
  auto* mc = chains->add_option("--max-chains", max_chains, "chain enumeration cap");
  chains->add_option("--class", only_class, "restrict to one class id");

  auto* filters = app.add_subcommand("filters", "filter/ideal completions of a lattice file");
  filters->add_option("file", path)->required();

  auto* omega = app.add_subcommand("omega", "symbolic infinite fixtures");
  omega->add_option("--fixture", fixture, "fixture name (ladder)");
  omega->add_option("--depth", depth, "truncation consistency depth");

  auto* proof = app.add_subcommand("proof", "analyze a proof problem file");
  proof->add_option("file", path)->required();
  proof->add_option("--order-rank", rank, "completion rank (collapses for finite algebras)");

  auto* selftest = app.add_subcommand("selftest", "run the bundled fixture suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    Report rep;
    if (check->parsed()) rep = cmd_check(path);
    else if (covs->parsed()) rep = cmd_coverings(path);
    else if (chains->parsed()) rep = cmd_chains(path, chain_cap(max_chains, mc->count() > 0), only_class);
    else if (filters->parsed()) rep = cmd_filters(path);
    else if (omega->parsed()) rep = cmd_omega(fixture, depth);
    else if (proof->parsed()) rep = cmd_proof(path, rank);
    else if (selftest->parsed()) rep = run_selftest(chain_cap(kDefaultChainLimit, false));

    if (as_json)
      std::cout << rep.to_json().dump(2) << "\n";
    else
      rep.render_text(std::cout);
    return rep.all_pass() ? 0 : 1;
  } catch (const LatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
