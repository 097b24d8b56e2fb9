// Acceptance gate: one check per numbered criterion, each printed as a
// PASS/FAIL line. Exits nonzero when any criterion fails.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latlab/chains.hpp"
#include "latlab/completions.hpp"
#include "latlab/coverings.hpp"
#include "latlab/fixtures.hpp"
#include "latlab/lattice_json.hpp"
#include "latlab/omega_ladder.hpp"
#include "latlab/proof_steps.hpp"
#include "latlab/selftest.hpp"

using namespace latlab;

namespace {

int failures = 0;
std::vector<std::string> detail;

void criterion(int number, const std::string& what, bool pass) {
  std::printf("CRITERION %2d: %s - %s\n", number, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) {
    ++failures;
    for (const auto& d : detail) std::printf("    %s\n", d.c_str());
  }
  detail.clear();
}

struct Fx {
  std::string name;
  FiniteLattice lattice;
};

// Criterion 1's fixture catalog: the named modular lattices plus products up
// to 200 elements, with the non-modular pentagon and the distributive
// generators riding along for criteria 2 and 4.
std::vector<Fx> fixture_catalog() {
  std::vector<Fx> out;
  out.push_back({"m5", m5()});
  for (int d = 1; d <= 4; ++d) out.push_back({"boolean" + std::to_string(d), boolean_cube(d)});
  out.push_back({"subspace_gf2_d2", subspace_lattice(2, 2)});
  out.push_back({"subspace_gf2_d3", subspace_lattice(2, 3)});
  out.push_back({"subspace_gf3_d2", subspace_lattice(3, 2)});
  for (int k = 1; k <= 6; ++k)
    out.push_back({"ladder_trunc" + std::to_string(k), ladder::truncate(k)});
  out.push_back({"m5_x_m5", product(m5(), m5())});
  out.push_back({"m5_x_boolean2", product(m5(), boolean_cube(2))});
  out.push_back({"subspace22_x_subspace22", product(subspace_lattice(2, 2), subspace_lattice(2, 2))});
  out.push_back({"m5_x_subspace23", product(m5(), subspace_lattice(2, 3))});
  out.push_back({"m5_x_m5_x_boolean2", product(product(m5(), m5()), boolean_cube(2))});
  out.push_back({"subspace23_x_boolean3", product(subspace_lattice(2, 3), boolean_cube(3))});
  out.push_back({"chain9_x_subspace23", product(chain_lattice(9), subspace_lattice(2, 3))});
  out.push_back({"n5", n5()});
  out.push_back({"chain4", chain_lattice(4)});
  out.push_back({"downsets_p6_s1", downsets_of_random_poset(6, 1)});
  out.push_back({"downsets_p7_s3", downsets_of_random_poset(7, 3)});
  out.push_back({"chain3_x_chain4", product(chain_lattice(3), chain_lattice(4))});
  return out;
}

constexpr std::size_t kCap = 100000;

bool dedekind_birkhoff_invariance(const std::vector<Fx>& fixtures) {
  bool ok = true;
  for (const auto& f : fixtures) {
    if (!is_modular(f.lattice)) continue;
    auto reports = weak_regularity_report(f.lattice, kCap);
    for (const auto& r : reports) {
      if (r.chains_truncated) continue;  // exhaustive only below the cap
      if (!r.weakly_regular) {
        ok = false;
        detail.push_back(f.name + " class " + std::to_string(r.class_id) + " varies: [" +
                         std::to_string(r.lambda) + ".." + std::to_string(r.sup_mu) + "]");
      }
    }
  }
  return ok;
}

bool distributive_bound(const std::vector<Fx>& fixtures) {
  bool ok = true;
  for (const auto& f : fixtures) {
    if (!is_distributive(f.lattice)) continue;
    for (const auto& r : weak_regularity_report(f.lattice, kCap))
      if (r.sup_mu > 1) {
        ok = false;
        detail.push_back(f.name + " class " + std::to_string(r.class_id) + " reaches " +
                         std::to_string(r.sup_mu));
      }
  }
  return ok;
}

bool m5_ground_truth() {
  FiniteLattice L = m5();
  auto classes = projective_classes(L);
  if (classes.size() != 1 || classes[0].members.size() != 6) {
    detail.push_back("expected one class of six coverings");
    return false;
  }
  auto chains = maximal_chains(L);
  for (const auto& c : chains.chains)
    if (mu_c(L, c, classes[0]) != 2) {
      detail.push_back("chain with multiplicity != 2");
      return false;
    }
  if (upsilon(L, classes[0]) != 3 || lambda_bound(L, classes[0]) != 2) {
    detail.push_back("upsilon/lambda mismatch");
    return false;
  }
  return true;
}

bool completions_isomorphic(const std::vector<Fx>& fixtures) {
  bool ok = true;
  for (const auto& f : fixtures) {
    const FiniteLattice& L = f.lattice;
    FilterLattice FL = fil_lattice(L);  // construction asserts the embedding
    FilterLattice IL = idl_lattice(L);
    bool iso = FL.count() == L.size() && IL.count() == L.size();
    for (int x = 0; x < L.size() && iso; ++x)
      for (int y = 0; y < L.size() && iso; ++y) {
        if (L.leq(x, y) != FL.structure().leq(FL.embed(x), FL.embed(y))) iso = false;
        if (L.leq(x, y) != IL.structure().leq(IL.embed(x), IL.embed(y))) iso = false;
      }
    if (!iso) {
      ok = false;
      detail.push_back(f.name + ": embedding is not an order isomorphism");
    }
    if (is_modular(L) && !check_embedding_equivalence(L).pass) {
      ok = false;
      detail.push_back(f.name + ": projective classes not preserved");
    }
  }
  return ok;
}

bool max_lemma_exhaustive(const std::vector<Fx>& fixtures) {
  bool ok = true;
  for (const auto& f : fixtures) {
    if (f.lattice.size() > 50) continue;
    auto v = check_max_diff_lemma(fil_lattice(f.lattice));
    if (!v.pass) {
      ok = false;
      detail.push_back(f.name + ": restriction fails for a transposed covering pair");
    }
  }
  return ok;
}

bool diamond_counterexample() {
  FiniteLattice L = m5();
  FilterLattice FL = fil_lattice(L);
  const int a = 1, b = 2, c = 3, top = 4, bot = 0;
  int F = FL.embed(bot), G = FL.embed(b), H = FL.embed(c), K = FL.embed(top);
  if (!is_covering(FL.structure(), {F, G}) || !is_covering(FL.structure(), {H, K})) {
    detail.push_back("expected coverings Fg{bot}<Fg{b} and Fg{c}<Fg{top}");
    return false;
  }
  if (!transposes_up(FL.structure(), {F, G}, {H, K})) {
    detail.push_back("expected the transpose F<G up to H<K");
    return false;
  }
  Bits fg_diff = FL.members(F).and_not(FL.members(G));
  if (!fg_diff.test(a)) {
    detail.push_back("a should lie in F - G");
    return false;
  }
  Bits hk_diff = FL.members(H).and_not(FL.members(K));
  bool dominated = false;
  hk_diff.for_each([&](int w) {
    if (L.leq(a, w)) dominated = true;
  });
  if (dominated) {
    detail.push_back("found w in H - K above a");
    return false;
  }
  return true;
}

bool lambda_function_and_theorem(const std::vector<Fx>& fixtures) {
  // Independent memoized table with its own square root.
  const std::uint64_t limit = 1000000;
  std::vector<std::uint32_t> table(limit + 1, 0);
  // The running root climbs by at most one per step, so the table fills in
  // linear time without touching floating point.
  std::uint64_t root = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    while ((root + 1) * (root + 1) <= n) ++root;
    table[n] = 1 + table[root - 1];
  }

  std::uint64_t prev = 0;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    std::uint64_t v = lambda_value(n);
    if (v != table[n]) {
      detail.push_back("disagrees with the memoized table at " + std::to_string(n));
      return false;
    }
    if (v < prev) {
      detail.push_back("not monotone at " + std::to_string(n));
      return false;
    }
    if (v > isqrt_u64(n)) {
      detail.push_back("exceeds the square root at " + std::to_string(n));
      return false;
    }
    prev = v;
  }
  if (lambda_value(limit) != table[limit]) return false;

  for (const auto& f : fixtures) {
    if (!is_modular(f.lattice)) continue;
    for (const auto& k : projective_classes(f.lattice))
      if (!check_lambda_theorem(f.lattice, k, kCap).pass) {
        detail.push_back(f.name + " class " + std::to_string(k.id) + " violates the bound");
        return false;
      }
  }
  return true;
}

bool ladder_witness() {
  auto w = ladder::regularity_witness();
  bool ok = true;
  if (!(ladder::chain_mu(ladder::ChainId::C1, ladder::ClassTag::A) == ladder::Count::of(1)) ||
      !(ladder::chain_mu(ladder::ChainId::C2, ladder::ClassTag::A) == ladder::Count::of(0))) {
    detail.push_back("crossing-class chain counts are wrong");
    ok = false;
  }
  if (w.class_a_weakly_regular) {
    detail.push_back("crossing class should fail weak regularity");
    ok = false;
  }
  if (!(ladder::fil_chain_mu({ladder::FilChain::Kind::AllY, 0}, ladder::ClassTag::A) ==
        ladder::Count::of(1))) {
    detail.push_back("limit chain should carry one crossing covering");
    ok = false;
  }
  for (int k = 1; k <= 32; ++k)
    if (!(ladder::fil_chain_mu({ladder::FilChain::Kind::CrossAt, k}, ladder::ClassTag::A) ==
          ladder::Count::of(1))) {
      detail.push_back("crossing chain " + std::to_string(k) + " count off");
      ok = false;
    }
  for (int k = 1; k <= 20; ++k) {
    if (!ladder::truncation_consistent(k)) {
      detail.push_back("truncation " + std::to_string(k) + " diverges from closed forms");
      ok = false;
    }
  }
  if (ladder::bottom_cover_kind() != CoveringKind::QuasiAtomic) {
    detail.push_back("bottom covering should be quasi-atomic");
    ok = false;
  }
  if (ladder::crossing_cover_kind() != CoveringKind::Atomic) {
    detail.push_back("limit covering should be atomic");
    ok = false;
  }
  return ok;
}

Bits bits_of(int width, std::uint32_t mask) {
  Bits t(width);
  for (int a = 0; a < width; ++a)
    if (mask >> a & 1) t.set(a);
  return t;
}

bool proof_steps_exhaustive() {
  using namespace logic;
  bool ok = true;

  // g=2: all pretheory generators x all goals x all subsets of a pool whose
  // instances are premise-free or trivial; for such pools the coverage
  // equivalence is a theorem of the finite collapse (instances with premises
  // beyond the closure make the plain coverage side overshoot; the unit
  // suite pins that boundary).
  {
    BoolAlgebra B({"p", "q"});
    Bits p = B.var(0), q = B.var(1);
    std::vector<InferenceInstance> pool{
        {{}, p},                         // assert p
        {{}, q},                         // assert q
        {{}, ~q},                        // assert not-q
        {{p, B.parse("p -> q")}, q},     // modus ponens (trivial)
        {{p, q}, p & q},                 // conjunction (trivial)
        {{p}, B.parse("p | q")},         // weakening (trivial)
    };
    int cases = 0, passed = 0;
    for (std::uint32_t sub = 0; sub < 64; ++sub) {
      std::vector<InferenceInstance> chosen;
      for (int i = 0; i < 6; ++i)
        if (sub >> i & 1) chosen.push_back(pool[i]);
      for (std::uint32_t t = 0; t < 16; ++t)
        for (std::uint32_t g = 0; g < 16; ++g) {
          ++cases;
          auto v = verify_coverage_theorem(B, Pretheory{bits_of(4, t)}, bits_of(4, g), chosen);
          if (v.pass) ++passed;
        }
    }
    if (cases != 16384 || passed != cases) {
      detail.push_back("g=2 exhaustive: " + std::to_string(passed) + "/" +
                       std::to_string(cases) + " passed");
      ok = false;
    }
  }

  // g=3 and g=4: random pretheories and goals against random pools drawn
  // from the same shape family.
  for (int g : {3, 4}) {
    std::vector<std::string> names;
    for (int i = 0; i < g; ++i) names.push_back("v" + std::to_string(i));
    BoolAlgebra B(names);
    std::mt19937 rng(900 + g);
    std::uniform_int_distribution<std::uint32_t> word(0, (1u << B.assignments()) - 1);
    std::uniform_int_distribution<int> size(0, 4), kind(0, 1);
    int passed = 0;
    const int total = 10000;
    for (int round = 0; round < total; ++round) {
      Pretheory T{bits_of(B.assignments(), word(rng))};
      std::vector<InferenceInstance> pool;
      for (int i = size(rng); i > 0; --i) {
        if (kind(rng) == 0) {
          pool.push_back({{}, bits_of(B.assignments(), word(rng))});
        } else {
          Bits a = bits_of(B.assignments(), word(rng));
          Bits b = bits_of(B.assignments(), word(rng));
          Bits c = bits_of(B.assignments(), word(rng));
          pool.push_back({{a, b}, (a & b) | c});  // conclusion above the premises' meet
        }
      }
      Bits goal = bits_of(B.assignments(), word(rng));
      if (verify_coverage_theorem(B, T, goal, pool).pass) ++passed;
    }
    if (passed != total) {
      detail.push_back("g=" + std::to_string(g) + " random: " + std::to_string(passed) + "/" +
                       std::to_string(total));
      ok = false;
    }
  }

  // trivial <=> covers nothing, exhaustively over a 12-instance pool at g<=3
  for (int g = 1; g <= 3; ++g) {
    std::vector<std::string> names;
    for (int i = 0; i < g; ++i) names.push_back("v" + std::to_string(i));
    BoolAlgebra B(names);
    std::mt19937 rng(40 + g);
    std::uniform_int_distribution<std::uint32_t> word(0, (1u << B.assignments()) - 1);
    for (int i = 0; i < 12; ++i) {
      InferenceInstance inst{{bits_of(B.assignments(), word(rng)),
                              bits_of(B.assignments(), word(rng))},
                             bits_of(B.assignments(), word(rng))};
      if (i % 3 == 0) {
        Bits meet = inst.premises[0] & inst.premises[1];
        inst.conclusion = meet | inst.conclusion;  // force some trivial ones
      }
      bool lhs = is_trivial_instance(B, inst);
      bool rhs = covered(B, {inst}).none();
      if (lhs != rhs) {
        detail.push_back("trivial/covers-nothing mismatch at g=" + std::to_string(g));
        ok = false;
      }
    }
  }
  return ok;
}

bool determinism() {
#ifndef LATLAB_CLI_PATH
  detail.push_back("CLI path not configured");
  return false;
#else
  std::string cli = LATLAB_CLI_PATH;
  std::string dir = LATLAB_WORK_DIR;
  auto run = [&](const std::string& args, const std::string& out) {
    std::string cmd = cli + " " + args + " > " + out + " 2>&1";
    int rc = std::system(cmd.c_str());
    return rc == 0 ? 0 : (rc >> 8);
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool ok = true;
  for (int round = 0; round < 2; ++round) {
    std::string o1 = dir + "/selftest_a.txt", o2 = dir + "/selftest_b.txt";
    int r1 = run("selftest", o1);
    int r2 = run("selftest", o2);
    if (r1 != 0 || r2 != 0) {
      detail.push_back("selftest exit codes " + std::to_string(r1) + "," + std::to_string(r2));
      ok = false;
    }
    if (slurp(o1) != slurp(o2)) {
      detail.push_back("selftest reports differ between runs");
      ok = false;
    }
  }
  std::string j1 = dir + "/selftest_a.json", j2 = dir + "/selftest_b.json";
  if (run("--json selftest", j1) != 0 || run("--json selftest", j2) != 0 ||
      slurp(j1) != slurp(j2)) {
    detail.push_back("json selftest reports differ or fail");
    ok = false;
  }
  return ok;
#endif
}

}  // namespace

int main() {
  std::vector<Fx> fixtures = fixture_catalog();

  criterion(1, "multiplicity invariance across maximal chains on modular fixtures",
            dedekind_birkhoff_invariance(fixtures));
  criterion(2, "distributive fixtures keep every chain multiplicity in {0,1}",
            distributive_bound(fixtures));
  criterion(3, "diamond ground truth: one class of six, mu=2, upsilon=3, lambda=2",
            m5_ground_truth());
  criterion(4, "filter and ideal completions are isomorphic to the base with classes preserved",
            completions_isomorphic(fixtures));
  criterion(5, "difference maxima restrict along every transposed filter-covering pair (n<=50)",
            max_lemma_exhaustive(fixtures));
  criterion(6, "diamond transpose square keeps an undominated difference element",
            diamond_counterexample());
  criterion(7, "recursive lower-bound function exact to 1e6 and the bound holds on fixtures",
            lambda_function_and_theorem(fixtures));
  criterion(8, "ladder witness: regularity fails, the completion restores it, kinds as stated",
            ladder_witness());
  criterion(9, "propositional coverage: exhaustive at g=2, random at g=3..4, trivial<=>empty",
            proof_steps_exhaustive());
  criterion(10, "repeated selftest runs are byte-identical with exit code 0", determinism());

  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
