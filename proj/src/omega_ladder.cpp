#include "latlab/omega_ladder.hpp"

#include <algorithm>
#include <stdexcept>

namespace latlab::ladder {

namespace {
constexpr int kWitnessWindow = 64;  // index range scanned by closed-form checks
}

std::string name(Elem e) {
  switch (e.tag) {
    case Elem::Tag::Bot: return "⊥";
    case Elem::Tag::X: return "x" + std::to_string(e.depth);
    case Elem::Tag::Y: return "y" + std::to_string(e.depth);
  }
  return "?";
}

bool valid(Elem e) {
  return e.tag == Elem::Tag::Bot ? e.depth == 0 : e.depth >= 1;
}

bool leq(Elem a, Elem b) {
  if (!valid(a) || !valid(b)) throw std::invalid_argument("bad ladder element");
  if (a.tag == Elem::Tag::Bot) return true;
  if (b.tag == Elem::Tag::Bot) return a.tag == Elem::Tag::Bot;
  if (a.tag == b.tag) return a.depth >= b.depth;   // deeper is smaller
  if (a.tag == Elem::Tag::X) return a.depth >= b.depth;  // x_i <= y_j iff i >= j
  return false;                                    // no y below any x
}

Elem meet(Elem a, Elem b) {
  if (leq(a, b)) return a;
  if (leq(b, a)) return b;
  // Only x_i vs y_j with i < j remains incomparable; their meet is x_j.
  if (a.tag == Elem::Tag::Y) std::swap(a, b);
  return Elem::x(std::max(a.depth, b.depth));
}

Elem join(Elem a, Elem b) {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  if (a.tag == Elem::Tag::Y) std::swap(a, b);
  return Elem::y(std::min(a.depth, b.depth));
}

ClassTag covering_class(Elem lower, Elem upper) {
  if (!valid(lower) || !valid(upper))
    fail(Err::NotALadderCovering, "invalid ladder element");
  if (lower.tag == Elem::Tag::X && upper.tag == Elem::Tag::Y && lower.depth == upper.depth)
    return ClassTag::A;
  if (lower.tag == upper.tag && lower.tag != Elem::Tag::Bot && lower.depth == upper.depth + 1)
    return ClassTag::B;
  fail(Err::NotALadderCovering, name(lower) + " < " + name(upper) + " is not a ladder covering");
}

std::string Count::str() const { return infinite ? "inf" : std::to_string(value); }

Count chain_mu(ChainId chain, ClassTag cls) {
  // C1 = bot, all x_i, y_1: one crossing covering x_1 < y_1 and every x-rung.
  // C2 = bot, all y_i: no crossing covering, every y-rung.
  if (cls == ClassTag::A) return chain == ChainId::C1 ? Count::of(1) : Count::of(0);
  return Count::inf();
}

std::string fil_name(FilElem e) {
  switch (e.tag) {
    case FilElem::Tag::PrincipalBot: return "Fg{⊥}";
    case FilElem::Tag::XChainFilter: return "Fg{x1,x2,...}";
    case FilElem::Tag::YChainFilter: return "Fg{y1,y2,...}";
    case FilElem::Tag::PrincipalX: return "Fg{x" + std::to_string(e.depth) + "}";
    case FilElem::Tag::PrincipalY: return "Fg{y" + std::to_string(e.depth) + "}";
  }
  return "?";
}

bool fil_leq(FilElem a, FilElem b) {
  using T = FilElem::Tag;
  if (a.tag == T::PrincipalBot) return true;
  if (b.tag == T::PrincipalBot) return false;
  if (a.tag == T::XChainFilter) return true;  // below every other filter
  if (b.tag == T::XChainFilter) return false;
  if (a.tag == T::YChainFilter) return b.tag == T::YChainFilter || b.tag == T::PrincipalY;
  if (b.tag == T::YChainFilter) return false;
  // Principal part mirrors the ladder order through Fg.
  Elem ea = a.tag == T::PrincipalX ? Elem::x(a.depth) : Elem::y(a.depth);
  Elem eb = b.tag == T::PrincipalX ? Elem::x(b.depth) : Elem::y(b.depth);
  return leq(ea, eb);
}

Count fil_chain_mu(const FilChain& chain, ClassTag cls) {
  if (chain.kind == FilChain::Kind::CrossAt && chain.cross < 1)
    fail(Err::UnknownChainDescriptor, "crossing index must be >= 1");
  // Both chain shapes contain exactly one class-A covering: the crossing
  // Fg{x_k} < Fg{y_k}, or the limit covering between the chain filters.
  if (cls == ClassTag::A) return Count::of(1);
  return Count::inf();  // every chain contains a full descending rung family
}

FiniteLattice truncate(int depth) {
  if (depth < 1) fail(Err::ParamOutOfRange, "truncation depth must be >= 1");
  if (2 * depth + 1 > kMaxElements) fail(Err::ParamOutOfRange, "truncation too deep");
  const int n = 2 * depth + 1;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = name(truncate_elem(i, depth));
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem a = truncate_elem(i, depth), b = truncate_elem(j, depth);
      if (i == j || !leq(a, b)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z) {
        Elem c = truncate_elem(z, depth);
        if (z != i && z != j && leq(a, c) && leq(c, b) && !(c == a) && !(c == b)) direct = false;
      }
      if (direct) covers.emplace_back(i, j);
    }
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

int truncate_index(Elem e, int depth) {
  if (!valid(e) || e.depth > depth) fail(Err::ParamOutOfRange, "element outside truncation");
  switch (e.tag) {
    case Elem::Tag::Bot: return 0;
    case Elem::Tag::X: return e.depth;
    case Elem::Tag::Y: return depth + e.depth;
  }
  return -1;
}

Elem truncate_elem(int index, int depth) {
  if (index == 0) return Elem::bot();
  if (index <= depth) return Elem::x(index);
  return Elem::y(index - depth);
}

bool truncation_consistent(int depth) {
  FiniteLattice T = truncate(depth);
  const int n = T.size();
  for (int i = 0; i < n; ++i) {
    Elem a = truncate_elem(i, depth);
    if (T.name(i) != name(a)) return false;
    for (int j = 0; j < n; ++j) {
      Elem b = truncate_elem(j, depth);
      if (T.leq(i, j) != leq(a, b)) return false;
      if (truncate_elem(T.meet(i, j), depth) != meet(a, b)) return false;
      if (truncate_elem(T.join(i, j), depth) != join(a, b)) return false;
    }
  }
  return true;
}

bool truncation_classes_consistent(int depth) {
  FiniteLattice T = truncate(depth);
  auto classes = projective_classes(T);
  auto cls = [&](Elem lo, Elem hi) {
    return class_of(classes, {truncate_index(lo, depth), truncate_index(hi, depth)});
  };
  int a_cls = cls(Elem::x(1), Elem::y(1));
  if (a_cls < 0) return false;
  for (int i = 1; i < depth; ++i) {
    if (covering_class(Elem::x(i), Elem::y(i)) != ClassTag::A) return false;
    if (cls(Elem::x(i), Elem::y(i)) != a_cls) return false;
  }
  if (depth < 2) return true;
  // Rung coverings pair up by depth: the x-rung and y-rung at one depth share
  // a class; rungs at different depths stay apart and never join the
  // crossing class.
  std::vector<int> rung_cls;
  for (int i = 1; i + 1 < depth; ++i) {
    if (covering_class(Elem::x(i + 1), Elem::x(i)) != ClassTag::B) return false;
    if (covering_class(Elem::y(i + 1), Elem::y(i)) != ClassTag::B) return false;
    int cx = cls(Elem::x(i + 1), Elem::x(i));
    if (cx < 0 || cx == a_cls) return false;
    if (cls(Elem::y(i + 1), Elem::y(i)) != cx) return false;
    for (int prev : rung_cls)
      if (prev == cx) return false;
    rung_cls.push_back(cx);
  }
  return true;
}

CoveringKind bottom_cover_kind() {
  // The filter of everything above bottom is the x-chain filter. It has no
  // least member: each x_k sits strictly above x_{k+1}.
  for (int k = 1; k < kWitnessWindow; ++k) {
    if (!leq(Elem::x(k + 1), Elem::x(k)) || leq(Elem::x(k), Elem::x(k + 1)))
      throw std::logic_error("x-chain must descend strictly");
  }
  // Quasi-atomic witness y = x_1: everything in (bot, x_1] is some x_k, and
  // every x_k lies in the filter.
  for (int k = 1; k <= kWitnessWindow; ++k) {
    if (!leq(Elem::x(k), Elem::x(1))) throw std::logic_error("x_k must lie below x_1");
    if (leq(Elem::y(k), Elem::x(1))) throw std::logic_error("no y may lie below x_1");
  }
  return CoveringKind::QuasiAtomic;
}

CoveringKind crossing_cover_kind() {
  // Base x_i: Fg{x_i} joined with the y-chain filter is {y_j : j <= i},
  // the principal filter of y_i. Verified pointwise over the window.
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= kWitnessWindow; ++j) {
      bool in_up_xi = leq(Elem::x(i), Elem::y(j));
      if (in_up_xi != (j <= i)) throw std::logic_error("up-set of x_i has unexpected y part");
    }
  return CoveringKind::Atomic;
}

WitnessReport regularity_witness() {
  WitnessReport r;

  // The crossing coverings transpose downward into each other; their index
  // family descends with meets collapsing to bottom, so the class cannot be
  // lower regular.
  bool family_ok = true;
  for (int i = 1; i < kWitnessWindow && family_ok; ++i)
    for (int j = i + 1; j <= kWitnessWindow && family_ok; ++j) {
      family_ok = meet(Elem::y(j), Elem::x(i)) == Elem::x(j) &&
                  join(Elem::y(j), Elem::x(i)) == Elem::y(i);
    }
  // No element other than bottom lies below the whole x-chain (or y-chain).
  bool meets_collapse = true;
  for (int k = 1; k <= kWitnessWindow; ++k) {
    if (leq(Elem::x(k), Elem::x(k + 1)) || leq(Elem::y(k), Elem::y(k + 1)))
      meets_collapse = false;
  }
  r.class_a_lower_regular = !(family_ok && meets_collapse);
  if (!r.class_a_lower_regular)
    r.notes.push_back("descending crossing family transposes down with both component meets at ⊥");

  r.mu_c1_a = chain_mu(ChainId::C1, ClassTag::A);
  r.mu_c2_a = chain_mu(ChainId::C2, ClassTag::A);
  r.mu_c1_b = chain_mu(ChainId::C1, ClassTag::B);
  r.class_a_weakly_regular = r.mu_c1_a == r.mu_c2_a;
  if (!r.class_a_weakly_regular)
    r.notes.push_back("the two maximal chains disagree on the crossing class: " +
                      r.mu_c1_a.str() + " vs " + r.mu_c2_a.str());

  r.fil_class_a_multiplicity_constant = true;
  if (fil_chain_mu({FilChain::Kind::AllY, 0}, ClassTag::A) != Count::of(1))
    r.fil_class_a_multiplicity_constant = false;
  for (int k = 1; k <= kWitnessWindow; ++k)
    if (fil_chain_mu({FilChain::Kind::CrossAt, k}, ClassTag::A) != Count::of(1))
      r.fil_class_a_multiplicity_constant = false;
  if (r.fil_class_a_multiplicity_constant)
    r.notes.push_back("every cataloged filter-lattice chain has exactly one crossing-class covering");

  r.bottom_kind = bottom_cover_kind();
  r.crossing_kind = crossing_cover_kind();
  return r;
}

}  // namespace latlab::ladder
