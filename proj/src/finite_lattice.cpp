#include "latlab/finite_lattice.hpp"

#include <algorithm>
#include <set>

namespace latlab {

namespace {

// Element of `s` with the highest position in the linear extension, or -1.
int last_in_rank_order(const Bits& s, const std::vector<int>& rank) {
  int best = -1;
  s.for_each([&](int i) {
    if (best < 0 || rank[i] > rank[best]) best = i;
  });
  return best;
}

int first_in_rank_order(const Bits& s, const std::vector<int>& rank) {
  int best = -1;
  s.for_each([&](int i) {
    if (best < 0 || rank[i] < rank[best]) best = i;
  });
  return best;
}

}  // namespace

FiniteLattice FiniteLattice::build_from_covers(std::vector<std::string> names,
                                               std::vector<std::pair<int, int>> cover_pairs) {
  const int n = static_cast<int>(names.size());
  if (n == 0) fail(Err::NoBoundedOrder, "empty element list");
  if (n > kMaxElements) fail(Err::ParamOutOfRange, "element count exceeds LATLAB_MAX_ELEMENTS");

  for (auto [a, b] : cover_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail(Err::NotALattice, "cover index out of range");
    if (a == b) fail(Err::CycleDetected, "self-loop in cover list");
  }
  std::sort(cover_pairs.begin(), cover_pairs.end());
  if (std::adjacent_find(cover_pairs.begin(), cover_pairs.end()) != cover_pairs.end())
    fail(Err::NotALattice, "duplicate cover pair");

  std::vector<std::vector<int>> up_adj(n), down_adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : cover_pairs) {
    up_adj[a].push_back(b);
    down_adj[b].push_back(a);
    ++indeg[b];
  }

  // Kahn topological order over the cover DAG.
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> deg = indeg;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 0) order.push_back(i);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : up_adj[order[head]])
      if (--deg[w] == 0) order.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) fail(Err::CycleDetected, "cover relation has a cycle");

  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  // Reflexive-transitive closure: up-sets from the top of the order down.
  std::vector<Bits> up(n, Bits(n)), down(n, Bits(n));
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    up[v].set(v);
    for (int w : up_adj[v]) up[v] = up[v] | up[w];
  }
  for (int v = 0; v < n; ++v)
    up[v].for_each([&](int w) { down[w].set(v); });

  // Bounds.
  Bits all = Bits::full(n);
  int bottom = -1, top = -1;
  for (int v = 0; v < n; ++v) {
    if (up[v] == all) bottom = v;
    if (down[v] == all) top = v;
  }
  if (bottom < 0 || top < 0) fail(Err::NoBoundedOrder, "no unique least or greatest element");

  // The input must already be the transitive reduction of its closure.
  for (auto [a, b] : cover_pairs) {
    if ((up[a] & down[b]).count() != 2)
      fail(Err::NotALattice,
           "pair (" + names[a] + "," + names[b] + ") is not a covering of the generated order");
  }

  FiniteLattice L;
  L.n_ = n;
  L.names_ = std::move(names);
  L.up_ = std::move(up);
  L.down_ = std::move(down);
  L.covers_ = std::move(cover_pairs);
  L.up_adj_ = std::move(up_adj);
  L.down_adj_ = std::move(down_adj);
  L.rank_ = std::move(rank);
  L.bottom_ = bottom;
  L.top_ = top;
  for (auto& adj : L.up_adj_) std::sort(adj.begin(), adj.end());
  for (auto& adj : L.down_adj_) std::sort(adj.begin(), adj.end());

  // Meet and join tables. If the set of common lower bounds has a greatest
  // element it is the one latest in the linear extension; verify uniqueness.
  L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  L.join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int m, j;
      if (L.leq(a, b)) {
        m = a;
        j = b;
      } else if (L.leq(b, a)) {
        m = b;
        j = a;
      } else {
        Bits common_lower = L.down_[a] & L.down_[b];
        m = last_in_rank_order(common_lower, L.rank_);
        if (m < 0 || !common_lower.is_subset_of(L.down_[m]))
          fail(Err::NotALattice,
               "no unique greatest lower bound for " + L.names_[a] + ", " + L.names_[b]);
        Bits common_upper = L.up_[a] & L.up_[b];
        j = first_in_rank_order(common_upper, L.rank_);
        if (j < 0 || !common_upper.is_subset_of(L.up_[j]))
          fail(Err::NotALattice,
               "no unique least upper bound for " + L.names_[a] + ", " + L.names_[b]);
      }
      L.meet_[a * n + b] = L.meet_[b * n + a] = m;
      L.join_[a * n + b] = L.join_[b * n + a] = j;
    }
  }
  return L;
}

bool is_modular(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!L.leq(b, a)) continue;
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(b, L.meet(a, c))) return false;
    }
  return true;
}

bool is_distributive(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

FiniteLattice dual(const FiniteLattice& L) {
  std::vector<std::pair<int, int>> covers;
  covers.reserve(L.covers().size());
  for (auto [a, b] : L.covers()) covers.emplace_back(b, a);
  return FiniteLattice::build_from_covers(L.names(), std::move(covers));
}

FiniteLattice product(const FiniteLattice& A, const FiniteLattice& B) {
  const int na = A.size(), nb = B.size();
  if (static_cast<long long>(na) * nb > kMaxElements)
    fail(Err::ParamOutOfRange, "product exceeds LATLAB_MAX_ELEMENTS");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names.push_back("(" + A.name(i) + "," + B.name(j) + ")");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      for (int i2 : A.upper_covers(i)) covers.emplace_back(i * nb + j, i2 * nb + j);
      for (int j2 : B.upper_covers(j)) covers.emplace_back(i * nb + j, i * nb + j2);
    }
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

Interval interval(const FiniteLattice& L, int a, int b) {
  if (!L.leq(a, b))
    fail(Err::NotComparable, L.name(a) + " is not below " + L.name(b));
  Interval iv{&L, a, b, (L.up_set(a) & L.down_set(b)).to_indices()};
  return iv;
}

FiniteLattice Interval::as_lattice() const {
  std::vector<int> pos(parent->size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  names.reserve(members.size());
  for (int m : members) names.push_back(parent->name(m));
  std::vector<std::pair<int, int>> covers;
  // Intervals are order-convex, so parent covers restrict to interval covers
  // and no new ones appear.
  for (int m : members)
    for (int w : parent->upper_covers(m))
      if (pos[w] >= 0) covers.emplace_back(pos[m], pos[w]);
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

}  // namespace latlab
