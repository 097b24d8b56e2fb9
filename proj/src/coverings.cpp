#include "latlab/coverings.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace latlab {

bool CoveringClass::contains(Covering c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

std::vector<Covering> coverings(const FiniteLattice& L) {
  std::vector<Covering> out;
  out.reserve(L.covers().size());
  for (auto [a, b] : L.covers()) out.push_back({a, b});
  return out;
}

bool is_covering(const FiniteLattice& L, Covering c) {
  return c.lower != c.upper && L.leq(c.lower, c.upper) &&
         (L.up_set(c.lower) & L.down_set(c.upper)).count() == 2;
}

bool transposes_up(const FiniteLattice& L, Covering a, Covering b) {
  assert(L.leq(a.lower, a.upper) && L.leq(b.lower, b.upper));
  return L.meet(a.upper, b.lower) == a.lower && L.join(a.upper, b.lower) == b.upper;
}

bool cover_transposes_up(const FiniteLattice& L, Covering a, Covering b) {
  return is_covering(L, a) && is_covering(L, b) && transposes_up(L, a, b);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<CoveringClass> projective_classes(const FiniteLattice& L) {
  std::vector<Covering> covs = coverings(L);
  const int k = static_cast<int>(covs.size());
  UnionFind uf(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (transposes_up(L, covs[i], covs[j]) || transposes_up(L, covs[j], covs[i]))
        uf.unite(i, j);

  // covs is sorted, so grouping by root and ordering groups by their first
  // member assigns ids by smallest member.
  std::vector<std::vector<Covering>> groups;
  std::vector<int> root_to_group(k, -1);
  for (int i = 0; i < k; ++i) {
    int r = uf.find(i);
    if (root_to_group[r] < 0) {
      root_to_group[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[root_to_group[r]].push_back(covs[i]);
  }
  std::vector<CoveringClass> out(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    out[g] = CoveringClass{static_cast<int>(g), std::move(groups[g])};
  return out;
}

int class_of(const std::vector<CoveringClass>& classes, Covering c) {
  for (const auto& k : classes)
    if (k.contains(c)) return k.id;
  return -1;
}

std::vector<int> meet_irreducibles(const FiniteLattice& L) {
  std::vector<int> out;
  for (int m = 0; m < L.size(); ++m) {
    if (m == L.top()) continue;
    Bits above = L.up_set(m);
    above.reset(m);
    bool irr = true;
    above.for_each([&](int x) {
      if (!irr) return;
      above.for_each([&](int y) {
        if (irr && L.meet(x, y) == m) irr = false;
      });
    });
    if (irr) out.push_back(m);
  }
  return out;
}

bool is_finitely_decomposable(const FiniteLattice& L, int x) {
  // Meet of all meet-irreducibles above x; empty meet is the top.
  int acc = L.top();
  for (int m : meet_irreducibles(L))
    if (L.leq(x, m)) acc = L.meet(acc, m);
  return acc == x;
}

}  // namespace latlab
