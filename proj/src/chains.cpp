#include "latlab/chains.hpp"

#include <algorithm>
#include <cmath>

namespace latlab {

namespace {

bool dfs_chains(const FiniteLattice& L, std::vector<int>& path, std::size_t limit,
                std::size_t& yielded, const std::function<void(const MaximalChain&)>& fn) {
  int v = path.back();
  if (v == L.top()) {
    if (yielded == limit) return true;  // would exceed the cap
    ++yielded;
    MaximalChain c{path};
    fn(c);
    return false;
  }
  for (int w : L.upper_covers(v)) {
    path.push_back(w);
    bool truncated = dfs_chains(L, path, limit, yielded, fn);
    path.pop_back();
    if (truncated) return true;
  }
  return false;
}

}  // namespace

bool for_each_maximal_chain(const FiniteLattice& L, std::size_t limit,
                            const std::function<void(const MaximalChain&)>& fn) {
  std::vector<int> path{L.bottom()};
  std::size_t yielded = 0;
  return dfs_chains(L, path, limit, yielded, fn);
}

ChainSet maximal_chains(const FiniteLattice& L, std::size_t limit) {
  ChainSet out;
  out.truncated =
      for_each_maximal_chain(L, limit, [&](const MaximalChain& c) { out.chains.push_back(c); });
  return out;
}

int mu_c(const FiniteLattice& L, const MaximalChain& C, const CoveringClass& K) {
  if (C.elements.empty()) fail(Err::NotAChain, "empty chain");
  for (std::size_t i = 0; i < C.elements.size(); ++i) {
    int v = C.elements[i];
    if (v < 0 || v >= L.size()) fail(Err::NotAChain, "element index out of range");
    if (i > 0 && !L.lt(C.elements[i - 1], v))
      fail(Err::NotAChain, "elements are not strictly ascending");
  }
  int count = 0;
  for (std::size_t i = 0; i + 1 < C.elements.size(); ++i)
    if (K.contains({C.elements[i], C.elements[i + 1]})) ++count;
  return count;
}

std::vector<MultiplicityReport> weak_regularity_report(const FiniteLattice& L,
                                                       std::size_t limit) {
  std::vector<CoveringClass> classes = projective_classes(L);
  std::vector<MultiplicityReport> reports(classes.size());

  // covering (lower, upper) -> class id
  std::vector<int> class_of_pair(static_cast<std::size_t>(L.size()) * L.size(), -1);
  for (const auto& k : classes)
    for (auto c : k.members) class_of_pair[c.lower * L.size() + c.upper] = k.id;

  bool truncated = for_each_maximal_chain(L, limit, [&](const MaximalChain& c) {
    std::vector<int> counts(classes.size(), 0);
    for (std::size_t i = 0; i + 1 < c.elements.size(); ++i) {
      int id = class_of_pair[c.elements[i] * L.size() + c.elements[i + 1]];
      if (id >= 0) ++counts[id];
    }
    for (std::size_t k = 0; k < classes.size(); ++k)
      reports[k].per_chain_counts.push_back(counts[k]);
  });

  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto& r = reports[k];
    r.class_id = classes[k].id;
    r.chains_truncated = truncated;
    const auto& pc = r.per_chain_counts;
    r.sup_mu = pc.empty() ? 0 : *std::max_element(pc.begin(), pc.end());
    r.lambda = pc.empty() ? 0 : *std::min_element(pc.begin(), pc.end());
    r.upsilon = r.sup_mu + 1;
    r.weakly_regular = r.sup_mu == r.lambda;
    if (r.weakly_regular && !pc.empty()) r.mu = r.sup_mu;
  }
  return reports;
}

IntervalMu interval_mu(const FiniteLattice& L, int a, int b, const CoveringClass& K,
                       std::size_t limit) {
  if (!L.lt(a, b)) fail(Err::NotComparable, "interval endpoints must satisfy a < b");
  // The constancy guarantee needs K weakly regular with finite multiplicity.
  {
    std::optional<int> seen;
    for_each_maximal_chain(L, limit, [&](const MaximalChain& c) {
      int m = mu_c(L, c, K);
      if (!seen) seen = m;
      if (*seen != m)
        fail(Err::NotWeaklyRegular, "class is not weakly regular; interval multiplicity undefined");
    });
  }

  Interval iv = interval(L, a, b);
  FiniteLattice sub = iv.as_lattice();
  IntervalMu out;
  bool first = true;
  out.truncated = for_each_maximal_chain(sub, limit, [&](const MaximalChain& c) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < c.elements.size(); ++i)
      if (K.contains({iv.members[c.elements[i]], iv.members[c.elements[i + 1]]})) ++count;
    if (first) {
      out.mu = count;
      first = false;
    } else if (count != out.mu && out.constant) {
      out.constant = false;
      out.other = count;
    }
  });
  return out;
}

int upsilon(const FiniteLattice& L, const CoveringClass& K, std::size_t limit) {
  int sup = 0;
  for_each_maximal_chain(L, limit,
                         [&](const MaximalChain& c) { sup = std::max(sup, mu_c(L, c, K)); });
  return sup + 1;
}

int lambda_bound(const FiniteLattice& L, const CoveringClass& K, std::size_t limit) {
  int best = -1;
  for_each_maximal_chain(L, limit, [&](const MaximalChain& c) {
    int m = mu_c(L, c, K);
    if (best < 0 || m < best) best = m;
  });
  return best < 0 ? 0 : best;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::uint64_t lambda_value(std::uint64_t n) {
  std::uint64_t depth = 0;
  while (n > 0) {
    ++depth;
    std::uint64_t s = isqrt_u64(n);
    n = s - 1;
  }
  return depth;
}

LambdaTheoremVerdict check_lambda_theorem(const FiniteLattice& L, const CoveringClass& K,
                                          std::size_t limit) {
  if (!is_modular(L)) fail(Err::NotModular, "lambda bound requires a modular lattice");

  // Longest run of K-coverings stacked downward: each next covering's upper
  // end sits at or below the previous covering's lower end. Longest-path DP
  // over members ordered so that feasible predecessors come first.
  std::vector<Covering> members = K.members;
  std::sort(members.begin(), members.end(), [&](Covering x, Covering y) {
    return L.rank(x.upper) < L.rank(y.upper);
  });
  const int k = static_cast<int>(members.size());
  std::vector<int> best(k, 1);
  int n = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j)
      if (L.leq(members[j].upper, members[i].lower)) best[i] = std::max(best[i], best[j] + 1);
    n = std::max(n, best[i]);
  }

  LambdaTheoremVerdict v;
  v.descent_length = n;
  v.lambda_n = lambda_value(static_cast<std::uint64_t>(n));
  v.min_mu = -1;
  v.truncated = for_each_maximal_chain(L, limit, [&](const MaximalChain& c) {
    int m = mu_c(L, c, K);
    if (v.min_mu < 0 || m < v.min_mu) v.min_mu = m;
    if (static_cast<std::uint64_t>(m) < v.lambda_n && !v.violating_chain) {
      v.pass = false;
      v.violating_chain = c;
    }
  });
  if (v.min_mu < 0) v.min_mu = 0;
  return v;
}

}  // namespace latlab
