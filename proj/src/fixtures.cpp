#include "latlab/fixtures.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace latlab {

namespace {

const char* kAtomLetters[] = {"p", "q", "r", "s", "t", "u", "v", "w"};

std::string atom_name(int i) {
  if (i < 8) return kAtomLetters[i];
  return "a" + std::to_string(i);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FiniteLattice chain_lattice(int coverings) {
  if (coverings < 0 || coverings >= kMaxElements)
    fail(Err::ParamOutOfRange, "chain length out of range");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i <= coverings; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

FiniteLattice boolean_cube(int dims) {
  if (dims < 0 || dims > 12) fail(Err::ParamOutOfRange, "boolean cube dimension out of range");
  const int n = 1 << dims;
  std::vector<std::string> names(n);
  for (int mask = 0; mask < n; ++mask) {
    if (mask == 0)
      names[mask] = "⊥";
    else if (mask == n - 1)
      names[mask] = dims == 1 ? "p" : "⊤";
    else {
      for (int i = 0; i < dims; ++i)
        if (mask >> i & 1) names[mask] += atom_name(i);
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (int mask = 0; mask < n; ++mask)
    for (int i = 0; i < dims; ++i)
      if (!(mask >> i & 1)) covers.emplace_back(mask, mask | (1 << i));
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

FiniteLattice m5() {
  return FiniteLattice::build_from_covers({"⊥", "a", "b", "c", "⊤"},
                                          {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice n5() {
  return FiniteLattice::build_from_covers({"⊥", "x", "z", "y", "⊤"},
                                          {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FiniteLattice downsets_of_random_poset(int points, std::uint32_t seed) {
  if (points < 0 || points > 10) fail(Err::ParamOutOfRange, "poset size out of range (0..10)");
  // Random strict order on 0..points-1, closed transitively.
  std::vector<std::vector<bool>> lt(points, std::vector<bool>(points, false));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j)
      if (coin(rng) == 0) lt[i][j] = true;
  for (int k = 0; k < points; ++k)
    for (int i = 0; i < points; ++i)
      for (int j = 0; j < points; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;

  auto down_closed = [&](unsigned mask) {
    for (int j = 0; j < points; ++j)
      if (mask >> j & 1)
        for (int i = 0; i < points; ++i)
          if (lt[i][j] && !(mask >> i & 1)) return false;
    return true;
  };

  std::vector<unsigned> downsets;
  for (unsigned mask = 0; mask < (1u << points); ++mask)
    if (down_closed(mask)) downsets.push_back(mask);

  std::map<unsigned, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < downsets.size(); ++i) {
    index[downsets[i]] = static_cast<int>(i);
    std::string s = "{";
    for (int j = 0; j < points; ++j)
      if (downsets[i] >> j & 1) s += (s.size() > 1 ? "," : "") + std::to_string(j);
    names.push_back(s + "}");
  }
  std::vector<std::pair<int, int>> covers;
  for (unsigned d : downsets)
    for (int j = 0; j < points; ++j)
      if (!(d >> j & 1) && down_closed(d | (1u << j)))
        covers.emplace_back(index[d], index[d | (1u << j)]);
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

FiniteLattice subspace_lattice(int p, int d) {
  if (!is_prime(p)) fail(Err::ParamOutOfRange, "field size must be prime");
  if (d < 1) fail(Err::ParamOutOfRange, "dimension must be positive");
  long long nvec = 1;
  for (int i = 0; i < d; ++i) {
    nvec *= p;
    if (nvec > kMaxElements) fail(Err::ParamOutOfRange, "p^d too large");
  }
  const int nv = static_cast<int>(nvec);

  auto add = [&](int u, int v) {
    int out = 0, mul = 1;
    for (int i = 0; i < d; ++i) {
      out += ((u % p + v % p) % p) * mul;
      u /= p;
      v /= p;
      mul *= p;
    }
    return out;
  };
  auto scale = [&](int c, int v) {
    int out = 0, mul = 1;
    for (int i = 0; i < d; ++i) {
      out += (c * (v % p) % p) * mul;
      v /= p;
      mul *= p;
    }
    return out;
  };

  // Grow the set of subspaces from the zero space by adjoining vectors.
  std::set<Bits> seen;
  Bits zero(nv);
  zero.set(0);
  seen.insert(zero);
  std::vector<Bits> queue{zero};
  while (!queue.empty()) {
    Bits s = queue.back();
    queue.pop_back();
    for (int v = 1; v < nv; ++v) {
      if (s.test(v)) continue;
      Bits t(nv);
      s.for_each([&](int u) {
        for (int c = 0; c < p; ++c) t.set(add(u, scale(c, v)));
      });
      if (seen.insert(t).second) queue.push_back(t);
    }
  }

  std::vector<Bits> spaces(seen.begin(), seen.end());
  std::sort(spaces.begin(), spaces.end(),
            [](const Bits& a, const Bits& b) { return std::pair(a.count(), a) < std::pair(b.count(), b); });
  if (static_cast<int>(spaces.size()) > kMaxElements)
    fail(Err::ParamOutOfRange, "subspace count exceeds LATLAB_MAX_ELEMENTS");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    names.push_back("S" + std::to_string(i));
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j)
      if (spaces[j].count() == spaces[i].count() * p && spaces[i].is_subset_of(spaces[j]))
        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return FiniteLattice::build_from_covers(std::move(names), std::move(covers));
}

namespace {

FiniteLattice parse_fixture_spec(const std::vector<long long>& params, std::size_t& pos);

long long take(const std::vector<long long>& params, std::size_t& pos) {
  if (pos >= params.size()) fail(Err::ParamOutOfRange, "missing fixture parameter");
  return params[pos++];
}

FiniteLattice parse_fixture_spec(const std::vector<long long>& params, std::size_t& pos) {
  long long code = take(params, pos);
  switch (code) {
    case 0: return chain_lattice(static_cast<int>(take(params, pos)));
    case 1: return boolean_cube(static_cast<int>(take(params, pos)));
    case 2: return m5();
    case 3: return n5();
    case 4: {
      int n = static_cast<int>(take(params, pos));
      auto seed = static_cast<std::uint32_t>(take(params, pos));
      return downsets_of_random_poset(n, seed);
    }
    case 5: {
      int p = static_cast<int>(take(params, pos));
      int d = static_cast<int>(take(params, pos));
      return subspace_lattice(p, d);
    }
    case 6: {
      FiniteLattice a = parse_fixture_spec(params, pos);
      FiniteLattice b = parse_fixture_spec(params, pos);
      return product(a, b);
    }
    default: fail(Err::ParamOutOfRange, "unknown fixture code " + std::to_string(code));
  }
}

}  // namespace

FiniteLattice gen_fixture(const std::string& kind, const std::vector<long long>& params) {
  auto run = [&](long long code) {
    std::vector<long long> spec;
    spec.push_back(code);
    spec.insert(spec.end(), params.begin(), params.end());
    std::size_t pos = 0;
    FiniteLattice L = parse_fixture_spec(spec, pos);
    if (pos != spec.size()) fail(Err::ParamOutOfRange, "trailing fixture parameters");
    return L;
  };
  if (kind == "chain") return run(0);
  if (kind == "boolean") return run(1);
  if (kind == "diamond_m5") return run(2);
  if (kind == "pentagon_n5") return run(3);
  if (kind == "downsets_of_random_poset") return run(4);
  if (kind == "subspace_lattice") return run(5);
  if (kind == "product") return run(6);
  fail(Err::UnknownFixture, kind);
}

}  // namespace latlab
