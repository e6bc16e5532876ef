#pragma once

#include "burnside/kernel.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace burnside {

// Orbits of S_n on C_k^n are count vectors (n_0, ..., n_{k-1}), ordered
// lexicographically on (n_1, ..., n_{k-1}). For k = 2 orbit i is |x| = i.
inline std::vector<std::vector<int>> enumerate_orbits(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k) {
      c[0] = left;
      out.push_back(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 1, n);
  return out;
}

struct OrbitKernel {
  int n = 0;
  int k = 2;
  std::vector<std::vector<int>> labels;
  RationalMatrix matrix;
};

inline std::size_t orbit_index(const std::vector<std::vector<int>>& labels, const std::vector<int>& counts) {
  auto it = std::lower_bound(labels.begin(), labels.end(), counts, [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin() + 1, a.end(), b.begin() + 1, b.end());
  });
  if (it == labels.end() || *it != counts) throw std::logic_error("orbit_index: unknown orbit");
  return static_cast<std::size_t>(it - labels.begin());
}

// Groups columns by orbit and asserts Dynkin's criterion: the mass sent into
// each orbit is the same from every state of a given orbit.
inline OrbitKernel lump_to_orbits(const Kernel& K) {
  OrbitKernel L{K.n, K.k, enumerate_orbits(K.n, K.k), {}};
  const std::size_t Z = L.labels.size(), N = K.size();
  std::vector<std::size_t> orb(N);
  for (std::size_t i = 0; i < N; ++i) orb[i] = orbit_index(L.labels, State::from_index(i, K.n, K.k).counts());
  L.matrix = RationalMatrix(Z, Z);
  std::vector<char> seen(Z, 0);
  for (std::size_t i = 0; i < N; ++i) {
    Vec mass(Z);
    for (std::size_t j = 0; j < N; ++j) mass[orb[j]] += K(i, j);
    const std::size_t a = orb[i];
    if (!seen[a]) {
      for (std::size_t b = 0; b < Z; ++b) L.matrix(a, b) = mass[b];
      seen[a] = 1;
    } else {
      for (std::size_t b = 0; b < Z; ++b)
        if (L.matrix(a, b) != mass[b])
          throw InvariantError("Dynkin criterion fails for orbit lumping at state " + std::to_string(i));
    }
  }
  return L;
}

// Orbit chain straight from the closed-form entries, one representative per
// orbit; does not materialize the full kernel.
inline OrbitKernel orbit_kernel_direct(int n, int k) {
  OrbitKernel L{n, k, enumerate_orbits(n, k), {}};
  const std::size_t Z = L.labels.size();
  L.matrix = RationalMatrix(Z, Z);
  const std::uint64_t N = state_count(n, k);
  std::map<std::vector<int>, Rational> cache;
  for (std::size_t a = 0; a < Z; ++a) {
    std::vector<int> d;
    for (int v = 0; v < k; ++v) d.insert(d.end(), static_cast<std::size_t>(L.labels[a][static_cast<std::size_t>(v)]), v);
    State x(k, d);
    for (std::uint64_t j = 0; j < N; ++j) {
      State y = State::from_index(j, n, k);
      PairCounts p = PairCounts::of(x, y);
      auto it = cache.find(p.table);
      if (it == cache.end()) it = cache.emplace(p.table, kernel_entry(x, y)).first;
      L.matrix(a, orbit_index(L.labels, y.counts())) += it->second;
    }
  }
  return L;
}

// Marginal chain of the coordinates in `subset` (1-based). Asserts Dynkin's
// criterion and entrywise equality with build_kernel(|subset|, k).
inline RationalMatrix lump_to_coordinates(const Kernel& K, const std::vector<int>& subset) {
  const int m = static_cast<int>(subset.size());
  if (m < 1) throw std::invalid_argument("lump_to_coordinates: empty subset");
  for (std::size_t t = 0; t < subset.size(); ++t) {
    if (subset[t] < 1 || subset[t] > K.n) throw std::invalid_argument("lump_to_coordinates: coordinate out of range");
    if (t > 0 && subset[t] <= subset[t - 1]) throw std::invalid_argument("lump_to_coordinates: subset must be increasing");
  }
  const std::size_t N = K.size(), M = state_count(m, K.k);
  auto restrict_index = [&](std::size_t idx) {
    State x = State::from_index(idx, K.n, K.k);
    std::vector<int> d;
    for (int c : subset) d.push_back(x[c - 1]);
    return static_cast<std::size_t>(State(K.k, d).index());
  };
  std::vector<std::size_t> r(N);
  for (std::size_t i = 0; i < N; ++i) r[i] = restrict_index(i);
  RationalMatrix out(M, M);
  std::vector<char> seen(M, 0);
  for (std::size_t i = 0; i < N; ++i) {
    Vec mass(M);
    for (std::size_t j = 0; j < N; ++j) mass[r[j]] += K(i, j);
    if (!seen[r[i]]) {
      for (std::size_t b = 0; b < M; ++b) out(r[i], b) = mass[b];
      seen[r[i]] = 1;
    } else {
      for (std::size_t b = 0; b < M; ++b)
        if (out(r[i], b) != mass[b])
          throw InvariantError("Dynkin criterion fails for coordinate lumping at state " + std::to_string(i));
    }
  }
  CapConfig uncapped{UINT64_MAX, UINT64_MAX};
  if (!(out == build_kernel(m, K.k, uncapped, false).matrix))
    throw InvariantError("coordinate marginal differs from the " + std::to_string(m) + "-coordinate kernel");
  return out;
}

inline RationalMatrix lump_to_coordinates(int n, int k, const std::vector<int>& subset,
                                          const CapConfig& caps = CapConfig::from_env()) {
  return lump_to_coordinates(build_kernel(n, k, caps), subset);
}

// Quotient by relabeling values. K(x, y) is unchanged when the values of x or
// of y are permuted, so K factors through classes of states up to value
// relabeling (set partitions of the coordinates into at most k blocks).
// Every eigenvector with nonzero eigenvalue is constant on classes, hence
// nonzero eigenvalues of K and of this quotient agree with multiplicity.
struct ValueQuotient {
  int n = 0;
  int k = 2;
  std::vector<State> representatives;  // restricted growth strings
  std::vector<BigInt> class_sizes;
  RationalMatrix matrix;               // Q(A, B) = |B| K(x_A, y_B)
};

inline State canonical_relabel(const State& x) {
  std::vector<int> map(static_cast<std::size_t>(x.k), -1);
  int next = 0;
  State y = x;
  for (auto& v : y.digits) {
    auto& m = map[static_cast<std::size_t>(v)];
    if (m < 0) m = next++;
    v = m;
  }
  return y;
}

inline ValueQuotient value_quotient(int n, int k) {
  ValueQuotient Q{n, k, {}, {}, {}};
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int maxv) -> void {
    if (pos == n) {
      Q.representatives.emplace_back(k, d);
      BigInt size = 1;
      for (int b = 0; b <= maxv; ++b) size *= k - b;
      Q.class_sizes.push_back(size);
      return;
    }
    for (int v = 0; v <= std::min(maxv + 1, k - 1); ++v) {
      d[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, std::max(maxv, v));
    }
  };
  if (n == 0) {
    Q.representatives.emplace_back(k, d);
    Q.class_sizes.push_back(1);
  } else {
    d[0] = 0;
    rec(rec, 1, 0);
  }
  const std::size_t C = Q.representatives.size();
  Q.matrix = RationalMatrix(C, C);
  std::map<std::vector<int>, Rational> cache;
  for (std::size_t a = 0; a < C; ++a)
    for (std::size_t b = 0; b < C; ++b) {
      PairCounts p = PairCounts::of(Q.representatives[a], Q.representatives[b]);
      auto it = cache.find(p.table);
      if (it == cache.end()) it = cache.emplace(p.table, kernel_entry(Q.representatives[a], Q.representatives[b])).first;
      Q.matrix(a, b) = it->second * Q.class_sizes[b];
    }
  return Q;
}

}  // namespace burnside
