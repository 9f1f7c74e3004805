#pragma once

// Random instance generators shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ldic/ldic.hpp"

namespace ldic::tu {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Felt random_elt(Rng& rng, const Field& f) {
  return static_cast<Felt>(std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng));
}

inline Felt random_nonzero(Rng& rng, const Field& f) {
  return static_cast<Felt>(std::uniform_int_distribution<std::uint32_t>(1, f.q() - 1)(rng));
}

/// Each ordered pair (i, j), i != j, is an edge with probability p.
inline SideInfoGraph random_graph(Rng& rng, int n, double p) {
  std::vector<std::vector<int>> k(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && coin(rng, p)) k[i - 1].push_back(j);
  return SideInfoGraph(n, std::move(k));
}

/// Random DAG: edges only from earlier to later positions of a random order.
inline SideInfoGraph random_dag(Rng& rng, int n, double p) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<int>> k(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng, p)) k[order[a] - 1].push_back(order[b]);
  return SideInfoGraph(n, std::move(k));
}

/// Uniformly random fixed-point-free permutation whose functional graph is
/// a single N-cycle.
inline std::vector<int> random_cyclic_permutation(Rng& rng, int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pi(n);
  for (int a = 0; a < n; ++a) pi[order[a] - 1] = order[(a + 1) % n];
  return pi;
}

inline FMatrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
  FMatrix a(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = random_elt(rng, f);
  return a;
}

/// Code with a random encoder and random nonempty queries; usually invalid.
inline IndexCode random_code(Rng& rng, const SideInfoGraph& g, const Field& f, int M, int len, double density = 0.5) {
  IndexCode c;
  c.field = f;
  c.n = g.n();
  c.M = M;
  c.len = len;
  c.L = FMatrix(f, static_cast<std::size_t>(M) * g.n(), static_cast<std::size_t>(len));
  for (std::size_t r = 0; r < c.L.rows(); ++r)
    for (std::size_t k = 0; k < c.L.cols(); ++k)
      if (coin(rng, density)) c.L(r, k) = random_nonzero(rng, f);
  for (int i = 0; i < g.n(); ++i) {
    std::vector<int> q;
    for (int k = 1; k <= len; ++k)
      if (coin(rng, 0.5)) q.push_back(k);
    if (q.empty()) q.push_back(uniform_int(rng, 1, len));
    c.queries.push_back(std::move(q));
  }
  return c;
}

/// Valid code in which every receiver owns private columns: `shared`
/// random columns readable by everybody, and for each demand j of receiver i
/// a private column e_j + u + (combination of some shared columns) with u
/// supported on the side-information rows of i.
inline IndexCode random_valid_code(Rng& rng, const SideInfoGraph& g, const Field& f, int M, int shared) {
  const int n = g.n();
  const auto rows = static_cast<std::size_t>(M) * n;
  std::vector<FVector> cols;
  for (int s = 0; s < shared; ++s) {
    FVector v(f, rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = random_elt(rng, f);
    cols.push_back(std::move(v));
  }
  std::vector<std::vector<int>> queries(n);
  for (int i = 1; i <= n; ++i) {
    const auto side = side_rows(g, M, i);
    for (auto j : demand_rows(M, i)) {
      FVector v = FVector::unit(f, rows, j);
      for (auto t : side)
        if (coin(rng, 0.5)) v[t] = random_elt(rng, f);
      for (int s = 0; s < shared; ++s)
        if (coin(rng, 0.5)) {
          v += cols[s].scaled(random_nonzero(rng, f));
          queries[i - 1].push_back(s + 1);
        }
      cols.push_back(std::move(v));
      queries[i - 1].push_back(static_cast<int>(cols.size()));
    }
  }
  IndexCode c;
  c.field = f;
  c.n = n;
  c.M = M;
  c.len = static_cast<int>(cols.size());
  c.L = FMatrix::from_columns(f, rows, cols);
  for (auto& q : queries) {
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
  }
  c.queries = std::move(queries);
  return c;
}

/// One random perturbation: change an encoder entry or drop a query.
inline IndexCode corrupt(Rng& rng, IndexCode c) {
  c.decode.reset();
  if (coin(rng, 0.5) && c.len > 0) {
    const auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(c.L.rows()) - 1));
    const auto k = static_cast<std::size_t>(uniform_int(rng, 0, c.len - 1));
    c.L(r, k) = c.field.add(c.L(r, k), random_nonzero(rng, c.field));
  } else {
    auto& q = c.queries[uniform_int(rng, 0, c.n - 1)];
    if (q.size() > 1) q.erase(q.begin() + uniform_int(rng, 0, static_cast<int>(q.size()) - 1));
  }
  return c;
}

/// Single-query inequality |S| >= M(2 beta - N r_avg) in integers,
/// |S| >= 2 len - sum |R_i|, with len counting queried columns only.
inline bool single_query_bound_holds(const IndexCode& c) {
  std::vector<int> count(c.len + 1, 0);
  std::int64_t total = 0;
  for (const auto& q : c.queries) {
    total += static_cast<std::int64_t>(q.size());
    for (int k : q) ++count[k];
  }
  std::int64_t once = 0, used = 0;
  for (int k = 1; k <= c.len; ++k) {
    once += count[k] == 1;
    used += count[k] > 0;
  }
  return once >= 2 * used - total;
}

}  // namespace ldic::tu
