#pragma once

// Side-information graphs. Vertex i (1-based) is receiver i, which demands
// message i and knows the messages in K_i. A directed edge i -> j means
// j is in K_i.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ldic/error.hpp"

namespace ldic {

class SideInfoGraph {
 public:
  SideInfoGraph() = default;

  /// `side_info[i-1]` is K_i. Entries are sorted and deduplicated.
  SideInfoGraph(int n, std::vector<std::vector<int>> side_info) : n_(n), side_(std::move(side_info)) {
    if (n < 0) throw Error(Errc::InvalidInput, "negative vertex count");
    if (static_cast<int>(side_.size()) != n)
      throw Error(Errc::DimensionMismatch, "expected " + std::to_string(n) + " side-information sets, got " +
                                               std::to_string(side_.size()));
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) {
      auto& k = side_[i - 1];
      std::sort(k.begin(), k.end());
      k.erase(std::unique(k.begin(), k.end()), k.end());
      for (int j : k) {
        if (j < 1 || j > n)
          throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(j) + " in K_" + std::to_string(i));
        if (j == i) throw Error(Errc::SelfSideInfo, "receiver " + std::to_string(i) + " knows its own demand");
        adj_[(i - 1) * n + (j - 1)] = 1;
      }
    }
  }

  /// Directed cycle 1 -> 2 -> ... -> n -> 1, i.e. K_i = {i+1}, K_n = {1}.
  static SideInfoGraph directed_cycle(int n) {
    std::vector<std::vector<int>> k(n);
    for (int i = 1; i <= n; ++i) k[i - 1] = {i % n + 1};
    return SideInfoGraph(n, std::move(k));
  }

  /// Graph with K_i = {pi(i)}.
  static SideInfoGraph from_permutation(const std::vector<int>& pi) {
    std::vector<std::vector<int>> k(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) k[i] = {pi[i]};
    return SideInfoGraph(static_cast<int>(pi.size()), std::move(k));
  }

  int n() const noexcept { return n_; }
  const std::vector<int>& side_info(int i) const { return side_.at(i - 1); }
  const std::vector<std::vector<int>>& side_info_sets() const noexcept { return side_; }

  /// True iff j is in K_i.
  bool knows(int i, int j) const { return adj_[(i - 1) * n_ + (j - 1)] != 0; }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& k : side_) e += k.size();
    return e;
  }

  friend bool operator==(const SideInfoGraph& a, const SideInfoGraph& b) {
    return a.n_ == b.n_ && a.side_ == b.side_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> side_;
  std::vector<char> adj_;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}
  UndirectedGraph(int n, const std::vector<std::pair<int, int>>& edges) : UndirectedGraph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  static UndirectedGraph complete(int n) {
    UndirectedGraph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
  }
  static UndirectedGraph cycle(int n) {
    UndirectedGraph g(n);
    for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
    return g;
  }

  void add_edge(int a, int b) {
    if (a < 1 || b < 1 || a > n_ || b > n_)
      throw Error(Errc::IndexOutOfRange, "edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    if (a == b) throw Error(Errc::InvalidInput, "self-loop at " + std::to_string(a));
    adj_[(a - 1) * n_ + (b - 1)] = adj_[(b - 1) * n_ + (a - 1)] = 1;
  }

  int n() const noexcept { return n_; }
  bool adjacent(int a, int b) const { return adj_[(a - 1) * n_ + (b - 1)] != 0; }

  /// Edges {a,b} with a < b, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b)
        if (adjacent(a, b)) e.emplace_back(a, b);
    return e;
  }

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<char> adj_;
};

/// {i,j} is an interference edge unless i and j each know the other's message.
inline UndirectedGraph interference_graph(const SideInfoGraph& g) {
  UndirectedGraph h(g.n());
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (!(g.knows(i, j) && g.knows(j, i))) h.add_edge(i, j);
  return h;
}

/// Underlying undirected graph: {i,j} present if either direction is.
inline UndirectedGraph underlying_graph(const SideInfoGraph& g) {
  UndirectedGraph h(g.n());
  for (int i = 1; i <= g.n(); ++i)
    for (int j : g.side_info(i))
      if (!h.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

struct DirectedCycle {
  int length = 0;
  std::vector<int> vertices;  ///< v_1 -> v_2 -> ... -> v_length -> v_1
};

/// Girth of G with the lexicographically smallest witness among all
/// shortest cycles (written from their smallest vertex), or nullopt if G is
/// acyclic.
inline std::optional<DirectedCycle> shortest_directed_cycle(const SideInfoGraph& g) {
  const int n = g.n();
  int girth = n + 1;
  for (int s = 1; s <= n; ++s) {
    std::vector<int> dist(n + 1, -1);
    std::queue<int> bfs;
    dist[s] = 0;
    bfs.push(s);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v : g.side_info(u)) {
        if (v == s) girth = std::min(girth, dist[u] + 1);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          bfs.push(v);
        }
      }
    }
  }
  if (girth > n) return std::nullopt;

  // Depth-limited search from the smallest start vertex, successors in
  // ascending order, staying above the start: the first hit is the witness.
  std::vector<int> path;
  std::vector<char> on_path(n + 1, 0);
  auto dfs = [&](auto&& self, int start, int u) -> bool {
    if (static_cast<int>(path.size()) == girth) return g.knows(u, start);
    for (int v : g.side_info(u)) {
      if (v <= start || on_path[v]) continue;
      path.push_back(v);
      on_path[v] = 1;
      if (self(self, start, v)) return true;
      on_path[v] = 0;
      path.pop_back();
    }
    return false;
  };
  for (int s = 1; s <= n; ++s) {
    path = {s};
    on_path.assign(n + 1, 0);
    on_path[s] = 1;
    if (dfs(dfs, s, s)) return DirectedCycle{girth, path};
  }
  return std::nullopt;  // unreachable: a cycle of length `girth` exists
}

struct InducedSubgraph {
  SideInfoGraph graph;
  std::vector<int> vertices;  ///< new vertex a (1-based) is original vertex vertices[a-1]
};

/// Subgraph on S (sorted ascending) relabeled 1..|S|, side information K_i ∩ S.
inline InducedSubgraph induced_subgraph(const SideInfoGraph& g, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw Error(Errc::EmptySet, "induced subgraph of the empty set");
  std::vector<int> label(g.n() + 1, 0);
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] < 1 || s[a] > g.n()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(s[a]));
    label[s[a]] = static_cast<int>(a) + 1;
  }
  std::vector<std::vector<int>> k(s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    for (int j : g.side_info(s[a]))
      if (label[j]) k[a].push_back(label[j]);
  return {SideInfoGraph(static_cast<int>(s.size()), std::move(k)), std::move(s)};
}

/// Kahn's algorithm taking the smallest available vertex first. Every edge
/// i -> j (j in K_i) goes from an earlier to a later position.
inline std::optional<std::vector<int>> topological_order(const SideInfoGraph& g) {
  const int n = g.n();
  std::vector<int> indeg(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    for (int j : g.side_info(i)) ++indeg[j];
  std::set<int> ready;
  for (int i = 1; i <= n; ++i)
    if (indeg[i] == 0) ready.insert(i);
  std::vector<int> order;
  while (!ready.empty()) {
    int u = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(u);
    for (int j : g.side_info(u))
      if (--indeg[j] == 0) ready.insert(j);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

inline bool is_acyclic(const SideInfoGraph& g) { return topological_order(g).has_value(); }

/// True iff i -> (i mod n) + 1 maps the edge set onto itself.
inline bool has_cyclic_automorphism(const SideInfoGraph& g) {
  const int n = g.n();
  auto sigma = [n](int i) { return i % n + 1; };
  for (int i = 1; i <= n; ++i)
    for (int j : g.side_info(i))
      if (!g.knows(sigma(i), sigma(j))) return false;
  return true;
}

/// Vertices as a bitmask (bit i-1 for vertex i); n must be below 64.
inline std::uint64_t vertex_mask(const std::vector<int>& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= std::uint64_t{1} << (v - 1);
  return m;
}

inline std::vector<int> mask_vertices(std::uint64_t m) {
  std::vector<int> s;
  for (int v = 1; m; ++v, m >>= 1)
    if (m & 1u) s.push_back(v);
  return s;
}

}  // namespace ldic
