#pragma once

// Achievability schemes, each returning a validated IndexCode (decoding
// coefficients attached).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ldic/coloring.hpp"
#include "ldic/error.hpp"
#include "ldic/fmatrix.hpp"
#include "ldic/gfield.hpp"
#include "ldic/indexcode.hpp"
#include "ldic/lp.hpp"
#include "ldic/rational.hpp"
#include "ldic/sigraph.hpp"

namespace ldic {

// ---------------------------------------------------------------- basic schemes

/// c = x; receiver i reads its own M symbols.
inline IndexCode uncoded(const SideInfoGraph& g, const Field& f, int M = 1) {
  if (M < 1) throw Error(Errc::InvalidInput, "message length must be positive");
  IndexCode c;
  c.field = f;
  c.n = g.n();
  c.M = M;
  c.len = M * g.n();
  c.L = FMatrix::identity(f, static_cast<std::size_t>(c.len));
  for (int i = 1; i <= g.n(); ++i) {
    std::vector<int> r(M);
    std::iota(r.begin(), r.end(), (i - 1) * M + 1);
    c.queries.push_back(std::move(r));
  }
  return with_decode(g, std::move(c));
}

/// Colour t of the palette carries the sum of the symbols x_{i,m} whose
/// vertex i holds t as its m-th colour. Receiver i reads its own b colours;
/// every other term in them belongs to a vertex it is not adjacent to in
/// the interference graph, hence one it knows.
inline IndexCode fractional_coloring_code(const SideInfoGraph& g, const ABColoring& col, const Field& f) {
  if (auto why = coloring_error(interference_graph(g), col); !why.empty()) throw Error(Errc::BadColoring, why);
  IndexCode c;
  c.field = f;
  c.n = g.n();
  c.M = col.b;
  c.len = col.a;
  c.L = FMatrix(f, static_cast<std::size_t>(c.M) * c.n, static_cast<std::size_t>(c.len));
  for (int i = 1; i <= g.n(); ++i) {
    const auto& ci = col.classes[i - 1];
    for (int m = 0; m < col.b; ++m) c.L(static_cast<std::size_t>((i - 1) * col.b + m), ci[m] - 1) = 1;
    c.queries.push_back(ci);
  }
  return with_decode(g, std::move(c));
}

// ---------------------------------------------------------------- directed cycles

/// Length-(N-1) scalar code for the directed N-cycle in which receivers
/// `pivot` and pivot+1 (N+1 read as 1) read one symbol and all others two.
/// Pivot N is c = (x_1+x_2, x_1+x_3, ..., x_1+x_N); pivot p relabels it so
/// message i takes the row of message ((i-p-1) mod N) + 1.
inline IndexCode cycle_scalar_code(int n, int pivot, const Field& f) {
  if (n < 2) throw Error(Errc::InvalidInput, "cycle needs at least two vertices");
  if (pivot < 1 || pivot > n) throw Error(Errc::IndexOutOfRange, "pivot " + std::to_string(pivot));
  IndexCode c;
  c.field = f;
  c.n = n;
  c.M = 1;
  c.len = n - 1;
  c.L = FMatrix(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n - 1; ++k) {
    c.L(0, k) = 1;
    c.L(static_cast<std::size_t>(k) + 1, k) = 1;
  }
  c.queries.assign(n, {});
  c.queries[0] = {1};
  for (int i = 2; i < n; ++i) c.queries[i - 1] = {i - 1, i};
  c.queries[n - 1] = {n - 1};
  auto g = SideInfoGraph::directed_cycle(n);
  return with_decode(g, rotate_messages(c, pivot % n));
}

/// Time-shares the pivots 1..N (N odd) or 1,3,...,N-1 (N even): rate N-1
/// and r = r_avg = 2(N-1)/N.
inline IndexCode cycle_vector_code(int n, const Field& f) {
  if (n < 3) throw Error(Errc::InvalidInput, "cycle_vector_code needs N >= 3");
  std::vector<IndexCode> parts;
  for (int p = 1; p <= n; p += n % 2 ? 1 : 2) parts.push_back(cycle_scalar_code(n, p, f));
  auto g = SideInfoGraph::directed_cycle(n);
  return with_decode(g, time_share(parts, std::vector<int>(parts.size(), 1)));
}

/// Rate N-1 code for message length M with the least possible locality:
/// M < N/2 repeats one scalar code (r = 2); otherwise the pivots are taken
/// from 1,3,5,...,N,2,4,... (N odd) or 1,3,...,N-1 (N even), cyclically.
inline IndexCode cycle_code_for_message_length(int n, int M, const Field& f) {
  if (n < 3) throw Error(Errc::InvalidInput, "cycle code needs N >= 3");
  if (M < 1) throw Error(Errc::InvalidInput, "message length must be positive");
  std::vector<int> seq;
  if (2 * M < n) {
    seq.assign(M, 1);
  } else {
    std::vector<int> period;
    for (int p = 1; p <= n; p += 2) period.push_back(p);
    if (n % 2)
      for (int p = 2; p < n; p += 2) period.push_back(p);
    for (int t = 0; t < M; ++t) seq.push_back(period[t % period.size()]);
  }
  std::vector<IndexCode> parts;
  std::vector<int> mult;
  for (int p : seq) {
    parts.push_back(cycle_scalar_code(n, p, f));
    mult.push_back(1);
  }
  auto g = SideInfoGraph::directed_cycle(n);
  return with_decode(g, time_share(parts, mult));
}

// ---------------------------------------------------------------- feasible localities

/// Receivers u_1..u_N against code symbols v_1..v_{N-1}; every v_k has
/// exactly two neighbours, weighted +1 (first edge) and -1 (second edge).
struct BipartiteQueryGraph {
  int n = 0;
  std::vector<std::vector<int>> queries;   ///< neighbours of u_i, ascending
  std::vector<std::vector<int>> signs;     ///< +1 / -1 per entry of queries[i]
  std::vector<std::vector<int>> symbol_nbrs;  ///< neighbours of v_k in insertion order
};

/// Appends edges receiver by receiver: u_1-v_1; for i < N, u_i-v_i plus the
/// r_i - 1 lowest-indexed degree-one symbols among v_1..v_{i-1}; u_N takes
/// every symbol still of degree one.
inline BipartiteQueryGraph bipartite_query_graph(const std::vector<int>& r) {
  const int n = static_cast<int>(r.size());
  if (n < 2) throw Error(Errc::InfeasibleDegrees, "need at least two receivers");
  std::int64_t prefix = 0;
  for (int i = 1; i <= n; ++i) {
    if (r[i - 1] < 1) throw Error(Errc::InfeasibleDegrees, "localities must be positive");
    if (i > 1 && r[i - 1] < r[i - 2]) throw Error(Errc::InfeasibleDegrees, "localities must be ascending");
    prefix += r[i - 1];
    if (i < n && prefix > 2 * i - 1)
      throw Error(Errc::InfeasibleDegrees, "r_1 + ... + r_" + std::to_string(i) + " exceeds " + std::to_string(2 * i - 1));
  }
  if (prefix != 2 * (n - 1)) throw Error(Errc::InfeasibleDegrees, "localities must sum to 2(N-1)");

  BipartiteQueryGraph b;
  b.n = n;
  b.queries.assign(n, {});
  b.signs.assign(n, {});
  b.symbol_nbrs.assign(n - 1, {});
  auto connect = [&](int i, int k) {
    b.symbol_nbrs[k - 1].push_back(i);
    b.queries[i - 1].push_back(k);
    b.signs[i - 1].push_back(b.symbol_nbrs[k - 1].size() == 1 ? 1 : -1);
  };
  for (int i = 1; i <= n; ++i) {
    const int want = i < n ? r[i - 1] - 1 : r[i - 1];
    int added = 0;
    for (int k = 1; k < std::min(i, n) && added < want; ++k)
      if (b.symbol_nbrs[k - 1].size() == 1) {
        connect(i, k);
        ++added;
      }
    if (added != want) throw Error(Errc::InfeasibleDegrees, "ran out of degree-one symbols at receiver " + std::to_string(i));
    if (i < n) connect(i, i);
  }
  for (int i = 0; i < n; ++i) {
    // Sort each neighbour list together with its signs.
    std::vector<std::pair<int, int>> z;
    for (std::size_t t = 0; t < b.queries[i].size(); ++t) z.emplace_back(b.queries[i][t], b.signs[i][t]);
    std::sort(z.begin(), z.end());
    for (std::size_t t = 0; t < z.size(); ++t) std::tie(b.queries[i][t], b.signs[i][t]) = z[t];
  }
  return b;
}

/// Scalar code of length N-1 for K_i = {pi(i)} with receiver localities at
/// most r_vec. Receivers are relabelled by a stable ascending sort of the
/// (trimmed) localities, the fitting columns A_a = e_a - e_{pi(a)} are
/// expanded over the bipartite query graph, and the triangular system
/// A_a = sum_k w_{a,k} L_k is solved by forward substitution.
inline IndexCode feasible_locality_code(const std::vector<int>& pi, std::vector<int> r_vec, const Field& f) {
  const int n = static_cast<int>(pi.size());
  if (n < 2) throw Error(Errc::InvalidInput, "need at least two receivers");
  if (static_cast<int>(r_vec.size()) != n) throw Error(Errc::DimensionMismatch, "one locality per receiver");
  std::vector<char> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int p = pi[i - 1];
    if (p < 1 || p > n || seen[p]) throw Error(Errc::InvalidInput, "pi is not a permutation of [N]");
    if (p == i) throw Error(Errc::InvalidInput, "pi has a fixed point at " + std::to_string(i));
    seen[p] = 1;
  }
  std::int64_t sum = 0;
  for (int v : r_vec) {
    if (v < 1) throw Error(Errc::InvalidInput, "localities must be positive");
    sum += v;
  }
  if (sum < 2 * (n - 1))
    throw Error(Errc::InfeasibleLocalities, "localities sum to " + std::to_string(sum) + " < 2(N-1) = " +
                                                std::to_string(2 * (n - 1)));
  while (sum > 2 * (n - 1)) {
    int top = 0;
    for (int i = 1; i < n; ++i)
      if (r_vec[i] >= r_vec[top]) top = i;
    --r_vec[top];
    --sum;
  }

  std::vector<int> order(n);  // new label a (0-based) -> old vertex
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return r_vec[a - 1] < r_vec[b - 1]; });
  std::vector<int> label(n + 1);
  for (int a = 0; a < n; ++a) label[order[a]] = a + 1;
  std::vector<int> sorted_r(n);
  for (int a = 0; a < n; ++a) sorted_r[a] = r_vec[order[a] - 1];

  const auto b = bipartite_query_graph(sorted_r);
  auto weight = [&](int sign) { return sign > 0 ? Felt{1} : f.neg(1); };

  std::vector<FVector> cols;
  for (int a = 1; a < n; ++a) {
    FVector col(f, static_cast<std::size_t>(n));
    col[a - 1] = f.add(col[a - 1], 1);
    const int pa = label[pi[order[a - 1] - 1]];
    col[pa - 1] = f.sub(col[pa - 1], 1);
    const auto& ra = b.queries[a - 1];
    for (std::size_t t = 0; t < ra.size(); ++t)
      if (ra[t] != a) col -= cols[ra[t] - 1].scaled(weight(b.signs[a - 1][t]));
    cols.push_back(std::move(col));  // w_{a,a} = +1
  }

  IndexCode c;
  c.field = f;
  c.n = n;
  c.M = 1;
  c.len = n - 1;
  c.L = FMatrix(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  c.queries.assign(n, {});
  for (int a = 1; a <= n; ++a) {
    const int old = order[a - 1];
    for (int k = 0; k < n - 1; ++k) c.L(old - 1, k) = cols[k][a - 1];
    c.queries[old - 1] = b.queries[a - 1];
  }
  // Functional graph of pi: note when it is not a single cycle.
  int len = 1;
  for (int v = pi[0]; v != 1; v = pi[v - 1]) ++len;
  if (len != n) c.notes.push_back("pi is not a single N-cycle; K_i = {pi(i)} is a union of cycles");
  auto g = SideInfoGraph::from_permutation(pi);
  return with_decode(g, std::move(c));
}

// ---------------------------------------------------------------- minrank N-1

/// Rate N-1 code built on the lexicographically smallest shortest cycle:
/// a 2-cycle {i,j} sends x_i + x_j; a longer cycle c_1..c_m gets the
/// (x_{c_1}+x_{c_2}, ..., x_{c_1}+x_{c_m}) code; the rest goes uncoded.
inline IndexCode minrank_nm1_code(const SideInfoGraph& g, const Field& f) {
  auto cyc = shortest_directed_cycle(g);
  if (!cyc) {
    auto c = uncoded(g, f, 1);
    c.notes.push_back("graph is acyclic; uncoded transmission is optimal");
    return c;
  }
  const int n = g.n();
  const auto& cv = cyc->vertices;
  const int m = cyc->length;
  IndexCode c;
  c.field = f;
  c.n = n;
  c.M = 1;
  c.len = n - 1;
  c.L = FMatrix(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  c.queries.assign(n, {});
  for (int k = 0; k < m - 1; ++k) {
    c.L(cv[0] - 1, k) = 1;
    c.L(cv[k + 1] - 1, k) = 1;
  }
  if (m == 2) {
    c.queries[cv[0] - 1] = {1};
    c.queries[cv[1] - 1] = {1};
  } else {
    c.queries[cv[0] - 1] = {1};
    for (int t = 2; t < m; ++t) c.queries[cv[t - 1] - 1] = {t - 1, t};
    c.queries[cv[m - 1] - 1] = {m - 1};
  }
  std::vector<char> on_cycle(n + 1, 0);
  for (int v : cv) on_cycle[v] = 1;
  int col = m - 1;
  for (int v = 1; v <= n; ++v) {
    if (on_cycle[v]) continue;
    c.L(v - 1, col) = 1;
    c.queries[v - 1] = {++col};
  }
  return with_decode(g, std::move(c));
}

// ---------------------------------------------------------------- fitting-matrix codes

/// Lowest-index independent columns of A, in order.
inline std::vector<std::size_t> independent_columns(const FMatrix& a) {
  return row_reduce(a).pivots;
}

/// Scalar code whose encoder is the independent columns of the fitting
/// matrix A, padded with unit vectors up to `len` columns (len >= rank A).
/// Receiver i reads the support of the unique coordinates of A_i.
inline IndexCode scalar_code_from_fitting(const SideInfoGraph& g, const FMatrix& a, std::optional<int> len = {}) {
  if (!fits(g, a)) throw Error(Errc::NoFittingMatrix, "matrix does not fit the graph");
  const Field& f = a.field();
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<FVector> cols;
  for (auto c : independent_columns(a)) cols.push_back(a.column(c));
  const int rk = static_cast<int>(cols.size());
  const int target = len.value_or(rk);
  if (target < rk) throw Error(Errc::InvalidInput, "length below the rank of the fitting matrix");
  if (target > static_cast<int>(n)) throw Error(Errc::InvalidInput, "length above N");
  std::vector<FVector> units;
  for (std::size_t t = 0; t < n; ++t) units.push_back(FVector::unit(f, n, t));
  for (auto& e : extend_basis(cols, units)) {
    if (static_cast<int>(cols.size()) == target) break;
    cols.push_back(std::move(e));
  }
  IndexCode c;
  c.field = f;
  c.n = g.n();
  c.M = 1;
  c.len = target;
  c.L = FMatrix::from_columns(f, n, cols);
  for (int i = 1; i <= g.n(); ++i) {
    auto d = solve(c.L, a.column(static_cast<std::size_t>(i - 1)));
    std::vector<int> r;
    for (auto k : d->support()) r.push_back(static_cast<int>(k) + 1);
    c.queries.push_back(std::move(r));
  }
  return with_decode(g, std::move(c));
}

/// A fitting matrix of rank exactly `len`, obtained from `a` (rank <= len)
/// by zeroing off-diagonal entries one at a time in row-major order; each
/// step moves the rank by at most one and the identity has rank N.
inline FMatrix fitting_matrix_of_rank(const SideInfoGraph& g, FMatrix a, int len) {
  if (!fits(g, a)) throw Error(Errc::NoFittingMatrix, "matrix does not fit the graph");
  if (len > g.n()) throw Error(Errc::NoFittingMatrix, "rank above N");
  if (static_cast<int>(rank(a)) > len) throw Error(Errc::NoFittingMatrix, "starting matrix has rank above target");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (static_cast<int>(rank(a)) == len) return a;
      if (r != c) a(r, c) = 0;
    }
  if (static_cast<int>(rank(a)) == len) return a;
  throw Error(Errc::NoFittingMatrix, "no fitting matrix of rank " + std::to_string(len));
}

// ---------------------------------------------------------------- AIS covers

/// Re-encodes a valid scalar code so that every receiver in the acyclic set
/// S reads a single symbol: the fitting columns of S (in topological order)
/// come first, followed by base columns completing the same column space.
inline IndexCode ais_scalar_code(const SideInfoGraph& g, const std::vector<int>& s, const IndexCode& base) {
  if (base.M != 1) throw Error(Errc::InvalidInput, "ais_scalar_code needs a scalar base code");
  auto sub = induced_subgraph(g, s);
  auto topo = topological_order(sub.graph);
  if (!topo) throw Error(Errc::NotAcyclic, "vertex set induces a directed cycle");
  auto rep = validate(g, base);
  if (!rep.valid) throw Error(Errc::InvalidInput, "base code does not validate");
  const Field& f = base.field;
  const auto n = static_cast<std::size_t>(g.n());

  std::vector<FVector> cols;
  std::vector<int> first_of(g.n() + 1, 0);
  for (int a : *topo) {
    const int v = sub.vertices[a - 1];
    cols.push_back(rep.fitting[v - 1].front());
    first_of[v] = static_cast<int>(cols.size());
  }
  std::vector<FVector> base_cols;
  for (int k = 0; k < base.len; ++k) base_cols.push_back(base.L.column(k));
  auto more = extend_basis(cols, base_cols);
  cols.insert(cols.end(), more.begin(), more.end());
  for (int k = 0; k < base.len && static_cast<int>(cols.size()) < base.len; ++k)
    if (std::find(more.begin(), more.end(), base_cols[k]) == more.end()) cols.push_back(base_cols[k]);

  IndexCode c;
  c.field = f;
  c.n = g.n();
  c.M = 1;
  c.len = base.len;
  c.L = FMatrix::from_columns(f, n, cols);
  for (int i = 1; i <= g.n(); ++i) {
    if (first_of[i]) {
      c.queries.push_back({first_of[i]});
      continue;
    }
    auto d = solve(c.L, rep.fitting[i - 1].front());
    std::vector<int> r;
    for (auto k : d->support()) r.push_back(static_cast<int>(k) + 1);
    c.queries.push_back(std::move(r));
  }
  return with_decode(g, std::move(c));
}

struct AISCover {
  std::vector<std::vector<int>> subsets;
  int fold = 1;  ///< every vertex lies in at least this many subsets
};

/// Empty if `cover` is a valid AIS cover of G with the stated fold.
inline std::string cover_error(const SideInfoGraph& g, const AISCover& cover) {
  if (cover.subsets.empty()) return "cover has no subsets";
  if (cover.fold < 1) return "fold must be positive";
  std::vector<int> count(g.n() + 1, 0);
  for (const auto& s : cover.subsets) {
    if (s.empty()) return "cover contains an empty subset";
    std::set<int> uniq(s.begin(), s.end());
    for (int v : uniq) {
      if (v < 1 || v > g.n()) return "vertex " + std::to_string(v) + " out of range";
      ++count[v];
    }
    if (!is_acyclic(induced_subgraph(g, s).graph)) return "a subset induces a directed cycle";
  }
  for (int v = 1; v <= g.n(); ++v)
    if (count[v] < cover.fold) return "vertex " + std::to_string(v) + " is covered fewer than fold times";
  return {};
}

/// Time-shares ais_scalar_code(G, S_j, base) over the P subsets:
/// M = P, rate = base length, r <= (Q + (P-Q) len) / P.
inline IndexCode ais_cover_code(const SideInfoGraph& g, const AISCover& cover, const IndexCode& base) {
  if (auto why = cover_error(g, cover); !why.empty()) throw Error(Errc::BadCover, why);
  std::vector<IndexCode> parts;
  for (const auto& s : cover.subsets) parts.push_back(ais_scalar_code(g, s, base));
  return with_decode(g, time_share(parts, std::vector<int>(parts.size(), 1)));
}

/// All t-subsets of [N] (lexicographic); fold C(N-1, t-1). Requires every
/// directed cycle to be longer than t.
inline AISCover t_subset_cover(const SideInfoGraph& g, int t) {
  const int n = g.n();
  if (t < 1 || t > n) throw Error(Errc::InvalidInput, "t must lie in [1, N]");
  if (auto cyc = shortest_directed_cycle(g); cyc && cyc->length <= t)
    throw Error(Errc::CycleTooShort, "graph has a directed cycle of length " + std::to_string(cyc->length));
  AISCover cover;
  std::vector<int> s(t);
  std::iota(s.begin(), s.end(), 1);
  for (;;) {
    cover.subsets.push_back(s);
    int k = t - 1;
    while (k >= 0 && s[k] == n - t + k + 1) --k;
    if (k < 0) break;
    ++s[k];
    for (int u = k + 1; u < t; ++u) s[u] = s[u - 1] + 1;
  }
  std::int64_t fold = 1;
  for (int k = 1; k <= t - 1; ++k) fold = fold * (n - k) / k;  // C(N-1, t-1)
  cover.fold = static_cast<int>(fold);
  return cover;
}

// ---------------------------------------------------------------- cyclic symmetry

/// For G invariant under i -> i mod N + 1 and a fitting matrix of rank len:
/// the scalar code on len independent columns of A, time-shared over all N
/// rotations. M = N, rate len, r <= len (N - len + 1) / N.
inline IndexCode cyclic_symmetry_code(const SideInfoGraph& g, const FMatrix& a, int len) {
  if (!has_cyclic_automorphism(g)) throw Error(Errc::NotCyclic, "i -> i mod N + 1 is not an automorphism");
  if (!fits(g, a) || static_cast<int>(rank(a)) != len)
    throw Error(Errc::NoFittingMatrix, "need a fitting matrix of rank " + std::to_string(len));
  return symmetrize_cyclic(g, scalar_code_from_fitting(g, a));
}

// ---------------------------------------------------------------- covering codes

/// Parity-check matrix of the q-ary Hamming code with m check symbols:
/// one column per projective point of F_q^m (first nonzero entry 1), in
/// lexicographic order of the coordinate vector read from the top. Radius 1.
inline FMatrix hamming_parity_check(int m, const Field& f) {
  if (m < 1) throw Error(Errc::InvalidInput, "Hamming code needs m >= 1");
  std::vector<FVector> cols;
  std::vector<Felt> d(m, 0);
  for (;;) {
    int t = m - 1;
    while (t >= 0 && ++d[t] == f.q()) d[t--] = 0;
    if (t < 0) break;
    auto lead = std::find_if(d.begin(), d.end(), [](Felt v) { return v != 0; });
    if (*lead == 1) cols.emplace_back(f, d);
    if (cols.size() > 4096) throw Error(Errc::TooLarge, "Hamming code too long");
  }
  return FMatrix::from_columns(f, static_cast<std::size_t>(m), cols);
}

/// Block-diagonal direct sum; the covering radius is the sum of the parts'.
inline FMatrix direct_sum(const std::vector<FMatrix>& blocks) {
  if (blocks.empty()) throw Error(Errc::EmptySet, "direct sum of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == blocks.front().field())) throw Error(Errc::MixedFields, "blocks over different fields");
    rows += b.rows();
    cols += b.cols();
  }
  FMatrix out(blocks.front().field(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

/// Shortest tabulated parity-check with k rows and covering radius <= radius:
/// the direct sum of `radius` Hamming blocks of near-equal height (identity
/// once radius >= k).
inline FMatrix covering_code_for(int k, int radius, const Field& f) {
  if (k < 1 || radius < 1) throw Error(Errc::InvalidInput, "need k >= 1 and radius >= 1");
  if (radius >= k) return FMatrix::identity(f, static_cast<std::size_t>(k));
  std::vector<FMatrix> blocks;
  for (int p = 0; p < radius; ++p) blocks.push_back(hamming_parity_check(k / radius + (p < k % radius ? 1 : 0), f));
  return direct_sum(blocks);
}

/// L = base.L * H. Receiver i decodes through the fitting column base.L d_i;
/// it reads the columns of a smallest set T with d_i in span(H_T), which has
/// at most `max_locality` elements when H has that covering radius.
inline IndexCode covering_separation_code(const SideInfoGraph& g, const IndexCode& base, const FMatrix& h,
                                          int max_locality) {
  if (base.M != 1) throw Error(Errc::InvalidInput, "covering separation needs a scalar base code");
  if (!(h.field() == base.field)) throw Error(Errc::MixedFields, "H and base code over different fields");
  if (h.rows() != static_cast<std::size_t>(base.len)) throw Error(Errc::DimensionMismatch, "H must have len(base) rows");
  auto rep = validate(g, base);
  if (!rep.valid) throw Error(Errc::InvalidInput, "base code does not validate");
  const int ell = static_cast<int>(h.cols());

  IndexCode c;
  c.field = base.field;
  c.n = g.n();
  c.M = 1;
  c.len = ell;
  c.L = base.L * h;
  for (int i = 1; i <= g.n(); ++i) {
    const FVector& d = rep.decode[i - 1].front();
    std::optional<std::vector<int>> found;
    if (d.is_zero()) found.emplace();
    for (int s = 1; s <= std::min(max_locality, ell) && !found; ++s) {
      std::vector<int> t(s);
      std::iota(t.begin(), t.end(), 1);
      for (;;) {
        if (solve(h.select_columns(zero_based(t)), d)) {
          found = t;
          break;
        }
        int u = s - 1;
        while (u >= 0 && t[u] == ell - s + u + 1) --u;
        if (u < 0) break;
        ++t[u];
        for (int w = u + 1; w < s; ++w) t[w] = t[w - 1] + 1;
      }
    }
    if (!found)
      throw Error(Errc::RadiusExceeded, "receiver " + std::to_string(i) + " needs more than " +
                                            std::to_string(max_locality) + " symbols");
    c.queries.push_back(std::move(*found));
  }
  return with_decode(g, std::move(c));
}

// ---------------------------------------------------------------- partition cover

enum Provider : unsigned { PartialClique = 1u, CycleCover = 2u, MinrankCover = 4u, AllProviders = 7u };

inline std::string provider_name(Provider p) {
  switch (p) {
    case PartialClique: return "partial-clique";
    case CycleCover: return "cycle";
    case MinrankCover: return "minrank";
    default: return "none";
  }
}

/// Minrank of an induced subgraph with a fitting matrix attaining it, or
/// nullopt when unavailable (for example over budget).
using MinrankFn = std::function<std::optional<std::pair<int, FMatrix>>(const SideInfoGraph&)>;

struct SubsetCost {
  int len = 0;       ///< codeword symbols spent on the part
  int locality = 0;  ///< queries per receiver in the part
  Provider provider = PartialClique;
};

struct PartitionCover {
  IndexCode code;
  std::vector<std::pair<std::vector<int>, SubsetCost>> parts;
  int total_len = 0;
};

namespace detail {

// reach[mask]: end vertices (bit v for vertex v+1) of directed Hamiltonian
// paths of `mask` that start at its lowest vertex.
struct PathTable {
  std::vector<std::uint32_t> reach;

  explicit PathTable(const SideInfoGraph& g) {
    const int n = g.n();
    if (n > 20) throw Error(Errc::TooLarge, "Hamiltonian table limited to 20 vertices");
    reach.assign(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      const int low = std::countr_zero(s);
      for (std::uint32_t ends = reach[s]; ends; ends &= ends - 1) {
        const int v = std::countr_zero(ends);
        for (int w = low + 1; w < n; ++w)
          if (!(s >> w & 1u) && g.knows(v + 1, w + 1)) reach[s | (1u << w)] |= 1u << w;
      }
    }
  }

  // Last vertex (0-based) of a Hamiltonian cycle through `mask`, or -1.
  int cycle_end(const SideInfoGraph& g, std::uint64_t mask) const {
    if (std::popcount(mask) < 2) return -1;
    const int low = std::countr_zero(mask);
    for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1)
      if (g.knows(std::countr_zero(ends) + 1, low + 1)) return std::countr_zero(ends);
    return -1;
  }

  // Vertices of a Hamiltonian cycle through `mask`, from its smallest
  // vertex, or empty if none exists.
  std::vector<int> cycle(const SideInfoGraph& g, std::uint64_t mask) const {
    int cur = cycle_end(g, mask);
    if (cur < 0) return {};
    std::vector<int> order;
    for (std::uint64_t s = mask;;) {
      order.push_back(cur + 1);
      if (std::popcount(s) == 1) break;
      const std::uint64_t prev = s & ~(std::uint64_t{1} << cur);
      int p = -1;
      for (std::uint32_t ends = reach[prev]; ends && p < 0; ends &= ends - 1)
        if (g.knows(std::countr_zero(ends) + 1, cur + 1)) p = std::countr_zero(ends);
      s = prev;
      cur = p;
    }
    std::reverse(order.begin(), order.end());
    return order;
  }
};

// n x len encoder any len rows of which are independent: identity,
// all-ones, units plus an all-ones row, or Vandermonde rows when n <= q.
inline std::optional<FMatrix> mds_encoder(int n, int len, const Field& f) {
  if (len == n) return FMatrix::identity(f, static_cast<std::size_t>(n));
  FMatrix p(f, static_cast<std::size_t>(n), static_cast<std::size_t>(len));
  if (len == 1) {
    for (int r = 0; r < n; ++r) p(r, 0) = 1;
    return p;
  }
  if (len == n - 1) {
    for (int r = 0; r < len; ++r) p(r, r) = 1;
    for (int c = 0; c < len; ++c) p(n - 1, c) = 1;
    return p;
  }
  if (static_cast<std::uint32_t>(n) > f.q()) return std::nullopt;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < len; ++c) p(r, c) = f.pow(static_cast<Felt>(r), static_cast<std::uint64_t>(c));
  return p;
}

}  // namespace detail

/// Every (length, locality) option the enabled providers offer for the part
/// `mask`; a singleton always has (1, 1).
inline std::vector<SubsetCost> subset_options(const SideInfoGraph& g, std::uint64_t mask, unsigned providers,
                                              const Field& f, const MinrankFn& minrank,
                                              const detail::PathTable* paths = nullptr) {
  std::vector<SubsetCost> opts;
  const auto verts = mask_vertices(mask);
  const int m = static_cast<int>(verts.size());
  if (m == 1) {
    opts.push_back({1, 1, PartialClique});
    return opts;
  }
  if (providers & PartialClique) {
    int k = m;
    for (int v : verts) {
      int known = 0;
      for (int j : g.side_info(v)) known += (mask >> (j - 1)) & 1u;
      k = std::min(k, known);
    }
    if (detail::mds_encoder(m, m - k, f)) opts.push_back({m - k, m - k, PartialClique});
  }
  if ((providers & CycleCover) && (paths ? paths->cycle_end(g, mask) : detail::PathTable(g).cycle_end(g, mask)) >= 0)
    opts.push_back(m == 2 ? SubsetCost{1, 1, CycleCover} : SubsetCost{m - 1, 2, CycleCover});
  if ((providers & MinrankCover) && minrank)
    if (auto mr = minrank(induced_subgraph(g, verts).graph)) opts.push_back({mr->first, mr->first, MinrankCover});
  return opts;
}

/// Cheapest option for subset `mask` among the enabled providers with
/// locality <= r_max (nullopt when none applies). Ties go to the lower
/// locality, then to the earlier provider (partial-clique, cycle, minrank).
inline std::optional<SubsetCost> best_subset_cost(const SideInfoGraph& g, std::uint64_t mask, int r_max,
                                                  unsigned providers, const Field& f, const MinrankFn& minrank,
                                                  const detail::PathTable* paths = nullptr) {
  std::optional<SubsetCost> best;
  for (const auto& o : subset_options(g, mask, providers, f, minrank, paths))
    if (o.locality <= r_max && (!best || o.len < best->len || (o.len == best->len && o.locality < best->locality)))
      best = o;
  return best;
}

namespace detail {

// Scalar code for the part `verts` (sorted) of G, as a |S| x len block.
inline IndexCode part_code(const SideInfoGraph& g, const std::vector<int>& verts, const SubsetCost& cost,
                           const Field& f, const MinrankFn& minrank, const PathTable& paths) {
  auto sub = induced_subgraph(g, verts);
  const int m = static_cast<int>(verts.size());
  if (m == 1) return uncoded(sub.graph, f, 1);
  switch (cost.provider) {
    case PartialClique: {
      auto p = *mds_encoder(m, cost.len, f);
      IndexCode c;
      c.field = f;
      c.n = m;
      c.M = 1;
      c.len = cost.len;
      c.L = p;
      std::vector<int> all(cost.len);
      std::iota(all.begin(), all.end(), 1);
      c.queries.assign(m, all);
      return with_decode(sub.graph, std::move(c));
    }
    case CycleCover: {
      auto cyc = paths.cycle(g, vertex_mask(verts));
      std::vector<int> local;
      for (int v : cyc) local.push_back(static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()) + 1);
      IndexCode c;
      c.field = f;
      c.n = m;
      c.M = 1;
      c.len = m - 1;
      c.L = FMatrix(f, static_cast<std::size_t>(m), static_cast<std::size_t>(m - 1));
      c.queries.assign(m, {});
      for (int k = 0; k < m - 1; ++k) {
        c.L(local[0] - 1, k) = 1;
        c.L(local[k + 1] - 1, k) = 1;
      }
      c.queries[local[0] - 1] = {1};
      for (int t = 2; t < m; ++t) c.queries[local[t - 1] - 1] = {t - 1, t};
      c.queries[local[m - 1] - 1] = {m - 1};
      return with_decode(sub.graph, std::move(c));
    }
    case MinrankCover: {
      auto mr = minrank(sub.graph);
      if (!mr) throw Error(Errc::NoFittingMatrix, "minrank unavailable for a chosen part");
      return scalar_code_from_fitting(sub.graph, mr->second);
    }
    default: break;
  }
  throw Error(Errc::InvalidInput, "unknown provider");
}

}  // namespace detail

/// Exact minimum total length over set partitions of [N] whose parts all
/// have locality <= r_max, by subset DP (the part containing the lowest
/// remaining vertex is chosen first; only strict improvements replace the
/// incumbent). Emits the concatenation of the part codes.
inline PartitionCover partition_cover_code(const SideInfoGraph& g, int r_max, unsigned providers, const Field& f,
                                           const MinrankFn& minrank = {}, int max_n = 20) {
  const int n = g.n();
  if (r_max < 1) throw Error(Errc::NoFeasiblePartition, "locality below 1 admits no partition");
  if (n > max_n) throw Error(Errc::TooLarge, "partition DP limited to " + std::to_string(max_n) + " vertices");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::optional<SubsetCost>> cost(full + 1);
  const detail::PathTable paths(g);
  for (std::uint64_t s = 1; s <= full; ++s) cost[s] = best_subset_cost(g, s, r_max, providers, f, minrank, &paths);

  constexpr int kInf = 1 << 30;
  std::vector<int> dp(full + 1, kInf);
  std::vector<std::uint64_t> choice(full + 1, 0);
  dp[0] = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const std::uint64_t low = mask & (~mask + 1);
    for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || !cost[sub] || dp[mask ^ sub] == kInf) continue;
      const int cand = dp[mask ^ sub] + cost[sub]->len;
      if (cand < dp[mask]) {
        dp[mask] = cand;
        choice[mask] = sub;
      }
    }
  }
  if (dp[full] == kInf) throw Error(Errc::NoFeasiblePartition, "no partition meets the locality limit");

  PartitionCover out;
  out.total_len = dp[full];
  for (std::uint64_t mask = full; mask; mask ^= choice[mask])
    out.parts.emplace_back(mask_vertices(choice[mask]), *cost[choice[mask]]);
  std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  IndexCode c;
  c.field = f;
  c.n = n;
  c.M = 1;
  c.len = out.total_len;
  c.L = FMatrix(f, static_cast<std::size_t>(n), static_cast<std::size_t>(c.len));
  c.queries.assign(n, {});
  int col0 = 0;
  for (const auto& [verts, sc] : out.parts) {
    auto pc = detail::part_code(g, verts, sc, f, minrank, paths);
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (int k = 0; k < pc.len; ++k) c.L(verts[a] - 1, col0 + k) = pc.L(a, k);
      for (int k : pc.queries[a]) c.queries[verts[a] - 1].push_back(col0 + k);
    }
    col0 += pc.len;
  }
  out.code = with_decode(g, std::move(c));
  return out;
}

/// Rate bound of the fractional relaxation: minimise sum a_S len_S subject to
/// sum_{S containing i} a_S = 1 and sum_{S containing i} a_S r_S <= r for
/// every i, 0 <= a_S <= 1, over every option of every enabled provider.
inline Rational partition_lp_bound(const SideInfoGraph& g, Rational r, unsigned providers, const Field& f,
                                   const MinrankFn& minrank = {}) {
  const int n = g.n();
  if (n > 10) throw Error(Errc::TooLarge, "LP relaxation limited to 10 vertices");
  const detail::PathTable paths(g);
  std::vector<std::pair<std::uint64_t, SubsetCost>> vars;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
    for (const auto& o : subset_options(g, s, providers, f, minrank, &paths)) vars.emplace_back(s, o);
  LinearProgram lp;
  lp.num_vars = vars.size();
  for (const auto& [s, o] : vars) lp.objective.emplace_back(o.len);
  const BigRational rr(BigRational(r.numerator()) / r.denominator());
  for (int i = 0; i < n; ++i) {
    LinearProgram::Row cover{{}, Sense::Equal, 1}, local{{}, Sense::LessEq, rr};
    for (const auto& [s, o] : vars) {
      const bool in = (s >> i) & 1u;
      cover.coeffs.emplace_back(in ? 1 : 0);
      local.coeffs.emplace_back(in ? o.locality : 0);
    }
    lp.rows.push_back(std::move(cover));
    lp.rows.push_back(std::move(local));
  }
  for (std::size_t v = 0; v < vars.size(); ++v) {
    LinearProgram::Row cap{std::vector<BigRational>(vars.size(), 0), Sense::LessEq, 1};
    cap.coeffs[v] = 1;
    lp.rows.push_back(std::move(cap));
  }
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw Error(Errc::NoFeasiblePartition, "relaxation infeasible at this locality");
  return to_rational(sol.value);
}

}  // namespace ldic
