#pragma once

// Brute-force and exact reference computations used to check the
// constructions: minrank, (fractional) chromatic numbers, a:b colourings,
// information-theoretic decodability, minimal query sets, covering radii,
// and closed-form trade-off curves.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
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

namespace detail {

// q^e, saturating at `cap` + 1.
inline std::uint64_t bounded_pow(std::uint64_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t t = 0; t < e; ++t) {
    if (v > cap / q) return cap + 1;
    v *= q;
  }
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------- minrank

/// Size of a largest vertex set inducing an acyclic subgraph (n <= 24).
inline int max_acyclic_induced_subgraph(const SideInfoGraph& g) {
  const int n = g.n();
  if (n > 24) throw Error(Errc::TooLarge, "acyclic-subgraph search limited to 24 vertices");
  std::vector<std::uint32_t> out(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j : g.side_info(i)) out[i - 1] |= 1u << (j - 1);
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<char> acyclic(std::size_t{full} + 1, 0);
  acyclic[0] = 1;
  int best = 0;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((out[v] & mask) == 0) {
        acyclic[mask] = acyclic[mask & ~(1u << v)];
        break;
      }
    }
    if (acyclic[mask]) best = std::max(best, std::popcount(mask));
    if (mask == full) break;
  }
  return best;
}

struct MinrankOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;  ///< maximum fitting matrices examined
  bool use_lower_bound = true;  ///< stop once the incumbent meets the acyclic-subgraph bound
};

struct MinrankResult {
  int rank = 0;
  FMatrix witness;  ///< a fitting matrix of that rank
  std::uint64_t examined = 0;
};

/// Minimum rank over all matrices fitting G, by enumerating every
/// assignment of the free (side-information) entries in row-major order.
inline MinrankResult minrank_bruteforce(const SideInfoGraph& g, const Field& f, MinrankOptions opt = {}) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && g.knows(static_cast<int>(c) + 1, static_cast<int>(r) + 1)) free.emplace_back(r, c);

  FMatrix a = FMatrix::identity(f, n);
  MinrankResult best{static_cast<int>(n), a, 0};
  if (n == 0) return best;
  const int floor = opt.use_lower_bound && n <= 24 ? max_acyclic_induced_subgraph(g) : 0;
  if (best.rank <= floor) return best;

  std::vector<Felt> digit(free.size(), 0);
  for (;;) {
    if (best.examined >= opt.budget)
      throw BudgetExceeded("minrank enumeration exceeded budget of " + std::to_string(opt.budget), best.rank);
    ++best.examined;
    const int rk = static_cast<int>(rank(a));
    if (rk < best.rank) {
      best.rank = rk;
      best.witness = a;
      if (best.rank <= floor) return best;
    }
    std::size_t t = 0;
    while (t < free.size()) {
      digit[t] = digit[t] + 1 == f.q() ? 0 : digit[t] + 1;
      a(free[t].first, free[t].second) = digit[t];
      if (digit[t] != 0) break;
      ++t;
    }
    if (t == free.size()) break;
  }
  return best;
}

// ---------------------------------------------------------------- colourings

/// Exact chromatic number by backtracking over k = 1, 2, ...
inline int chromatic_number(const UndirectedGraph& h) {
  const int n = h.n();
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  auto degree = [&](int v) {
    int d = 0;
    for (int u = 1; u <= n; ++u) d += u != v && h.adjacent(u, v);
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) > degree(b); });
  std::vector<int> color(n + 1, -1);
  auto place = [&](auto&& self, int idx, int k, int used) -> bool {
    if (idx == n) return true;
    const int v = order[idx];
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool ok = true;
      for (int t = 0; t < idx && ok; ++t)
        if (color[order[t]] == c && h.adjacent(order[t], v)) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1, k, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
  };
  for (int k = 1;; ++k)
    if (place(place, 0, k, 0)) return k;
}

/// Maximal independent sets as vertex bitmasks, ascending (n <= 63).
inline std::vector<std::uint64_t> maximal_independent_sets(const UndirectedGraph& h) {
  const int n = h.n();
  if (n > 63) throw Error(Errc::TooLarge, "independent-set enumeration limited to 63 vertices");
  // Cliques of the complement, Bron-Kerbosch with pivoting.
  std::vector<std::uint64_t> comp(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !h.adjacent(u + 1, v + 1)) comp[u] |= std::uint64_t{1} << v;
  std::vector<std::uint64_t> out;
  auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    const int pivot = std::countr_zero(p | x);
    for (std::uint64_t cand = p & ~comp[pivot]; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const std::uint64_t bit = std::uint64_t{1} << v;
      self(self, r | bit, p & comp[v], x & comp[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  if (n > 0) bk(bk, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

struct FractionalColoring {
  Rational value;
  std::vector<std::pair<std::uint64_t, Rational>> weights;  ///< independent set -> positive weight
};

/// Optimal solution of min sum y_I subject to sum_{I containing v} y_I >= 1,
/// y >= 0, over maximal independent sets I.
inline FractionalColoring fractional_chromatic_lp(const UndirectedGraph& h) {
  const int n = h.n();
  if (n > 16) throw Error(Errc::TooLarge, "fractional chromatic number limited to 16 vertices");
  if (n == 0) return {Rational(0), {}};
  const auto sets = maximal_independent_sets(h);
  LinearProgram lp;
  lp.num_vars = sets.size();
  lp.objective.assign(sets.size(), 1);
  for (int v = 0; v < n; ++v) {
    LinearProgram::Row row;
    row.coeffs.assign(sets.size(), 0);
    for (std::size_t s = 0; s < sets.size(); ++s)
      if (sets[s] >> v & 1u) row.coeffs[s] = 1;
    row.sense = Sense::GreaterEq;
    row.rhs = 1;
    lp.rows.push_back(std::move(row));
  }
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw Error(Errc::InvalidInput, "colouring LP not solved");
  FractionalColoring fc{to_rational(sol.value), {}};
  for (std::size_t s = 0; s < sets.size(); ++s)
    if (sol.x[s] != 0) fc.weights.emplace_back(sets[s], to_rational(sol.x[s]));
  return fc;
}

inline Rational fractional_chromatic(const UndirectedGraph& h) { return fractional_chromatic_lp(h).value; }

/// An a:b colouring with a/b equal to the fractional chromatic number, read
/// off an optimal LP solution: with D the common denominator, independent set
/// I receives D*y_I fresh colours and each vertex keeps its first D.
inline ABColoring optimal_ab_coloring(const UndirectedGraph& h) {
  const auto fc = fractional_chromatic_lp(h);
  std::int64_t d = 1;
  for (const auto& [set, w] : fc.weights) d = std::lcm(d, w.denominator());
  ABColoring c;
  c.b = static_cast<int>(d);
  c.classes.assign(h.n(), {});
  int next = 1;
  for (const auto& [set, w] : fc.weights) {
    const auto count = (w * d).numerator();
    for (std::int64_t t = 0; t < count; ++t, ++next)
      for (int v = 0; v < h.n(); ++v)
        if ((set >> v & 1u) && static_cast<int>(c.classes[v].size()) < c.b) c.classes[v].push_back(next);
  }
  c.a = next - 1;
  return c;
}

/// Backtracking search for an a:b colouring. Colours never used so far are
/// interchangeable, so new colours are always introduced in increasing order.
inline std::optional<ABColoring> ab_coloring(const UndirectedGraph& h, int a, int b) {
  const int n = h.n();
  if (a < 1 || b < 1 || b > a) return std::nullopt;
  if (a > 63) throw Error(Errc::TooLarge, "palette limited to 63 colours");
  std::vector<std::uint64_t> cls(n, 0);
  auto assign = [&](auto&& self, int v, int fresh) -> bool {
    if (v == n) return true;
    std::uint64_t banned = 0;
    for (int u = 0; u < v; ++u)
      if (h.adjacent(u + 1, v + 1)) banned |= cls[u];
    // Choose b colours: any subset of the used ones plus a prefix of fresh ones.
    std::vector<int> used;
    for (int c = 0; c < fresh; ++c)
      if (!(banned >> c & 1u)) used.push_back(c);
    for (int take_fresh = std::min(b, a - fresh); take_fresh >= 0; --take_fresh) {
      const int take_used = b - take_fresh;
      if (take_used > static_cast<int>(used.size())) continue;
      std::uint64_t fresh_bits = 0;
      for (int t = 0; t < take_fresh; ++t) fresh_bits |= std::uint64_t{1} << (fresh + t);
      std::vector<int> pick(take_used);
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        std::uint64_t m = fresh_bits;
        for (int p : pick) m |= std::uint64_t{1} << used[p];
        cls[v] = m;
        if (self(self, v + 1, fresh + take_fresh)) return true;
        int t = take_used - 1;
        while (t >= 0 && pick[t] == static_cast<int>(used.size()) - take_used + t) --t;
        if (t < 0) break;
        ++pick[t];
        for (int s = t + 1; s < take_used; ++s) pick[s] = pick[s - 1] + 1;
      }
    }
    cls[v] = 0;
    return false;
  };
  if (!assign(assign, 0, 0)) return std::nullopt;
  ABColoring c{a, b, std::vector<std::vector<int>>(n)};
  for (int v = 0; v < n; ++v)
    for (int col = 0; col < a; ++col)
      if (cls[v] >> col & 1u) c.classes[v].push_back(col + 1);
  return c;
}

// ---------------------------------------------------------------- decodability

/// Information-theoretic decodability of an arbitrary deterministic encoder:
/// for every receiver, no two message vectors that agree on its side
/// information and on its queried symbols differ in its demand. `encoder`
/// maps the length-MN message (1-based layout as in IndexCode) to the
/// codeword.
template <class Encoder>
bool exhaustive_decodability(const SideInfoGraph& g, const Field& f, int M,
                             const std::vector<std::vector<int>>& queries, Encoder&& encoder) {
  const int n = g.n();
  const auto mn = static_cast<std::uint64_t>(M) * n;
  const std::uint64_t limit = std::uint64_t{1} << 20;
  const std::uint64_t total = detail::bounded_pow(f.q(), mn, limit);
  if (total > limit) throw Error(Errc::TooLarge, "q^(MN) exceeds 2^20");
  if (static_cast<int>(queries.size()) != n) throw Error(Errc::DimensionMismatch, "one query set per receiver");

  const int bits = std::bit_width(f.q() - 1);
  std::vector<std::vector<std::size_t>> known(n);
  std::vector<bool> packable(n);
  for (int i = 1; i <= n; ++i) {
    known[i - 1] = side_rows(g, M, i);
    packable[i - 1] = (known[i - 1].size() + queries[i - 1].size()) * static_cast<std::size_t>(bits) <= 64;
  }
  using Packed = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  using Wide = std::vector<std::pair<std::vector<Felt>, std::uint64_t>>;
  std::vector<Packed> packed(n);
  std::vector<Wide> wide(n);

  std::vector<Felt> x(mn, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const std::vector<Felt>& c = encoder(x);
    for (int i = 1; i <= n; ++i) {
      std::uint64_t demand = 0;
      for (int m = 0; m < M; ++m) demand = demand * f.q() + x[static_cast<std::size_t>((i - 1) * M + m)];
      if (packable[i - 1]) {
        std::uint64_t key = 0;
        for (auto t : known[i - 1]) key = (key << bits) | x[t];
        for (int k : queries[i - 1]) key = (key << bits) | c.at(static_cast<std::size_t>(k - 1));
        packed[i - 1].emplace_back(key, demand);
      } else {
        std::vector<Felt> key;
        for (auto t : known[i - 1]) key.push_back(x[t]);
        for (int k : queries[i - 1]) key.push_back(c.at(static_cast<std::size_t>(k - 1)));
        wide[i - 1].emplace_back(std::move(key), demand);
      }
    }
    for (std::size_t t = 0; t < mn; ++t) {
      if (++x[t] < f.q()) break;
      x[t] = 0;
    }
  }
  auto consistent = [](auto& v) {
    std::sort(v.begin(), v.end());
    for (std::size_t t = 1; t < v.size(); ++t)
      if (v[t].first == v[t - 1].first && v[t].second != v[t - 1].second) return false;
    return true;
  };
  for (int i = 0; i < n; ++i)
    if (!consistent(packed[i]) || !consistent(wide[i])) return false;
  return true;
}

inline bool exhaustive_decodability(const SideInfoGraph& g, const IndexCode& code) {
  check_shape(g, code);
  const Field& f = code.field;
  std::vector<Felt> prev(code.L.rows(), 0), c(static_cast<std::size_t>(code.len), 0);
  // Messages arrive in odometer order, so only the changed coordinates need
  // to be folded into the running codeword.
  auto encoder = [&](const std::vector<Felt>& x) -> const std::vector<Felt>& {
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t] == prev[t]) continue;
      const Felt delta = f.sub(x[t], prev[t]);
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.add(c[k], f.mul(delta, code.L(t, k)));
      prev[t] = x[t];
    }
    return c;
  };
  return exhaustive_decodability(g, f, code.M, code.queries, encoder);
}

// ---------------------------------------------------------------- queries

struct QueryWitness {
  int size = 0;
  std::vector<int> queries;  ///< 1-based, ascending
};

/// True iff receiver i can decode all of D_i from columns R of L plus its
/// side information.
inline bool decodes_from(const SideInfoGraph& g, const FMatrix& l, int M, int i, const std::vector<int>& r) {
  std::vector<char> known(l.rows(), 0);
  for (auto t : side_rows(g, M, i)) known[t] = 1;
  std::vector<std::size_t> rows;
  for (std::size_t t = 0; t < l.rows(); ++t)
    if (!known[t]) rows.push_back(t);
  FMatrix sub = l.select_columns(zero_based(r)).select_rows(rows);
  const std::size_t base = rank(sub);
  FMatrix aug(l.field(), rows.size(), sub.cols() + static_cast<std::size_t>(M));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t k = 0; k < sub.cols(); ++k) aug(a, k) = sub(a, k);
    for (int m = 0; m < M; ++m)
      aug(a, sub.cols() + m) = rows[a] == static_cast<std::size_t>((i - 1) * M + m) ? 1 : 0;
  }
  return rank(aug) == base;
}

/// Smallest query set for receiver i under encoder L (rows MN), searching
/// subsets by size and then lexicographically.
inline QueryWitness min_queries_for_encoder(const SideInfoGraph& g, const FMatrix& l, int M, int i) {
  if (l.rows() != static_cast<std::size_t>(M) * g.n()) throw Error(Errc::DimensionMismatch, "encoder rows != MN");
  const int len = static_cast<int>(l.cols());
  if (len > 24) throw Error(Errc::TooLarge, "query search limited to 24 columns");
  for (int s = 0; s <= len; ++s) {
    std::vector<int> r(s);
    std::iota(r.begin(), r.end(), 1);
    for (;;) {
      if (decodes_from(g, l, M, i, r)) return {s, r};
      int t = s - 1;
      while (t >= 0 && r[t] == len - s + t + 1) --t;
      if (t < 0) break;
      ++r[t];
      for (int u = t + 1; u < s; ++u) r[u] = r[u - 1] + 1;
    }
  }
  throw Error(Errc::Undecodable, "receiver " + std::to_string(i) + " cannot decode even from all columns");
}

// ---------------------------------------------------------------- covering radius

/// Largest, over all syndromes s in F_q^k, of the fewest columns of H whose
/// combination equals s; nullopt when the columns do not span F_q^k.
inline std::optional<int> covering_radius(const FMatrix& h) {
  const Field& f = h.field();
  const auto k = h.rows();
  const std::uint64_t limit = std::uint64_t{1} << 20;
  const std::uint64_t total = detail::bounded_pow(f.q(), k, limit);
  if (total > limit) throw Error(Errc::TooLarge, "q^k exceeds 2^20");
  auto digits = [&](std::uint64_t code) {
    std::vector<Felt> d(k);
    for (std::size_t t = 0; t < k; ++t, code /= f.q()) d[t] = static_cast<Felt>(code % f.q());
    return d;
  };
  auto pack = [&](const std::vector<Felt>& d) {
    std::uint64_t code = 0;
    for (std::size_t t = k; t-- > 0;) code = code * f.q() + d[t];
    return code;
  };
  std::vector<std::vector<Felt>> steps;
  for (std::size_t c = 0; c < h.cols(); ++c)
    for (Felt a = 1; a < f.q(); ++a) {
      std::vector<Felt> s(k);
      for (std::size_t t = 0; t < k; ++t) s[t] = f.mul(a, h(t, c));
      steps.push_back(std::move(s));
    }
  std::vector<int> dist(total, -1);
  std::queue<std::uint64_t> bfs;
  dist[0] = 0;
  bfs.push(0);
  int radius = 0;
  std::uint64_t reached = 1;
  while (!bfs.empty()) {
    const auto cur = bfs.front();
    bfs.pop();
    const auto d = digits(cur);
    for (const auto& s : steps) {
      std::vector<Felt> nd(k);
      for (std::size_t t = 0; t < k; ++t) nd[t] = f.add(d[t], s[t]);
      const auto nxt = pack(nd);
      if (dist[nxt] >= 0) continue;
      dist[nxt] = dist[cur] + 1;
      radius = std::max(radius, dist[nxt]);
      ++reached;
      bfs.push(nxt);
    }
  }
  if (reached != total) return std::nullopt;
  return radius;
}

// ---------------------------------------------------------------- scalar locality

struct ScalarLocalityOptimum {
  std::int64_t total_queries = 0;   ///< min over encoders of sum_i |R_i|
  std::vector<int> per_receiver;    ///< localities of the optimal encoder
  FMatrix encoder;                  ///< N x (N-1)
  std::uint64_t bases_examined = 0;
};

/// Minimum of sum_i |R_i| over every valid scalar linear encoder of length
/// N-1 with independent columns. Column spaces are hyperplanes, enumerated
/// by normal vector; within each, bases are enumerated as sets of projective
/// points. Receiver i's locality for a basis is the least coordinate weight
/// of a vector e_i + u (u supported on K_i) in the hyperplane.
inline ScalarLocalityOptimum min_total_queries_codim_one(const SideInfoGraph& g, const Field& f,
                                                         std::uint64_t budget = std::uint64_t{1} << 26) {
  const int n = g.n();
  if (n < 2) throw Error(Errc::InvalidInput, "need at least two receivers");
  const std::uint64_t limit = std::uint64_t{1} << 20;
  const std::uint64_t total = detail::bounded_pow(f.q(), static_cast<std::uint64_t>(n), limit);
  if (total > limit) throw Error(Errc::TooLarge, "q^N exceeds 2^20");
  const Felt q = f.q();

  auto digits = [&](std::uint64_t code) {
    std::vector<Felt> d(n);
    for (int t = 0; t < n; ++t, code /= q) d[t] = static_cast<Felt>(code % q);
    return d;
  };
  auto pack = [&](const std::vector<Felt>& d) {
    std::uint64_t code = 0;
    for (int t = n; t-- > 0;) code = code * q + d[t];
    return code;
  };
  auto projective = [&](const std::vector<Felt>& d) {
    for (Felt v : d)
      if (v != 0) return v == 1;
    return false;
  };
  auto dot = [&](const std::vector<Felt>& a, const std::vector<Felt>& b) {
    Felt s = 0;
    for (int t = 0; t < n; ++t) s = f.add(s, f.mul(a[t], b[t]));
    return s;
  };

  ScalarLocalityOptimum best;
  best.total_queries = -1;
  std::vector<std::vector<Felt>> all(total);
  for (std::uint64_t c = 0; c < total; ++c) all[c] = digits(c);

  for (std::uint64_t hc = 1; hc < total; ++hc) {
    const auto& h = all[hc];
    if (!projective(h)) continue;
    // Admissible targets e_i + u inside the hyperplane.
    std::vector<std::vector<std::uint64_t>> targets(n);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const auto& k = g.side_info(i);
      std::vector<Felt> u(k.size(), 0);
      for (;;) {
        std::vector<Felt> v(n, 0);
        v[i - 1] = 1;
        for (std::size_t t = 0; t < k.size(); ++t) v[k[t] - 1] = u[t];
        if (dot(h, v) == 0) targets[i - 1].push_back(pack(v));
        std::size_t t = 0;
        while (t < u.size() && ++u[t] == q) u[t++] = 0;
        if (t == u.size()) break;
      }
      ok = !targets[i - 1].empty();
    }
    if (!ok) continue;

    std::vector<std::uint64_t> points;
    for (std::uint64_t c = 1; c < total; ++c)
      if (projective(all[c]) && dot(h, all[c]) == 0) points.push_back(c);

    std::vector<int> weight(total, -1);
    weight[0] = 0;
    std::vector<std::uint64_t> span = {0};
    std::vector<std::uint64_t> chosen;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(chosen.size()) == n - 1) {
        if (++best.bases_examined > budget)
          throw BudgetExceeded("encoder enumeration exceeded budget of " + std::to_string(budget),
                               best.total_queries);
        std::int64_t sum = 0;
        std::vector<int> per(n);
        for (int i = 0; i < n; ++i) {
          int m = n;
          for (auto t : targets[i]) m = std::min(m, weight[t]);
          per[i] = m;
          sum += m;
        }
        if (best.total_queries < 0 || sum < best.total_queries) {
          best.total_queries = sum;
          best.per_receiver = per;
          std::vector<FVector> cols;
          for (auto c : chosen) cols.emplace_back(f, all[c]);
          best.encoder = FMatrix::from_columns(f, static_cast<std::size_t>(n), cols);
        }
        return;
      }
      for (std::size_t p = from; p < points.size(); ++p) {
        const auto v = points[p];
        if (weight[v] >= 0) continue;
        const std::size_t old = span.size();
        for (std::size_t s = 0; s < old; ++s) {
          const auto& base = all[span[s]];
          const auto& dv = all[v];
          for (Felt a = 1; a < q; ++a) {
            std::vector<Felt> sum(n);
            for (int t = 0; t < n; ++t) sum[t] = f.add(base[t], f.mul(a, dv[t]));
            const auto code = pack(sum);
            weight[code] = weight[span[s]] + 1;
            span.push_back(code);
          }
        }
        chosen.push_back(v);
        self(self, p + 1);
        chosen.pop_back();
        for (std::size_t s = old; s < span.size(); ++s) weight[span[s]] = -1;
        span.resize(old);
      }
    };
    dfs(dfs, 0);
  }
  if (best.total_queries < 0) throw Error(Errc::NoFittingMatrix, "no valid encoder of length N-1");
  return best;
}

// ---------------------------------------------------------------- closed forms

struct TradeoffPoint {
  Rational r;
  Rational beta;
  std::string provenance;
  std::optional<Rational> r_avg;
  std::optional<int> message_length;
};

struct TradeoffParams {
  std::optional<int> n;
  std::optional<int> girth;  ///< length of the shortest directed cycle
  std::optional<SideInfoGraph> graph;
};

/// Closed-form reference values:
///   frac-coloring-at-1         beta = fractional chromatic number of the interference graph, r = 1
///   n-cycle                    beta = max{N(N-1-r)/(N-2), N-1} for the directed N-cycle
///   three-cycle                beta = max{6-3r, 2}
///   minrank-nm1                beta = N-1 at r = 2 with r_avg = (N+N_c-2)/N
///   min-M-for-cycle-locality   message length N (odd) or N/2 (even) for r = 2(N-1)/N
inline TradeoffPoint reference_tradeoff(std::string_view name, const TradeoffParams& p, Rational r) {
  auto need_n = [&](int lo) {
    if (!p.n) throw Error(Errc::InvalidInput, std::string(name) + " needs N");
    if (*p.n < lo) throw Error(Errc::InvalidInput, std::string(name) + " needs N >= " + std::to_string(lo));
    return std::int64_t{*p.n};
  };
  const std::string prov = "reference:" + std::string(name);
  if (name == "frac-coloring-at-1") {
    if (!p.graph) throw Error(Errc::InvalidInput, "frac-coloring-at-1 needs a graph");
    return {Rational(1), fractional_chromatic(interference_graph(*p.graph)), prov, Rational(1), std::nullopt};
  }
  if (name == "three-cycle" || name == "n-cycle") {
    const std::int64_t n = name == "three-cycle" ? 3 : need_n(3);
    if (r < 1) throw Error(Errc::InvalidInput, "locality must be at least 1");
    Rational line = Rational(n) * (Rational(n - 1) - r) / Rational(n - 2);
    return {r, std::max(line, Rational(n - 1)), prov, std::nullopt, std::nullopt};
  }
  if (name == "minrank-nm1") {
    const std::int64_t n = need_n(2);
    if (!p.girth || *p.girth < 2 || *p.girth > n) throw Error(Errc::InvalidInput, "minrank-nm1 needs 2 <= N_c <= N");
    if (*p.girth == 2) return {Rational(1), Rational(n - 1), prov, Rational(1), 1};
    return {Rational(2), Rational(n - 1), prov, Rational(n + *p.girth - 2, n), 1};
  }
  if (name == "min-M-for-cycle-locality") {
    const std::int64_t n = need_n(3);
    const int m = static_cast<int>(n % 2 ? n : n / 2);
    return {Rational(2 * (n - 1), n), Rational(n - 1), prov, Rational(2 * (n - 1), n), m};
  }
  throw Error(Errc::UnknownFormula, "unknown trade-off formula '" + std::string(name) + "'");
}

}  // namespace ldic
