#pragma once

// Vector-linear index codes with receiver queries.
//
// Message symbol m of receiver i sits at coordinate (i-1)M + m of the
// length-MN message vector x (1-based); the codeword is c^T = x^T L. Column
// and coordinate labels in this header are 1-based, matching the query sets.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ldic/error.hpp"
#include "ldic/fmatrix.hpp"
#include "ldic/gfield.hpp"
#include "ldic/rational.hpp"
#include "ldic/sigraph.hpp"

namespace ldic {

/// Decoding vectors: decode[i-1][m-1] is d with x_{(i-1)M+m} = c.d - x.u.
using DecodeCoeffs = std::vector<std::vector<FVector>>;

struct IndexCode {
  Field field;
  int n = 0;
  int M = 1;
  int len = 0;
  FMatrix L;                               ///< MN x len
  std::vector<std::vector<int>> queries;   ///< R_i, sorted, 1-based columns
  std::optional<DecodeCoeffs> decode;
  std::vector<std::string> notes;          ///< human-readable remarks, not serialized
};

/// Rows D_i as 0-based indices into the message vector.
inline std::vector<std::size_t> demand_rows(int M, int i) {
  std::vector<std::size_t> rows(M);
  std::iota(rows.begin(), rows.end(), static_cast<std::size_t>((i - 1) * M));
  return rows;
}

/// Rows of the message blocks in K_i, 0-based, ascending.
inline std::vector<std::size_t> side_rows(const SideInfoGraph& g, int M, int i) {
  std::vector<std::size_t> rows;
  for (int j : g.side_info(i))
    for (int m = 0; m < M; ++m) rows.push_back(static_cast<std::size_t>((j - 1) * M + m));
  return rows;
}

inline void check_shape(const IndexCode& code) {
  if (code.M < 1) throw Error(Errc::DimensionMismatch, "message length must be positive");
  if (code.L.rows() != static_cast<std::size_t>(code.M) * code.n || code.L.cols() != static_cast<std::size_t>(code.len))
    throw Error(Errc::DimensionMismatch, "encoder is " + std::to_string(code.L.rows()) + "x" +
                                             std::to_string(code.L.cols()) + ", expected " +
                                             std::to_string(code.M * code.n) + "x" + std::to_string(code.len));
  if (!(code.L.field() == code.field)) throw Error(Errc::MixedFields, "encoder field differs from code field");
  if (static_cast<int>(code.queries.size()) != code.n)
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(code.n) + " query sets");
  for (const auto& r : code.queries)
    for (int k : r)
      if (k < 1 || k > code.len) throw Error(Errc::IndexOutOfRange, "query " + std::to_string(k));
}

inline void check_shape(const SideInfoGraph& g, const IndexCode& code) {
  check_shape(code);
  if (g.n() != code.n)
    throw Error(Errc::DimensionMismatch, "graph has " + std::to_string(g.n()) + " vertices, code has " +
                                             std::to_string(code.n) + " receivers");
}

inline std::vector<std::size_t> zero_based(const std::vector<int>& cols) {
  std::vector<std::size_t> z(cols.size());
  for (std::size_t t = 0; t < cols.size(); ++t) z[t] = static_cast<std::size_t>(cols[t] - 1);
  return z;
}

struct ValidationReport {
  bool valid = false;
  int failed_receiver = 0;               ///< first receiver that cannot decode, 0 if valid
  int failed_symbol = 0;                 ///< its first undecodable demand symbol (1-based within D_i)
  DecodeCoeffs decode;                   ///< filled for every receiver when valid
  std::vector<std::vector<FVector>> fitting;  ///< e_j + u_j per receiver and symbol when valid
  std::vector<int> unqueried_columns;    ///< columns no receiver reads
  std::vector<int> empty_queries;        ///< receivers with R_i empty
};

/// Receiver i decodes x_j for j in D_i iff e_j lies in span(L_k : k in R_i)
/// plus the coordinate subspace of its side information. The witness d_j is
/// the lowest-pivot solution of L_R d = e_j on the rows outside K_i.
inline ValidationReport validate(const SideInfoGraph& g, const IndexCode& code) {
  check_shape(g, code);
  const Field& f = code.field;
  const std::size_t rows = code.L.rows();
  ValidationReport rep;
  rep.valid = true;

  std::vector<char> used(code.len + 1, 0);
  for (int i = 1; i <= code.n; ++i) {
    for (int k : code.queries[i - 1]) used[k] = 1;
    if (code.queries[i - 1].empty()) rep.empty_queries.push_back(i);
  }
  for (int k = 1; k <= code.len; ++k)
    if (!used[k]) rep.unqueried_columns.push_back(k);

  for (int i = 1; i <= code.n; ++i) {
    const auto& r = code.queries[i - 1];
    std::vector<char> known(rows, 0);
    for (auto t : side_rows(g, code.M, i)) known[t] = 1;
    std::vector<std::size_t> free_rows;
    for (std::size_t t = 0; t < rows; ++t)
      if (!known[t]) free_rows.push_back(t);
    const auto rcols = zero_based(r);
    FMatrix sub = code.L.select_columns(rcols).select_rows(free_rows);
    FMatrix full = code.L.select_columns(rcols);

    const auto demand = demand_rows(code.M, i);
    FMatrix targets(f, free_rows.size(), demand.size());
    for (std::size_t t = 0; t < free_rows.size(); ++t)
      for (std::size_t m = 0; m < demand.size(); ++m) targets(t, m) = free_rows[t] == demand[m] ? 1 : 0;
    auto sols = solve_many(sub, targets);

    std::vector<FVector> d_i, fit_i;
    for (std::size_t m = 0; m < demand.size(); ++m) {
      auto& sol = sols[m];
      if (!sol) {
        rep.failed_receiver = i;
        rep.failed_symbol = static_cast<int>(m) + 1;
        rep.valid = false;
        break;
      }
      FVector d(f, code.len);
      for (std::size_t t = 0; t < rcols.size(); ++t) d[rcols[t]] = (*sol)[t];
      d_i.push_back(std::move(d));
      fit_i.push_back(full * *sol);
    }
    if (!rep.valid) break;
    rep.decode.push_back(std::move(d_i));
    rep.fitting.push_back(std::move(fit_i));
  }
  if (!rep.valid) {
    rep.decode.clear();
    rep.fitting.clear();
  }
  return rep;
}

/// Copy of `code` with decoding coefficients attached; throws InvalidInput if
/// the code does not validate.
inline IndexCode with_decode(const SideInfoGraph& g, IndexCode code) {
  auto rep = validate(g, code);
  if (!rep.valid)
    throw Error(Errc::InvalidInput, "receiver " + std::to_string(rep.failed_receiver) + " cannot decode symbol " +
                                        std::to_string(rep.failed_symbol));
  code.decode = std::move(rep.decode);
  return code;
}

/// Recovers x_{D_i} from the full codeword c and any vector `known` that
/// agrees with x on the side-information coordinates of receiver i (other
/// entries are ignored).
inline FVector decode(const IndexCode& code, const FVector& c, int i, const FVector& known) {
  if (!code.decode) throw Error(Errc::MissingCoeffs, "code carries no decoding coefficients");
  if (i < 1 || i > code.n) throw Error(Errc::IndexOutOfRange, "receiver " + std::to_string(i));
  if (c.size() != static_cast<std::size_t>(code.len) || known.size() != code.L.rows())
    throw Error(Errc::DimensionMismatch, "decode: codeword or side-information length");
  const Field& f = code.field;
  FVector out(f, code.M);
  for (int m = 0; m < code.M; ++m) {
    const FVector& d = (*code.decode)[i - 1][m];
    FVector u = code.L * d;
    const std::size_t j = static_cast<std::size_t>((i - 1) * code.M + m);
    u[j] = f.sub(u[j], 1);
    out[m] = f.sub(c.dot(d), known.dot(u));
  }
  return out;
}

/// Codeword x^T L.
inline FVector encode(const IndexCode& code, const FVector& x) { return code.L.transpose() * x; }

struct LocalityProfile {
  std::vector<Rational> per_receiver;  ///< |R_i| / M
  Rational r;                          ///< max_i r_i
  Rational r_avg;                      ///< sum |R_i| / (MN)
  Rational beta;                       ///< len / M
  bool degenerate = false;             ///< some R_i is empty
};

inline LocalityProfile locality_profile(const IndexCode& code) {
  LocalityProfile p;
  std::int64_t total = 0;
  p.r = 0;
  for (const auto& r : code.queries) {
    Rational ri(static_cast<std::int64_t>(r.size()), code.M);
    p.per_receiver.push_back(ri);
    p.r = std::max(p.r, ri);
    total += static_cast<std::int64_t>(r.size());
    if (r.empty()) p.degenerate = true;
  }
  p.r_avg = code.n ? Rational(total, std::int64_t{code.M} * code.n) : Rational(0);
  p.beta = Rational(code.len, code.M);
  return p;
}

struct SingleQueryStats {
  std::vector<std::vector<int>> single;   ///< columns of R_i read by no other receiver
  std::vector<std::vector<int>> shared;   ///< columns of R_i read by some other receiver
  std::int64_t total_single = 0;          ///< |union of the single sets|
  Rational bound;                         ///< 2 len' - sum |R_i|, len' = number of queried columns
  bool holds = false;
};

inline SingleQueryStats single_query_stats(const IndexCode& code) {
  std::vector<int> mult(code.len + 1, 0);
  std::int64_t total = 0;
  for (const auto& r : code.queries) {
    for (int k : r) ++mult[k];
    total += static_cast<std::int64_t>(r.size());
  }
  SingleQueryStats s;
  for (const auto& r : code.queries) {
    std::vector<int> one, many;
    for (int k : r) (mult[k] == 1 ? one : many).push_back(k);
    s.total_single += static_cast<std::int64_t>(one.size());
    s.single.push_back(std::move(one));
    s.shared.push_back(std::move(many));
  }
  // Unqueried columns carry nothing and are dropped before counting.
  const auto queried = std::count_if(mult.begin() + 1, mult.end(), [](int m) { return m > 0; });
  s.bound = Rational(2 * static_cast<std::int64_t>(queried) - total);
  s.holds = Rational(s.total_single) >= s.bound;
  return s;
}

/// Rewrites every column read by exactly one receiver i so that it is
/// supported on D_i, keeping all other columns, the queries and validity.
/// For receiver i the subspace W = (span of its shared columns + side
/// information) ∩ U_{D_i} is computed and extended to a basis of U_{D_i} by
/// the standard basis; the extension vectors become the single-use columns in
/// ascending order and leftover single-use columns become zero.
inline IndexCode normalize_zeroes(const SideInfoGraph& g, const IndexCode& code) {
  if (!validate(g, code).valid) throw Error(Errc::InvalidInput, "normalize_zeroes needs a valid code");
  const Field& f = code.field;
  const std::size_t rows = code.L.rows();
  const auto stats = single_query_stats(code);
  IndexCode out = code;
  out.decode.reset();

  for (int i = 1; i <= code.n; ++i) {
    const auto& single = stats.single[i - 1];
    if (single.empty()) continue;
    const auto demand = demand_rows(code.M, i);
    std::vector<char> inside(rows, 0);
    for (auto t : demand) inside[t] = 1;
    for (auto t : side_rows(g, code.M, i)) inside[t] = 1;
    std::vector<std::size_t> outside;
    for (std::size_t t = 0; t < rows; ++t)
      if (!inside[t]) outside.push_back(t);

    // Combinations a of shared columns vanishing outside D_i ∪ K_i; their
    // D_i-parts span W.
    const FMatrix shared = code.L.select_columns(zero_based(stats.shared[i - 1]));
    std::vector<FVector> w;
    if (shared.cols() > 0) {
      for (const auto& a : null_space_basis(shared.select_rows(outside))) {
        FVector y = shared * a;
        FVector yd(f, demand.size());
        for (std::size_t t = 0; t < demand.size(); ++t) yd[t] = y[demand[t]];
        if (!yd.is_zero()) w.push_back(std::move(yd));
      }
    }
    auto w_basis = extend_basis(std::span<const FVector>{}, w);
    std::vector<FVector> std_basis;
    for (std::size_t t = 0; t < demand.size(); ++t) std_basis.push_back(FVector::unit(f, demand.size(), t));
    auto ext = extend_basis(w_basis, std_basis);
    if (ext.size() > single.size())
      throw Error(Errc::InvalidInput, "receiver " + std::to_string(i) + " has too few single-use columns");
    for (std::size_t s = 0; s < single.size(); ++s) {
      FVector col(f, rows);
      if (s < ext.size())
        for (std::size_t t = 0; t < demand.size(); ++t) col[demand[t]] = ext[s][t];
      out.L.set_column(static_cast<std::size_t>(single[s] - 1), col);
    }
  }
  return with_decode(g, std::move(out));
}

/// Drops redundant queries (lowest index first, while the column is in the
/// span of the receiver's other queried columns), then deletes columns no
/// receiver reads.
inline IndexCode prune_queries(const SideInfoGraph& g, const IndexCode& code) {
  if (!validate(g, code).valid) throw Error(Errc::InvalidInput, "prune_queries needs a valid code");
  IndexCode out = code;
  out.decode.reset();
  for (auto& r : out.queries) {
    std::vector<int> keep = r;
    for (int k : r) {
      std::vector<FVector> rest;
      for (int j : keep)
        if (j != k) rest.push_back(code.L.column(j - 1));
      if (in_span(rest, code.L.column(k - 1)).member) keep.erase(std::find(keep.begin(), keep.end(), k));
    }
    r = std::move(keep);
  }
  std::vector<int> relabel(code.len + 1, 0);
  for (const auto& r : out.queries)
    for (int k : r) relabel[k] = 1;
  std::vector<std::size_t> live;
  for (int k = 1; k <= code.len; ++k)
    if (relabel[k]) {
      live.push_back(static_cast<std::size_t>(k - 1));
      relabel[k] = static_cast<int>(live.size());
    }
  out.L = code.L.select_columns(live);
  out.len = static_cast<int>(live.size());
  for (auto& r : out.queries)
    for (int& k : r) k = relabel[k];
  return with_decode(g, std::move(out));
}

/// Block-diagonal composition. With l = lcm of the message lengths, code j
/// is used mult[j] * l / M_j times, each time on its own slice of every
/// message and its own block of codeword symbols.
inline IndexCode time_share(const std::vector<IndexCode>& codes, const std::vector<int>& mult) {
  if (codes.empty()) throw Error(Errc::EmptySet, "time_share of no codes");
  if (codes.size() != mult.size()) throw Error(Errc::DimensionMismatch, "one multiplicity per code");
  const Field& f = codes.front().field;
  const int n = codes.front().n;
  std::int64_t l = 1;
  for (std::size_t j = 0; j < codes.size(); ++j) {
    check_shape(codes[j]);
    if (!(codes[j].field == f)) throw Error(Errc::MixedFields, "time_share over different fields");
    if (codes[j].n != n) throw Error(Errc::MixedGraphs, "time_share over different receiver sets");
    if (mult[j] < 1) throw Error(Errc::InvalidInput, "multiplicities must be positive");
    l = std::lcm(l, std::int64_t{codes[j].M});
  }
  std::int64_t m_tot = 0, len_tot = 0;
  std::vector<int> copies(codes.size());
  for (std::size_t j = 0; j < codes.size(); ++j) {
    copies[j] = static_cast<int>(mult[j] * (l / codes[j].M));
    m_tot += std::int64_t{copies[j]} * codes[j].M;
    len_tot += std::int64_t{copies[j]} * codes[j].len;
  }
  if (m_tot * n > 1'000'000 || len_tot > 1'000'000) throw Error(Errc::TooLarge, "time-shared code too large");

  IndexCode out;
  out.field = f;
  out.n = n;
  out.M = static_cast<int>(m_tot);
  out.len = static_cast<int>(len_tot);
  out.L = FMatrix(f, static_cast<std::size_t>(m_tot) * n, static_cast<std::size_t>(len_tot));
  out.queries.assign(n, {});
  const bool all_decode = std::all_of(codes.begin(), codes.end(), [](const IndexCode& c) { return c.decode.has_value(); });
  DecodeCoeffs dec(n);

  int off = 0, col_off = 0;
  for (std::size_t j = 0; j < codes.size(); ++j) {
    const IndexCode& c = codes[j];
    for (int copy = 0; copy < copies[j]; ++copy) {
      for (int i = 1; i <= n; ++i)
        for (int m = 0; m < c.M; ++m) {
          const std::size_t src = static_cast<std::size_t>((i - 1) * c.M + m);
          const std::size_t dst = static_cast<std::size_t>((i - 1) * m_tot + off + m);
          for (int k = 0; k < c.len; ++k) out.L(dst, static_cast<std::size_t>(col_off + k)) = c.L(src, k);
        }
      for (int i = 1; i <= n; ++i) {
        for (int k : c.queries[i - 1]) out.queries[i - 1].push_back(col_off + k);
        if (all_decode)
          for (int m = 0; m < c.M; ++m) {
            FVector d(f, static_cast<std::size_t>(len_tot));
            const FVector& src = (*c.decode)[i - 1][m];
            for (int k = 0; k < c.len; ++k) d[static_cast<std::size_t>(col_off + k)] = src[k];
            dec[i - 1].push_back(std::move(d));
          }
      }
      off += c.M;
      col_off += c.len;
    }
  }
  // Decoding vectors were appended copy by copy, which is the order of the
  // symbols within each receiver's block.
  if (all_decode) out.decode = std::move(dec);
  return out;
}

/// Code in which message i plays the role of message ((i - shift - 1) mod n) + 1
/// of `code`; valid for G whenever `code` is and i -> i mod n + 1 is an
/// automorphism of G.
inline IndexCode rotate_messages(const IndexCode& code, int shift) {
  const int n = code.n;
  IndexCode out = code;
  out.decode.reset();
  for (int i = 1; i <= n; ++i) {
    const int src = ((i - 1 - shift) % n + n) % n + 1;
    for (int m = 0; m < code.M; ++m)
      for (int k = 0; k < code.len; ++k)
        out.L(static_cast<std::size_t>((i - 1) * code.M + m), k) =
            code.L(static_cast<std::size_t>((src - 1) * code.M + m), k);
    out.queries[i - 1] = code.queries[src - 1];
    if (code.decode) {
      if (!out.decode) out.decode = DecodeCoeffs(n);
      (*out.decode)[i - 1] = (*code.decode)[src - 1];
    }
  }
  return out;
}

/// Time-shares the n rotations of `code` once each, equalising the receivers.
inline IndexCode symmetrize_cyclic(const SideInfoGraph& g, const IndexCode& code) {
  if (!has_cyclic_automorphism(g)) throw Error(Errc::NotCyclic, "i -> i mod N + 1 is not an automorphism");
  auto base = with_decode(g, code);
  std::vector<IndexCode> parts;
  for (int s = 1; s <= g.n(); ++s) parts.push_back(rotate_messages(base, s));
  auto out = time_share(parts, std::vector<int>(parts.size(), 1));
  return with_decode(g, std::move(out));
}

/// True iff A is N x N with unit diagonal and A[j][i] = 0 unless j in K_i.
inline bool fits(const SideInfoGraph& g, const FMatrix& a) {
  const auto n = static_cast<std::size_t>(g.n());
  if (a.rows() != n || a.cols() != n) return false;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = 1; j <= g.n(); ++j) {
      const Felt v = a(j - 1, i - 1);
      if (i == j ? v != 1 : (v != 0 && !g.knows(i, j))) return false;
    }
  return true;
}

/// Fitting matrix of a valid scalar code: column i is e_i + u_i from the
/// validation witness.
inline FMatrix fitting_matrix(const SideInfoGraph& g, const IndexCode& code) {
  if (code.M != 1) throw Error(Errc::InvalidInput, "fitting matrices are defined for scalar codes");
  auto rep = validate(g, code);
  if (!rep.valid) throw Error(Errc::InvalidInput, "code does not validate");
  std::vector<FVector> cols;
  for (auto& v : rep.fitting) cols.push_back(v.front());
  return FMatrix::from_columns(code.field, code.L.rows(), cols);
}

}  // namespace ldic
