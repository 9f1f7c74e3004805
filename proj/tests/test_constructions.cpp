#include <gtest/gtest.h>

#include "ldic/constructions.hpp"
#include "ldic/oracles.hpp"
#include "support.hpp"

namespace {

using namespace ldic;
using tu::Rng;

std::vector<int> sizes(const IndexCode& c) {
  std::vector<int> s;
  for (const auto& q : c.queries) s.push_back(static_cast<int>(q.size()));
  return s;
}

void expect_sound(const SideInfoGraph& g, const IndexCode& c) {
  EXPECT_TRUE(validate(g, c).valid);
  EXPECT_TRUE(single_query_stats(c).holds);
}

template <class F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(Uncoded, Profile) {
  Rng rng(31);
  auto f = Field::make(3);
  for (int t = 0; t < 5; ++t) {
    auto g = tu::random_graph(rng, 5, 0.3);
    auto c = uncoded(g, f, 2);
    auto p = locality_profile(c);
    EXPECT_EQ(p.beta, Rational(5));
    EXPECT_EQ(p.r, Rational(1));
    EXPECT_EQ(p.r_avg, Rational(1));
    EXPECT_EQ(uncoded(g, f, 1).L, FMatrix::identity(f, 5));
    expect_sound(g, c);
  }
}

TEST(FractionalColoring, Examples) {
  auto f2 = Field::make(2);
  auto g3 = SideInfoGraph::directed_cycle(3);
  auto c = fractional_coloring_code(g3, {3, 1, {{1}, {2}, {3}}}, f2);
  EXPECT_EQ(locality_profile(c).beta, Rational(3));
  EXPECT_EQ(locality_profile(c).r, Rational(1));

  SideInfoGraph clique(3, {{2, 3}, {1, 3}, {1, 2}});
  auto k = fractional_coloring_code(clique, {1, 1, {{1}, {1}, {1}}}, f2);
  EXPECT_EQ(locality_profile(k).beta, Rational(1));
  expect_sound(clique, k);

  expect_errc(Errc::BadColoring, [&] { fractional_coloring_code(g3, {2, 1, {{1}, {2}, {1}}}, f2); });
}

TEST(FractionalColoring, OptimalColoringMeetsChiF) {
  Rng rng(32);
  auto f = Field::make(2);
  for (int t = 0; t < 10; ++t) {
    auto g = tu::random_graph(rng, tu::uniform_int(rng, 3, 6), 0.5);
    auto h = interference_graph(g);
    auto c = fractional_coloring_code(g, optimal_ab_coloring(h), f);
    expect_sound(g, c);
    EXPECT_EQ(locality_profile(c).beta, fractional_chromatic(h));
    EXPECT_EQ(locality_profile(c).r, Rational(1));
  }
}

TEST(CycleScalar, PivotNIsTheBasicCode) {
  auto f2 = Field::make(2);
  auto c = cycle_scalar_code(4, 4, f2);
  EXPECT_EQ(c.L, FMatrix(f2, 4, 3, {1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(c.queries, (std::vector<std::vector<int>>{{1}, {1, 2}, {2, 3}, {3}}));
  EXPECT_EQ(sizes(cycle_scalar_code(4, 1, f2)), (std::vector<int>{1, 1, 2, 2}));
  EXPECT_EQ(sizes(cycle_scalar_code(3, 1, f2)), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(locality_profile(cycle_scalar_code(3, 1, f2)).beta, Rational(2));
}

TEST(CycleScalar, AllPivotsValidate) {
  for (std::uint32_t q : {2u, 3u, 4u})
    for (int n = 2; n <= 8; ++n)
      for (int p = 1; p <= n; ++p) {
        auto c = cycle_scalar_code(n, p, Field::make(q));
        expect_sound(SideInfoGraph::directed_cycle(n), c);
        auto s = sizes(c);
        if (n >= 3) {
          for (int i = 1; i <= n; ++i) EXPECT_EQ(s[i - 1], (i == p || i == p % n + 1) ? 1 : 2);
        }
      }
}

TEST(CycleVector, Corners) {
  auto f2 = Field::make(2);
  auto c3 = locality_profile(cycle_vector_code(3, f2));
  EXPECT_EQ(c3.beta, Rational(2));
  EXPECT_EQ(c3.r, Rational(4, 3));
  EXPECT_EQ(cycle_vector_code(3, f2).M, 3);
  auto c4 = cycle_vector_code(4, f2);
  EXPECT_EQ(c4.M, 2);
  EXPECT_EQ(locality_profile(c4).beta, Rational(3));
  EXPECT_EQ(locality_profile(c4).r, Rational(3, 2));
  auto c5 = cycle_vector_code(5, f2);
  EXPECT_EQ(c5.M, 5);
  EXPECT_EQ(locality_profile(c5).r, Rational(8, 5));
}

TEST(CycleForMessageLength, Examples) {
  auto f2 = Field::make(2);
  auto c = cycle_code_for_message_length(5, 3, f2);
  EXPECT_EQ(sizes(c), (std::vector<int>{4, 5, 5, 5, 5}));
  EXPECT_EQ(locality_profile(c).r, Rational(5, 3));
  EXPECT_EQ(locality_profile(c).r_avg, Rational(8, 5));
  EXPECT_EQ(locality_profile(cycle_code_for_message_length(5, 2, f2)).r, Rational(2));
  EXPECT_EQ(locality_profile(cycle_code_for_message_length(3, 1, f2)).r, Rational(2));
}

TEST(CycleForMessageLength, MatchesCeilingFormula) {
  // Least integer total reads per receiver: ceil(2M(N-1)/N).
  auto f2 = Field::make(2);
  for (int n = 3; n <= 8; ++n)
    for (int m = 1; m <= 2 * n; ++m) {
      auto c = cycle_code_for_message_length(n, m, f2);
      expect_sound(SideInfoGraph::directed_cycle(n), c);
      auto p = locality_profile(c);
      const int ceil_reads = (2 * m * (n - 1) + n - 1) / n;
      EXPECT_EQ(p.r, Rational(ceil_reads, m)) << "N=" << n << " M=" << m;
      EXPECT_EQ(p.beta, Rational(n - 1));
      EXPECT_EQ(p.r_avg, Rational(2 * (n - 1), n));
    }
}

TEST(BipartiteQueryGraph, SmallDegreeVectors) {
  auto b = bipartite_query_graph({1, 1, 1, 2, 3});
  EXPECT_EQ(b.queries[3], (std::vector<int>{1, 4}));
  EXPECT_EQ(b.queries[4], (std::vector<int>{2, 3, 4}));
  auto two = bipartite_query_graph({1, 1});
  EXPECT_EQ(two.queries, (std::vector<std::vector<int>>{{1}, {1}}));
  EXPECT_EQ(two.symbol_nbrs[0], (std::vector<int>{1, 2}));
  expect_errc(Errc::InfeasibleDegrees, [] { bipartite_query_graph({2, 2, 2}); });
  expect_errc(Errc::InfeasibleDegrees, [] { bipartite_query_graph({1, 3, 1, 1}); });
  expect_errc(Errc::InfeasibleDegrees, [] { bipartite_query_graph({1, 1, 1}); });
}

TEST(BipartiteQueryGraph, Invariants) {
  Rng rng(33);
  for (int t = 0; t < 300; ++t) {
    const int n = tu::uniform_int(rng, 2, 9);
    // Random ascending positive vector summing to 2(N-1).
    std::vector<int> r(n, 1);
    for (int extra = n - 2; extra > 0; --extra) ++r[tu::uniform_int(rng, 0, n - 1)];
    std::sort(r.begin(), r.end());
    auto b = bipartite_query_graph(r);
    std::vector<int> sign_sum(n - 1, 0), degree(n - 1, 0);
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(static_cast<int>(b.queries[i - 1].size()), r[i - 1]);
      for (std::size_t s = 0; s < b.queries[i - 1].size(); ++s) {
        const int k = b.queries[i - 1][s];
        if (i < n) EXPECT_LE(k, i);
        sign_sum[k - 1] += b.signs[i - 1][s];
        ++degree[k - 1];
      }
      if (i < n) EXPECT_TRUE(std::count(b.queries[i - 1].begin(), b.queries[i - 1].end(), i));
    }
    for (int k = 0; k < n - 1; ++k) {
      EXPECT_EQ(degree[k], 2);
      EXPECT_EQ(sign_sum[k], 0);
    }
  }
}

TEST(FeasibleLocality, FiveVertexPermutation) {
  auto f3 = Field::make(3);
  auto c = feasible_locality_code({3, 1, 5, 2, 4}, {1, 1, 1, 2, 3}, f3);
  EXPECT_EQ(c.L, FMatrix(f3, 5, 4, {1, 2, 0, 1, 0, 1, 0, 2, 2, 0, 1, 2, 0, 0, 0, 1, 0, 0, 2, 0}));
  EXPECT_EQ(sizes(c), (std::vector<int>{1, 1, 1, 2, 3}));
  expect_sound(SideInfoGraph::from_permutation({3, 1, 5, 2, 4}), c);
}

TEST(FeasibleLocality, ThreeCycleMatchesScalarCode) {
  auto f2 = Field::make(2);
  auto c = feasible_locality_code({2, 3, 1}, {1, 1, 2}, f2);
  auto e = cycle_scalar_code(3, 1, f2);
  EXPECT_EQ(locality_profile(c).per_receiver, locality_profile(e).per_receiver);
  EXPECT_EQ(locality_profile(c).beta, locality_profile(e).beta);
}

TEST(FeasibleLocality, Errors) {
  auto f2 = Field::make(2);
  expect_errc(Errc::InfeasibleLocalities, [&] { feasible_locality_code({2, 3, 4, 1}, {1, 1, 1, 1}, f2); });
  expect_errc(Errc::InvalidInput, [&] { feasible_locality_code({1, 3, 2}, {1, 1, 2}, f2); });
  expect_errc(Errc::InvalidInput, [&] { feasible_locality_code({2, 2, 1}, {1, 1, 2}, f2); });
}

TEST(FeasibleLocality, UnsortedAndExcess) {
  auto f5 = Field::make(5);
  auto c = feasible_locality_code({2, 3, 4, 5, 1}, {3, 1, 4, 1, 1}, f5);
  expect_sound(SideInfoGraph::directed_cycle(5), c);
  const std::vector<int> cap{3, 1, 4, 1, 1};
  for (int i = 0; i < 5; ++i) EXPECT_LE(static_cast<int>(c.queries[i].size()), cap[i]);
  EXPECT_EQ(c.len, 4);
}

TEST(FeasibleLocality, UnionOfCyclesIsNoted) {
  auto f3 = Field::make(3);
  const std::vector<int> pi{2, 1, 4, 5, 3};
  auto c = feasible_locality_code(pi, {1, 1, 2, 2, 2}, f3);
  expect_sound(SideInfoGraph::from_permutation(pi), c);
  EXPECT_FALSE(c.notes.empty());
}

TEST(MinrankNm1, Examples) {
  auto f2 = Field::make(2);
  SideInfoGraph bi(3, {{2}, {1}, {}});
  auto c = minrank_nm1_code(bi, f2);
  EXPECT_EQ(c.L, FMatrix(f2, 3, 2, {1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(locality_profile(c).r, Rational(1));

  SideInfoGraph leaf(4, {{2}, {3}, {1}, {1}});
  auto p = locality_profile(minrank_nm1_code(leaf, f2));
  EXPECT_EQ(p.beta, Rational(3));
  EXPECT_EQ(p.r_avg, Rational(5, 4));
  EXPECT_EQ(p.r, Rational(2));

  auto cyc = minrank_nm1_code(SideInfoGraph::directed_cycle(5), f2);
  EXPECT_EQ(cyc.L, cycle_scalar_code(5, 5, f2).L);

  auto dag = minrank_nm1_code(SideInfoGraph(3, {{2}, {3}, {}}), f2);
  EXPECT_EQ(dag.L, FMatrix::identity(f2, 3));
  EXPECT_FALSE(dag.notes.empty());
}

TEST(FittingHelpers, ScalarCodeFromFittingAndRank) {
  auto f2 = Field::make(2);
  auto g = SideInfoGraph::directed_cycle(4);
  auto mr = minrank_bruteforce(g, f2);
  auto c = scalar_code_from_fitting(g, mr.witness);
  EXPECT_EQ(c.len, 3);
  expect_sound(g, c);
  for (int ell = 3; ell <= 4; ++ell) {
    auto a = fitting_matrix_of_rank(g, mr.witness, ell);
    EXPECT_TRUE(fits(g, a));
    EXPECT_EQ(static_cast<int>(rank(a)), ell);
    expect_sound(g, scalar_code_from_fitting(g, a, 4));
  }
  expect_errc(Errc::NoFittingMatrix, [&] { fitting_matrix_of_rank(g, mr.witness, 2); });
}

TEST(AisScalar, Examples) {
  auto f2 = Field::make(2);
  auto g = SideInfoGraph::directed_cycle(3);
  auto base = cycle_scalar_code(3, 3, f2);
  auto c = ais_scalar_code(g, {1, 2}, base);
  expect_sound(g, c);
  EXPECT_EQ(c.queries[0].size(), 1u);
  EXPECT_EQ(c.queries[1].size(), 1u);
  EXPECT_EQ(c.len, base.len);

  auto single = ais_scalar_code(g, {3}, base);
  EXPECT_EQ(single.queries[2], (std::vector<int>{1}));
  EXPECT_EQ(single.L.column(0), fitting_matrix(g, base).column(2));

  SideInfoGraph dag(3, {{2, 3}, {3}, {}});
  auto full = ais_scalar_code(dag, {1, 2, 3}, uncoded(dag, f2));
  EXPECT_EQ(sizes(full), (std::vector<int>{1, 1, 1}));

  expect_errc(Errc::NotAcyclic, [&] { ais_scalar_code(g, {1, 2, 3}, base); });
}

TEST(AisCover, Examples) {
  auto f2 = Field::make(2);
  auto g = SideInfoGraph::directed_cycle(3);
  auto base = cycle_scalar_code(3, 3, f2);
  auto cover = t_subset_cover(g, 2);
  EXPECT_EQ(cover.subsets.size(), 3u);
  EXPECT_EQ(cover.fold, 2);
  auto c = ais_cover_code(g, cover, base);
  expect_sound(g, c);
  EXPECT_LE(locality_profile(c).r, Rational(4, 3));
  EXPECT_EQ(locality_profile(c).beta, Rational(2));

  SideInfoGraph dag(3, {{2}, {3}, {}});
  auto u = ais_cover_code(dag, {{{1, 2, 3}}, 1}, uncoded(dag, f2));
  EXPECT_EQ(locality_profile(u).r, Rational(1));

  auto g5 = SideInfoGraph::directed_cycle(5);
  auto s = ais_cover_code(g5, t_subset_cover(g5, 1), cycle_scalar_code(5, 5, f2));
  EXPECT_LE(locality_profile(s).r, Rational(1 + 4 * 4, 5));
  EXPECT_EQ(s.M, 5);

  expect_errc(Errc::BadCover, [&] { ais_cover_code(g, {{{1, 2}}, 1}, base); });
  expect_errc(Errc::BadCover, [&] { ais_cover_code(g, {{{1, 2, 3}}, 1}, base); });
  expect_errc(Errc::BadCover, [&] { ais_cover_code(g, {{{1, 2}, {3}}, 2}, base); });
}

TEST(TSubsetCover, Examples) {
  auto g = SideInfoGraph::directed_cycle(3);
  auto singles = t_subset_cover(SideInfoGraph::directed_cycle(4), 1);
  EXPECT_EQ(singles.subsets.size(), 4u);
  EXPECT_EQ(singles.fold, 1);
  expect_errc(Errc::CycleTooShort, [&] { t_subset_cover(g, 3); });
  auto c = t_subset_cover(SideInfoGraph::directed_cycle(7), 3);
  EXPECT_EQ(c.subsets.size(), 35u);
  EXPECT_EQ(c.fold, 15);
}

TEST(CyclicSymmetry, Examples) {
  auto f2 = Field::make(2);
  auto g5 = SideInfoGraph::directed_cycle(5);
  auto a = fitting_matrix(g5, cycle_scalar_code(5, 5, f2));
  auto c = cyclic_symmetry_code(g5, a, 4);
  expect_sound(g5, c);
  EXPECT_EQ(c.M, 5);
  EXPECT_LE(locality_profile(c).r, Rational(8, 5));

  auto id = cyclic_symmetry_code(g5, FMatrix::identity(f2, 5), 5);
  EXPECT_EQ(locality_profile(id).r, Rational(1));

  auto g3 = SideInfoGraph::directed_cycle(3);
  auto c3 = cyclic_symmetry_code(g3, fitting_matrix(g3, cycle_scalar_code(3, 3, f2)), 2);
  EXPECT_LE(locality_profile(c3).r, Rational(4, 3));

  SideInfoGraph lop(3, {{2, 3}, {3}, {1}});
  expect_errc(Errc::NotCyclic, [&] { cyclic_symmetry_code(lop, FMatrix::identity(f2, 3), 3); });
  expect_errc(Errc::NoFittingMatrix, [&] { cyclic_symmetry_code(g5, a, 3); });
}

TEST(CoveringCodes, HammingRadiusOne) {
  for (std::uint32_t q : {2u, 3u, 4u})
    for (int m = 1; m <= 3; ++m) {
      auto f = Field::make(q);
      auto h = hamming_parity_check(m, f);
      int expect_cols = 1;
      for (int k = 1; k < m; ++k) expect_cols = expect_cols * static_cast<int>(q) + 1;
      EXPECT_EQ(static_cast<int>(h.cols()), expect_cols);
      EXPECT_EQ(covering_radius(h), 1);
    }
  auto f2 = Field::make(2);
  for (int k = 1; k <= 6; ++k)
    for (int rad = 1; rad <= k; ++rad) EXPECT_LE(*covering_radius(covering_code_for(k, rad, f2)), rad);
}

TEST(CoveringSeparation, Examples) {
  auto f2 = Field::make(2);
  auto g = SideInfoGraph::directed_cycle(4);
  auto base = scalar_code_from_fitting(g, minrank_bruteforce(g, f2).witness);
  ASSERT_EQ(base.len, 3);
  auto c = covering_separation_code(g, base, hamming_parity_check(3, f2), 1);
  expect_sound(g, c);
  EXPECT_EQ(locality_profile(c).beta, Rational(7));
  EXPECT_EQ(locality_profile(c).r, Rational(1));

  auto same = covering_separation_code(g, base, FMatrix::identity(f2, 3), 3);
  EXPECT_EQ(same.L, base.L);
  EXPECT_LE(locality_profile(same).r, Rational(3));

  expect_errc(Errc::RadiusExceeded, [&] { covering_separation_code(g, base, FMatrix::identity(f2, 3), 0); });
}

SideInfoGraph two_triangles() { return SideInfoGraph(6, {{2}, {3}, {1}, {5}, {6}, {4}}); }

TEST(PartitionCover, Examples) {
  auto f2 = Field::make(2);
  auto g = two_triangles();
  auto c2 = partition_cover_code(g, 2, CycleCover, f2);
  EXPECT_EQ(c2.total_len, 4);
  expect_sound(g, c2.code);
  EXPECT_LE(locality_profile(c2.code).r, Rational(2));
  auto c1 = partition_cover_code(g, 1, CycleCover, f2);
  EXPECT_EQ(c1.total_len, 6);

  SideInfoGraph bi(3, {{2}, {1}, {}});
  auto p = partition_cover_code(bi, 1, PartialClique, f2);
  EXPECT_EQ(p.total_len, 2);
  expect_sound(bi, p.code);

  expect_errc(Errc::NoFeasiblePartition, [&] { partition_cover_code(g, 0, AllProviders, f2); });
}

TEST(PartitionCover, PartialCliqueNeedsMdsOverLargeFields) {
  // Bidirected 4-clique minus a perfect matching: every vertex knows 2 of
  // the other 3, so the whole set costs 4 - 2 = 2 symbols.
  SideInfoGraph g(4, {{2, 3}, {1, 4}, {1, 4}, {2, 3}});
  auto f8 = Field::make(8);
  auto c = partition_cover_code(g, 2, PartialClique, f8);
  EXPECT_EQ(c.total_len, 2);
  expect_sound(g, c.code);
}

TEST(PartitionCover, MinrankProvider) {
  auto f2 = Field::make(2);
  auto g = SideInfoGraph::directed_cycle(4);
  MinrankFn fn = [&](const SideInfoGraph& h) -> std::optional<std::pair<int, FMatrix>> {
    auto r = minrank_bruteforce(h, f2);
    return std::make_pair(r.rank, r.witness);
  };
  auto c = partition_cover_code(g, 3, MinrankCover, f2, fn);
  EXPECT_EQ(c.total_len, 3);
  expect_sound(g, c.code);
}

TEST(PartitionCover, LpBoundBelowIntegerOptimum) {
  auto f2 = Field::make(2);
  Rng rng(34);
  for (int t = 0; t < 5; ++t) {
    auto g = tu::random_graph(rng, 5, 0.5);
    for (int r = 1; r <= 3; ++r) {
      auto dp = partition_cover_code(g, r, PartialClique | CycleCover, f2);
      EXPECT_LE(partition_lp_bound(g, Rational(r), PartialClique | CycleCover, f2), Rational(dp.total_len));
    }
  }
}

}  // namespace
