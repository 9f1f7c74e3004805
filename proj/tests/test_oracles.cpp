#include <gtest/gtest.h>

#include "ldic/constructions.hpp"
#include "ldic/oracles.hpp"
#include "support.hpp"

namespace {

using namespace ldic;
using tu::Rng;

template <class F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(Minrank, Examples) {
  auto f2 = Field::make(2);
  EXPECT_EQ(minrank_bruteforce(SideInfoGraph::directed_cycle(3), f2).rank, 2);
  EXPECT_EQ(minrank_bruteforce(SideInfoGraph::directed_cycle(5), f2).rank, 4);
  SideInfoGraph dag(4, {{2, 3}, {3}, {4}, {}});
  EXPECT_EQ(minrank_bruteforce(dag, f2).rank, 4);
  EXPECT_EQ(minrank_bruteforce(dag, f2, {std::uint64_t{1} << 24, false}).rank, 4);
  SideInfoGraph clique(3, {{2, 3}, {1, 3}, {1, 2}});
  EXPECT_EQ(minrank_bruteforce(clique, f2).rank, 1);
}

TEST(Minrank, WitnessAndBounds) {
  Rng rng(41);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = Field::make(q);
    for (int t = 0; t < 15; ++t) {
      auto g = tu::random_graph(rng, tu::uniform_int(rng, 2, 5), 0.45);
      auto full = minrank_bruteforce(g, f, {std::uint64_t{1} << 24, false});
      auto fast = minrank_bruteforce(g, f);
      EXPECT_EQ(full.rank, fast.rank);
      EXPECT_TRUE(fits(g, full.witness));
      EXPECT_EQ(static_cast<int>(rank(full.witness)), full.rank);
      EXPECT_GE(full.rank, max_acyclic_induced_subgraph(g));
      EXPECT_LE(full.rank, g.n());
    }
  }
}

TEST(Minrank, BudgetExceeded) {
  auto f3 = Field::make(3);
  SideInfoGraph clique(4, {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}});
  expect_errc(Errc::BudgetExceeded, [&] { minrank_bruteforce(clique, f3, {10, false}); });
}

TEST(MaxAcyclic, Examples) {
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(max_acyclic_induced_subgraph(SideInfoGraph::directed_cycle(n)), n - 1);
  EXPECT_EQ(max_acyclic_induced_subgraph(SideInfoGraph(3, {{2, 3}, {3}, {}})), 3);
  EXPECT_EQ(max_acyclic_induced_subgraph(SideInfoGraph(3, {{2, 3}, {1, 3}, {1, 2}})), 1);
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(UndirectedGraph::complete(3)), 3);
  EXPECT_EQ(chromatic_number(UndirectedGraph(4)), 1);
  EXPECT_EQ(chromatic_number(UndirectedGraph::cycle(5)), 3);
  EXPECT_EQ(chromatic_number(UndirectedGraph::cycle(6)), 2);
}

TEST(FractionalChromatic, Examples) {
  EXPECT_EQ(fractional_chromatic(UndirectedGraph::cycle(5)), Rational(5, 2));
  EXPECT_EQ(fractional_chromatic(UndirectedGraph::complete(4)), Rational(4));
  EXPECT_EQ(fractional_chromatic(UndirectedGraph(3)), Rational(1));
  EXPECT_EQ(fractional_chromatic(UndirectedGraph::cycle(7)), Rational(7, 3));
}

TEST(FractionalChromatic, BoundsAndWeights) {
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    const int n = tu::uniform_int(rng, 1, 7);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (tu::coin(rng, 0.5)) edges.emplace_back(i, j);
    UndirectedGraph h(n, edges);
    auto fc = fractional_chromatic_lp(h);
    EXPECT_LE(fc.value, Rational(chromatic_number(h)));
    Rational sum(0);
    std::vector<Rational> cover(n, Rational(0));
    for (const auto& [set, w] : fc.weights) {
      sum += w;
      for (int v = 0; v < n; ++v)
        if (set >> v & 1u) cover[v] += w;
    }
    EXPECT_EQ(sum, fc.value);
    for (const auto& c : cover) EXPECT_GE(c, Rational(1));
    auto ab = optimal_ab_coloring(h);
    EXPECT_EQ(coloring_error(h, ab), "");
    EXPECT_EQ(Rational(ab.a, ab.b), fc.value);
  }
}

TEST(AbColoring, Examples) {
  EXPECT_FALSE(ab_coloring(UndirectedGraph::complete(3), 5, 2).has_value());
  auto c5 = ab_coloring(UndirectedGraph::cycle(5), 5, 2);
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(coloring_error(UndirectedGraph::cycle(5), *c5), "");
  EXPECT_TRUE(ab_coloring(UndirectedGraph::complete(3), 6, 2).has_value());
  EXPECT_FALSE(ab_coloring(UndirectedGraph::cycle(5), 4, 2).has_value());
}

TEST(ExhaustiveDecodability, LinearCodes) {
  auto f2 = Field::make(2);
  auto g = SideInfoGraph::directed_cycle(3);
  auto e = cycle_scalar_code(3, 3, f2);
  EXPECT_TRUE(exhaustive_decodability(g, e));
  auto broken = e;
  broken.queries[1] = {2};
  EXPECT_FALSE(exhaustive_decodability(g, broken));
}

TEST(ExhaustiveDecodability, AgreesWithValidate) {
  Rng rng(43);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = Field::make(q);
    for (int t = 0; t < 40; ++t) {
      auto g = tu::random_graph(rng, tu::uniform_int(rng, 2, 4), 0.4);
      auto c = tu::random_valid_code(rng, g, f, 1, tu::uniform_int(rng, 0, 2));
      if (t % 2) c = tu::corrupt(rng, c);
      EXPECT_EQ(exhaustive_decodability(g, c), validate(g, c).valid);
    }
  }
}

TEST(ExhaustiveDecodability, NonlinearEncoder) {
  // Over GF(3), c = x1 * x2 reveals nothing usable to receiver 1 when x2 = 0.
  auto f3 = Field::make(3);
  SideInfoGraph g(2, {{2}, {1}});
  auto product = [&](const std::vector<Felt>& x) { return std::vector<Felt>{f3.mul(x[0], x[1])}; };
  EXPECT_FALSE(exhaustive_decodability(g, f3, 1, {{1}, {1}}, product));
  auto sum = [&](const std::vector<Felt>& x) { return std::vector<Felt>{f3.add(x[0], x[1])}; };
  EXPECT_TRUE(exhaustive_decodability(g, f3, 1, {{1}, {1}}, sum));
  expect_errc(Errc::TooLarge, [&] {
    exhaustive_decodability(SideInfoGraph::directed_cycle(13), f3, 1, std::vector<std::vector<int>>(13), sum);
  });
}

TEST(MinQueries, Examples) {
  auto f2 = Field::make(2);
  auto g = SideInfoGraph::directed_cycle(4);
  auto e = cycle_scalar_code(4, 4, f2);
  for (int i = 1; i <= 4; ++i) {
    auto w = min_queries_for_encoder(g, e.L, 1, i);
    EXPECT_EQ(w.queries, e.queries[i - 1]) << i;
  }
  expect_errc(Errc::Undecodable, [&] { min_queries_for_encoder(g, FMatrix(f2, 4, 2), 1, 1); });
}

TEST(CoveringRadius, Examples) {
  auto f2 = Field::make(2);
  FMatrix h(f2, 3, 7, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1});
  EXPECT_EQ(covering_radius(h), 1);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(covering_radius(FMatrix::identity(f2, k)), static_cast<int>(k));
  EXPECT_FALSE(covering_radius(FMatrix(f2, 2, 3, {1, 1, 0, 0, 0, 0})).has_value());
  FMatrix rep(f2, 1, 3, {1, 1, 1});
  EXPECT_EQ(covering_radius(rep), 1);
}

TEST(CodimOne, Examples) {
  auto f2 = Field::make(2);
  EXPECT_EQ(min_total_queries_codim_one(SideInfoGraph::directed_cycle(3), f2).total_queries, 4);
  EXPECT_EQ(min_total_queries_codim_one(SideInfoGraph::directed_cycle(5), f2).total_queries, 8);
  SideInfoGraph leaf(4, {{2}, {3}, {1}, {1}});
  auto o = min_total_queries_codim_one(leaf, f2);
  EXPECT_EQ(o.total_queries, 5);
  EXPECT_EQ(o.encoder.cols(), 3u);
  expect_errc(Errc::NoFittingMatrix, [&] { min_total_queries_codim_one(SideInfoGraph(3, {{2}, {3}, {}}), f2); });
}

TEST(ReferenceTradeoff, Examples) {
  TradeoffParams none;
  EXPECT_EQ(reference_tradeoff("three-cycle", none, Rational(1)).beta, Rational(3));
  EXPECT_EQ(reference_tradeoff("three-cycle", none, Rational(7, 6)).beta, Rational(5, 2));
  EXPECT_EQ(reference_tradeoff("three-cycle", none, Rational(4, 3)).beta, Rational(2));
  EXPECT_EQ(reference_tradeoff("three-cycle", none, Rational(2)).beta, Rational(2));

  TradeoffParams five;
  five.n = 5;
  EXPECT_EQ(reference_tradeoff("n-cycle", five, Rational(1)).beta, Rational(5));
  EXPECT_EQ(reference_tradeoff("n-cycle", five, Rational(8, 5)).beta, Rational(4));
  EXPECT_EQ(reference_tradeoff("n-cycle", five, Rational(3, 2)).beta, Rational(25, 6));
  EXPECT_EQ(reference_tradeoff("min-M-for-cycle-locality", five, Rational(8, 5)).message_length, 5);
  TradeoffParams four;
  four.n = 4;
  EXPECT_EQ(reference_tradeoff("min-M-for-cycle-locality", four, Rational(3, 2)).message_length, 2);

  TradeoffParams mr;
  mr.n = 4;
  mr.girth = 3;
  auto p = reference_tradeoff("minrank-nm1", mr, Rational(2));
  EXPECT_EQ(p.beta, Rational(3));
  EXPECT_EQ(*p.r_avg, Rational(5, 4));

  TradeoffParams gp;
  gp.graph = SideInfoGraph::directed_cycle(5);
  EXPECT_EQ(reference_tradeoff("frac-coloring-at-1", gp, Rational(1)).beta, Rational(5));

  expect_errc(Errc::UnknownFormula, [&] { reference_tradeoff("nope", none, Rational(1)); });
  expect_errc(Errc::InvalidInput, [&] { reference_tradeoff("n-cycle", none, Rational(1)); });
}

}  // namespace
