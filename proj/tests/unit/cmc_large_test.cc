#include <gtest/gtest.h>

#include "densecut/cmc_large.h"
#include "densecut/errors.h"
#include "densecut/generators.h"
#include "densecut/lp.h"
#include "densecut/oracle.h"
#include "support/naive.h"

namespace densecut {
namespace {

Graph Complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

TEST(Grid, FormulaExample) {
  const Grid grid = MakeGrid(420, 1, 1);
  EXPECT_EQ(grid.nu, 1);
  EXPECT_EQ(grid.values.size(), 421u);
  EXPECT_EQ(grid.values.back(), 420);
}

TEST(Grid, ExplicitStrideCoversN) {
  const Grid grid = GridWithStride(10, 3);
  EXPECT_EQ(grid.values, std::vector<Rational>({0, 3, 6, 9, 12}));
}

TEST(RoundDown, Examples) {
  EXPECT_EQ(RoundDown({MakeRational(27, 10), 3, 0}), std::vector<std::int64_t>({2, 3, 0}));
}

CellPartition ThreeCells() {
  CellPartition p;
  p.kappa = 1;
  p.cells.push_back({{}, 0, 0, {1, 4, 6}});
  p.cells.push_back({{}, 0, 0, {0, 2}});
  p.cells.push_back({{}, 0, 0, {3, 5}});
  return p;
}

TEST(AssembleCut, Examples) {
  const CellPartition p = ThreeCells();
  EXPECT_EQ(AssembleCut(p, {3, 2, 2}).Count(), 7);
  EXPECT_TRUE(AssembleCut(p, {0, 0, 0}).Empty());
  EXPECT_EQ(AssembleCut(p, {1, 0, 0}).Members(), std::vector<Vertex>({1}));
  EXPECT_THROW(AssembleCut(p, {4, 0, 0}), std::invalid_argument);
}

TEST(Rebalance, Examples) {
  const VertexCosts ones = VertexCosts::Uniform(6, 1);
  const Cut l = Cut::FromMembers(6, std::vector<Vertex>{1, 2, 3});
  EXPECT_EQ(Rebalance(ones, l, 3, MakeRational(1, 3)).Members(), l.Members());
  EXPECT_EQ(Rebalance(ones, Cut(6), 4, MakeRational(1, 4)).Count(), 3);
  EXPECT_EQ(Rebalance(ones, Cut::Full(6), 2, MakeRational(1, 2)).Count(), 3);
  // Only even costs: the window [3, 3] is unreachable.
  EXPECT_THROW(Rebalance(VertexCosts::Uniform(4, 2), Cut(4), 3, 0), Unsatisfiable);
}

TEST(Rebalance, LandsInWindowWhenCostsAreSmall) {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 20;
    const auto cv = naive::RandomCosts(n, 0, 3, trial);
    const VertexCosts c(cv);
    if (c.total() < 2) continue;
    // Window wider than the largest cost, inside [0, c(V)].
    const Rational rho = MakeRational(c.total(), 2);
    const Rational zeta = Min(Rational(1), Rational(4) / rho);
    const Cut l = Cut::FromMask(n, naive::RandomCosts(1, 0, (1LL << n) - 1, trial)[0]);
    const Cut out = Rebalance(c, l, rho, zeta);
    const Rational cost(static_cast<long>(Cost(c, out)));
    EXPECT_GE(cost, rho * (1 - zeta));
    EXPECT_LE(cost, rho * (1 + zeta));
  }
}

TEST(BucketWidth, Formula) {
  EXPECT_EQ(BucketWidth(1, MakeRational(1, 2), MakeRational(1, 3), 30), MakeRational(1, 3));
}

LargeConfig SmallGridConfig() {
  LargeConfig cfg;
  cfg.decomposition_eps = MakeRational(1, 2);
  cfg.nu = 1;
  cfg.mode = DecompositionMode::kDeterministic;
  return cfg;
}

TEST(SolveLarge, CompleteGraphWithinFactor) {
  const CmcInstance inst{Complete(8), VertexCosts::Uniform(8, 8), 24, MakeRational(1, 3)};
  const LargeResult r = ConstrainedMinCutLarge(inst, MakeRational(1, 2), SmallGridConfig(), 1);
  const auto opt = BruteForceCmc(inst);
  ASSERT_TRUE(opt.has_value());
  EXPECT_EQ(opt->cut_size, 12);
  EXPECT_TRUE(inst.Feasible(r.cut));
  EXPECT_EQ(CutSize(inst.graph, r.cut), r.cut_size);
  EXPECT_LE(2 * r.cut_size, 3 * opt->cut_size);
  EXPECT_EQ(r.report.widths.size(), 1u);
}

TEST(SolveLarge, InfeasibleWindow) {
  const CmcInstance inst{Complete(6), VertexCosts::Uniform(6, 6), 2, MakeRational(1, 2)};
  const LargeResult r = SolveLarge(inst, MakeRational(1, 2), SmallGridConfig(), 1);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.report.failure, "instance infeasible");
  EXPECT_THROW(ConstrainedMinCutLarge(inst, MakeRational(1, 2), SmallGridConfig(), 1), NoFeasibleProfile);
}

// For K6 the largest block sum 30 stays below 0.99 * 6 * sqrt(30).
TEST(SolveLarge, WidthZeroHasOneProfile) {
  const CmcInstance inst{Complete(6), VertexCosts::Uniform(6, 6), 18, MakeRational(1, 3)};
  LargeConfig cfg = SmallGridConfig();
  cfg.decomposition_eps = MakeRational(99, 100);
  const LargeResult r = ConstrainedMinCutLarge(inst, MakeRational(1, 2), cfg, 1);
  EXPECT_EQ(r.report.widths, std::vector<int>({0}));
  EXPECT_EQ(r.report.profiles_evaluated, 1);
  EXPECT_TRUE(inst.Feasible(r.cut));
}

// The rounded profile of the optimal cut always gives a feasible LP.
TEST(SolveLarge, OptimalProfileIsLpFeasible) {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8 + trial % 5;
    const DenseGraph dg = GenDense(n, MakeRational(1, 2), 500 + trial);
    const VertexCosts c = GenCosts(n, MakeRational(1, 2), 600 + trial);
    const CmcInstance inst{dg.graph, c, c.total() / 3, MakeRational(1, 3)};
    const auto opt = BruteForceCmc(inst);
    ASSERT_TRUE(opt.has_value());
    const CutDecomposition d =
        WeakRegularityDecompose(inst.graph, MakeRational(2, 5), DecompositionMode::kDeterministic, 0);
    const CellPartition p = RefineByCost(BasePartition(d), c, 1);
    const Rational nu = 2;
    std::vector<Rational> fbar;
    std::vector<Rational> gbar;
    for (const CutTerm& t : d.terms) {
      fbar.push_back(FloorToInt(Rational((opt->cut & t.rows).Count()) / nu) * nu);
      gbar.push_back(FloorToInt(Rational(t.cols.Minus(opt->cut).Count()) / nu) * nu);
    }
    const CellLp lp = BuildCellLp(p, fbar, gbar, nu, inst.rho, inst.zeta);
    std::vector<Rational> x;
    for (const Cell& cell : p.cells) {
      int inside = 0;
      for (Vertex v : cell.members) inside += opt->cut.Contains(v);
      x.push_back(inside);
    }
    EXPECT_TRUE(SatisfiesAll(lp, x)) << DebugString(lp);
    EXPECT_TRUE(LpFeasible(lp).has_value());
  }
}

TEST(SolveLarge, AlwaysInWindowWhenFound) {
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 8 + trial % 5;
    const DenseGraph dg = GenDense(n, MakeRational(1, 2), 700 + trial);
    const VertexCosts c = GenCosts(n, MakeRational(1, 2), 800 + trial);
    const CmcInstance inst{dg.graph, c, c.total() / 3, MakeRational(1, 3)};
    const LargeResult r = SolveLarge(inst, MakeRational(1, 2), SmallGridConfig(), trial);
    if (r.found) EXPECT_TRUE(inst.Feasible(r.cut));
  }
}

}  // namespace
}  // namespace densecut
