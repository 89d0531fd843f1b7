#include <gtest/gtest.h>

#include <random>
#include <set>

#include "densecut/errors.h"
#include "densecut/regularity.h"
#include "support/naive.h"

namespace densecut {
namespace {

RationalMatrix FromRows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Rational>> RandomRows(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-4, 4);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& r : rows) {
    for (auto& x : r) x = MakeRational(pick(rng), 1 + (rng() % 3));
  }
  return rows;
}

Graph Complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

TEST(CutNorm, AllOnes) {
  const auto w = CutNormExact(FromRows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(w.value, 9);
  EXPECT_EQ(w.rows.Count(), 3);
  EXPECT_EQ(w.cols.Count(), 3);
}

TEST(CutNorm, SignedTwoByTwo) {
  const std::vector<std::vector<Rational>> rows = {{1, -1}, {-1, 1}};
  EXPECT_EQ(CutNormExact(FromRows(rows)).value, 1);
  EXPECT_EQ(naive::CutNorm(rows), 1);
}

TEST(CutNorm, MatchesEnumerationOfAllPairs) {
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 6;
    const auto rows = RandomRows(n, 40 + trial);
    const RationalMatrix m = FromRows(rows);
    const CutNormWitness w = CutNormExact(m);
    EXPECT_EQ(w.value, naive::CutNorm(rows)) << "trial " << trial;
    EXPECT_EQ(m.BlockSum(w.rows, w.cols), w.signed_sum);
    EXPECT_EQ(abs(w.signed_sum), w.value);
  }
}

TEST(CutNorm, LowerBoundNeverExceedsExact) {
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = FromRows(RandomRows(9, 90 + trial));
    const CutNormWitness lb = CutNormLowerBound(m, 4, trial);
    EXPECT_LE(lb.value, CutNormExact(m).value);
    EXPECT_EQ(m.BlockSum(lb.rows, lb.cols), lb.signed_sum);
  }
}

TEST(CutNorm, TooLargeAboveThreshold) {
  EXPECT_THROW(CutNormExact(RationalMatrix(5), 4), TooLarge);
}

TEST(Decompose, CompleteGraphNeedsOneTerm) {
  const Graph g = Complete(10);
  const CutDecomposition d =
      WeakRegularityDecompose(g, MakeRational(1, 2), DecompositionMode::kDeterministic, 0);
  EXPECT_LE(d.width(), 1);
  EXPECT_TRUE(d.MeetsErrorTarget());
  EXPECT_EQ(d.certified, Certification::kExact);
}

TEST(Decompose, RandomDenseGraphCertified) {
  const auto e = naive::RandomEdges(12, 0.6, 3);
  const Graph g(12, e);
  const Rational eps = MakeRational(2, 5);
  const CutDecomposition d = WeakRegularityDecompose(g, eps, DecompositionMode::kRandomized, 17);
  EXPECT_EQ(d.certified, Certification::kExact);
  EXPECT_TRUE(d.MeetsErrorTarget());
  EXPECT_TRUE(d.MeetsCoefficientBound());
  EXPECT_LE(d.width(), DefaultWidthCap(eps));
  EXPECT_EQ(d.frobenius_sq, 2 * static_cast<long>(e.size()));

  // The reported error is the exact cut norm of A minus the approximation.
  RationalMatrix residual = RationalMatrix::Adjacency(g);
  const RationalMatrix approx = d.Approximation();
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) residual.at(i, j) -= approx.at(i, j);
  }
  EXPECT_EQ(CutNormExact(residual).value, d.error_bound);
  EXPECT_EQ(residual.FrobeniusSquared(), d.residual_frobenius_sq.back());
}

TEST(Decompose, ResidualEnergyDecreases) {
  const Graph g(14, naive::RandomEdges(14, 0.5, 8));
  const CutDecomposition d =
      WeakRegularityDecompose(g, MakeRational(1, 5), DecompositionMode::kDeterministic, 0);
  ASSERT_EQ(d.residual_frobenius_sq.size(), d.terms.size() + 1);
  for (std::size_t t = 0; t + 1 < d.residual_frobenius_sq.size(); ++t) {
    EXPECT_LT(d.residual_frobenius_sq[t + 1], d.residual_frobenius_sq[t]);
  }
}

TEST(Decompose, WidthCapThrows) {
  const Graph g(14, naive::RandomEdges(14, 0.5, 8));
  DecomposeOptions opt;
  opt.width_cap = 1;
  EXPECT_THROW(WeakRegularityDecompose(g, MakeRational(1, 20), DecompositionMode::kDeterministic, 0, opt),
               WidthExceeded);
}

TEST(Decompose, LocalSearchAboveThresholdIsLowerBound) {
  const Graph g(24, naive::RandomEdges(24, 0.5, 4));
  DecomposeOptions opt;
  opt.exhaustive_threshold = 10;
  const CutDecomposition d =
      WeakRegularityDecompose(g, MakeRational(1, 2), DecompositionMode::kRandomized, 5, opt);
  EXPECT_EQ(d.certified, Certification::kLowerBound);
}

TEST(BasePartition, WidthZeroIsOneCell) {
  CutDecomposition d;
  d.n = 5;
  const auto cells = BasePartition(d);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].members.size(), 5u);
}

TEST(BasePartition, SingleTermSplitsByMembership) {
  CutDecomposition d;
  d.n = 3;
  d.terms.push_back({1, Cut::FromMembers(3, std::vector<Vertex>{0}), Cut::FromMembers(3, std::vector<Vertex>{1})});
  const auto cells = BasePartition(d);
  // Signatures (in S, in T): v0 (1,0), v1 (0,1), v2 (0,0).
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[0].members, std::vector<Vertex>({2}));
  EXPECT_EQ(cells[1].members, std::vector<Vertex>({1}));
  EXPECT_EQ(cells[2].members, std::vector<Vertex>({0}));
  EXPECT_EQ(cells[2].signature, std::vector<bool>({true, false}));
}

TEST(BasePartition, CoversEveryVertexOnce) {
  const Graph g(13, naive::RandomEdges(13, 0.5, 21));
  const CutDecomposition d =
      WeakRegularityDecompose(g, MakeRational(3, 10), DecompositionMode::kDeterministic, 0);
  const auto cells = BasePartition(d);
  std::set<Vertex> seen;
  std::set<std::vector<bool>> sigs;
  for (const auto& cell : cells) {
    EXPECT_FALSE(cell.members.empty());
    EXPECT_TRUE(sigs.insert(cell.signature).second);
    for (Vertex v : cell.members) EXPECT_TRUE(seen.insert(v).second);
  }
  EXPECT_EQ(seen.size(), 13u);
  EXPECT_LE(cells.size(), std::size_t{1} << (2 * d.width()));
}

TEST(RefineByCost, BucketsAndOffsets) {
  std::vector<SignatureCell> base = {{{}, {0, 1, 2, 3, 4}}};
  const VertexCosts c(std::vector<std::int64_t>{0, 1, 2, 3, 4});
  const CellPartition p = RefineByCost(base, c, 2);
  ASSERT_EQ(p.cells.size(), 3u);
  EXPECT_EQ(p.cells[0].members, std::vector<Vertex>({0, 1}));
  EXPECT_EQ(p.cells[1].members, std::vector<Vertex>({2, 3}));
  EXPECT_EQ(p.cells[2].members, std::vector<Vertex>({4}));
  for (const Cell& cell : p.cells) {
    EXPECT_EQ(cell.delta, 2 * cell.bucket);
    for (Vertex v : cell.members) {
      EXPECT_LE(cell.delta, c[v]);
      EXPECT_LT(c[v], cell.delta + p.kappa);
    }
  }
}

TEST(RefineByCost, UniformCostsLandInBucketOne) {
  std::vector<SignatureCell> base = {{{true}, {0, 1}}, {{false}, {2, 3}}};
  const CellPartition p = RefineByCost(base, VertexCosts::Uniform(4, 4), 4);
  ASSERT_EQ(p.cells.size(), 2u);
  for (const Cell& cell : p.cells) EXPECT_EQ(cell.bucket, 1);
}

TEST(RefineByCost, MembershipByDirectInequality) {
  std::vector<SignatureCell> base = {{{}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}};
  const VertexCosts c(std::vector<std::int64_t>{3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  const CellPartition p = RefineByCost(base, c, 4);
  int covered = 0;
  for (const Cell& cell : p.cells) {
    for (Vertex v : cell.members) {
      EXPECT_EQ(cell.bucket, c[v] / 4);
      ++covered;
    }
  }
  EXPECT_EQ(covered, 10);
  EXPECT_EQ(p.cells.size(), 4u);  // buckets {3}, {4..7}, {8..11}, {12}
}

TEST(RefineByCost, FractionalKappa) {
  std::vector<SignatureCell> base = {{{true}, {0, 2}}, {{false}, {1}}};
  const VertexCosts c(std::vector<std::int64_t>{1, 1, 2});
  const CellPartition p = RefineByCost(base, c, MakeRational(1, 3));
  EXPECT_EQ(p.cells.size(), 3u);
  for (const Cell& cell : p.cells) {
    for (Vertex v : cell.members) EXPECT_EQ(cell.delta, c[v]);
  }
}

}  // namespace
}  // namespace densecut
