#ifndef DENSECUT_CMC_SMALL_H_
#define DENSECUT_CMC_SMALL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "densecut/cmc_instance.h"
#include "densecut/graph.h"
#include "densecut/rational.h"

namespace densecut {

// Sampled occurrence sequence; duplicates allowed.
struct SampleSet {
  int n = 0;
  std::vector<Vertex> occurrences;

  // Distinct sampled vertices, ascending.
  std::vector<Vertex> Distinct() const;
  // mult[v] = number of occurrences of v (size n).
  std::vector<int> Multiplicities() const;
};

// Side of each distinct sampled vertex; all occurrences share it.
struct ConsistentPartition {
  std::vector<Vertex> vertices;  // distinct, ascending
  std::vector<char> in_l;        // parallel to vertices
};

struct PartitionSource {
  enum class Kind { kAll, kCapped, kHinted };
  Kind kind = Kind::kCapped;
  std::int64_t limit = 4096;  // kCapped
  std::vector<Cut> hints;     // kHinted: candidate cuts restricted to the sample
};

struct Classification {
  Cut l;
  Cut r;
  Cut x;
  // Multiplicity-weighted counts |N(v) ∩ S_L|, |N(v) ∩ S_R|.
  std::vector<int> hits_l;
  std::vector<int> hits_r;

  // p̂_L(v); zero when v has no sampled neighbor.
  Rational PL(Vertex v) const;
  Rational PR(Vertex v) const;
};

// min{ eps/22 (1/2 - 3a)^2 delta^2, 6 rho' zeta c0 delta / 35 }
Rational AlphaThreshold(const Rational& eps, const Rational& delta, const Rational& c0,
                        const Rational& rho_prime, const Rational& zeta, const Rational& a);

// max{ 2/(a^2 delta), 4/delta^2 }
Rational DefaultSampleMultiplier(const Rational& a, const Rational& delta);

// ceil(k ln n)
std::int64_t SampleLength(const Rational& k, int n);

// t uniform draws with replacement.
SampleSet DrawSample(int n, std::int64_t t, std::uint64_t seed);

// Calls `visit` for each generated partition. Returns the count generated and
// sets *truncated when a capped enumeration stopped early.
std::int64_t ForEachConsistentPartition(const SampleSet& s, const PartitionSource& source,
                                        const std::function<void(const ConsistentPartition&)>& visit,
                                        bool* truncated);

// L: p̂_L > 1/2 + 2a; else R: p̂_R > 1/2 + 2a; else X (including vertices
// with no sampled neighbor).
Classification Classify(const Graph& g, const SampleSet& s, const ConsistentPartition& p,
                        const Rational& a);

// Auxiliary problem of the rebalancing step:
//   minimize sum_{S} V_u + sum_{T} V'_u
//   over S ⊆ items_l with sum_S d_u <= budget_deg, T ⊆ items_x, and
//   kUpper:  c_l - c(S) + c(T) <= bound
//   kLower:  c_l + c(S) + c_x - c(T) >= bound
struct AdjustItem {
  std::int64_t value = 0;
  std::int64_t cost = 0;
  std::int64_t degree = 0;  // unused for X items
};

struct AdjustProblem {
  enum class Kind { kUpper, kLower };
  std::vector<AdjustItem> items_l;
  std::vector<AdjustItem> items_x;
  std::int64_t budget_deg = 0;
  Kind kind = Kind::kUpper;
  std::int64_t c_l = 0;
  std::int64_t c_x = 0;
  std::int64_t bound = 0;
};

struct AdjustSolution {
  std::vector<int> s;  // indices into items_l
  std::vector<int> t;  // indices into items_x
  std::int64_t value = 0;
};

inline constexpr std::int64_t kDefaultDpCellCap = 400'000'000;

// Exact DP over (cost, degree) for S and over cost for T, combined through
// prefix minima. Throws DpInfeasible when nothing is feasible and TooLarge
// when the tables would exceed `cell_cap` entries.
AdjustSolution AdjustDp(const AdjustProblem& problem, std::int64_t cell_cap = kDefaultDpCellCap);

// Objective and constraint check of a candidate (S, T).
bool AdjustFeasible(const AdjustProblem& problem, const std::vector<int>& s, const std::vector<int>& t);
std::int64_t AdjustValue(const AdjustProblem& problem, const std::vector<int>& s, const std::vector<int>& t);

struct AdjustOutcome {
  Cut l;
  int branch = 0;  // 1, 2 or 3
  std::int64_t value = 0;
};

// Rebalancing of (L, R, X) into the window [c_min, c_max].
// Throws DpInfeasible when the branch-1/2 auxiliary problem has no solution.
AdjustOutcome Adjust(const Graph& g, const VertexCosts& c, const Classification& cl,
                     const Rational& c_min, const Rational& c_max, const Rational& alpha,
                     const Rational& a, std::int64_t cell_cap = kDefaultDpCellCap);

// floor(alpha n^2 / (1/2 + a))
std::int64_t DegreeBudget(const Rational& alpha, int n, const Rational& a);

struct SmallConfig {
  Rational a = Rational(1, 10);
  std::optional<Rational> k;      // default max(2/(a^2 delta), 4/delta^2)
  std::optional<Rational> alpha;  // default AlphaThreshold(...)
  PartitionSource partitions;
  // Precomputed samples (e.g. expander walks); replaces the random draw.
  std::vector<SampleSet> samples;
  std::int64_t dp_cell_cap = kDefaultDpCellCap;
};

struct SmallReport {
  Rational alpha;
  Rational k;
  std::int64_t sample_length = 0;
  std::int64_t samples = 0;
  std::int64_t distinct_max = 0;
  std::int64_t partitions_evaluated = 0;
  bool truncated = false;
  std::int64_t dp_infeasible = 0;
  std::int64_t out_of_window = 0;
  std::int64_t branch_counts[3] = {0, 0, 0};
};

struct SmallResult {
  bool found = false;
  Cut cut;
  std::int64_t cut_size = 0;
  SmallReport report;
};

// Best in-window adjusted cut over every sample and generated partition;
// found = false when none lands in the window.
SmallResult SolveSmall(const CmcInstance& inst, const Rational& eps, const SmallConfig& cfg,
                       std::uint64_t seed);

// As SolveSmall, but throws NoFeasibleCut instead of returning found = false.
SmallResult ConstrainedMinCutSmall(const CmcInstance& inst, const Rational& eps,
                                   const SmallConfig& cfg, std::uint64_t seed);

}  // namespace densecut

#endif  // DENSECUT_CMC_SMALL_H_
