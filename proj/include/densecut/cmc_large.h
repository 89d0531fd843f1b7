#ifndef DENSECUT_CMC_LARGE_H_
#define DENSECUT_CMC_LARGE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densecut/cmc_instance.h"
#include "densecut/graph.h"
#include "densecut/rational.h"
#include "densecut/regularity.h"

namespace densecut {

struct LargeConfig {
  std::optional<Rational> eps0;  // default alpha * eps with the small-case alpha
  Rational eta = Rational(1, 10);
  std::optional<int> repeats;                   // default ceil(log2(1/eta))
  std::optional<Rational> decomposition_eps;    // default eps0 / 10
  std::optional<Rational> nu;                   // grid stride override
  std::int64_t profile_cap = 1'000'000;
  DecompositionMode mode = DecompositionMode::kRandomized;
  // The theoretical width bound ceil(27/eps^2) is astronomical at the
  // default accuracy; past this width the large case reports WidthExceeded.
  DecomposeOptions decompose{.width_cap = 4};
};

struct Grid {
  Rational nu;
  std::vector<Rational> values;  // 0, nu, ..., ceil(n/nu) nu
};

// nu = eps0 n / (70 * 6 * w), 6 standing in for sqrt(27) from above.
Grid MakeGrid(int n, const Rational& eps0, int w);
// Values 0, nu, ..., ceil(n/nu) nu for an explicit stride.
Grid GridWithStride(int n, const Rational& nu);

// kappa = c0 min{eps0, delta} / 30 * n
Rational BucketWidth(const Rational& c0, const Rational& eps0, const Rational& delta, int n);

std::vector<std::int64_t> RoundDown(const std::vector<Rational>& x);

// The y_P lowest-indexed members of every cell.
Cut AssembleCut(const CellPartition& p, const std::vector<std::int64_t>& y);

// Adds (or removes) vertices in ascending cost order, lowest index first on
// ties, until the cost reaches the window. Throws Unsatisfiable when the
// final cost still misses it.
Cut Rebalance(const VertexCosts& c, const Cut& l, const Rational& rho, const Rational& zeta);

struct LargeReport {
  Rational eps0;
  Rational decomposition_eps;
  Rational kappa;
  Rational nu;
  int repeats_planned = 0;
  int repeats_run = 0;
  std::vector<int> widths;
  std::vector<Rational> error_bounds;
  Certification certified = Certification::kExact;
  std::int64_t cells = 0;
  mpz_class profiles_total;  // |values|^{2w} summed over repeats
  std::int64_t profiles_evaluated = 0;
  mpz_class profiles_pruned_by_size;
  std::int64_t lp_feasible = 0;
  std::int64_t unsatisfiable = 0;
  bool truncated = false;
  std::string failure;  // reason when nothing was found
};

struct LargeResult {
  bool found = false;
  Cut cut;
  std::int64_t cut_size = 0;
  LargeReport report;
};

// Best rebalanced in-window cut over all decompositions and grid profiles;
// found = false when no profile yields one (report.failure says why).
LargeResult SolveLarge(const CmcInstance& inst, const Rational& eps, const LargeConfig& cfg,
                       std::uint64_t seed);

// As SolveLarge, but throws NoFeasibleProfile instead of returning found = false.
LargeResult ConstrainedMinCutLarge(const CmcInstance& inst, const Rational& eps,
                                   const LargeConfig& cfg, std::uint64_t seed);

}  // namespace densecut

#endif  // DENSECUT_CMC_LARGE_H_
