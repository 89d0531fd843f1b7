#ifndef DENSECUT_CMC_H_
#define DENSECUT_CMC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densecut/cmc_instance.h"
#include "densecut/cmc_large.h"
#include "densecut/cmc_small.h"
#include "densecut/knapsack.h"
#include "densecut/rational.h"

namespace densecut {

struct CmcConfig {
  enum class Mode { kAuto, kLarge, kSmall };
  Mode mode = Mode::kAuto;
  LargeConfig large;
  SmallConfig small;
  // n <= threshold is solved exactly; 0 disables the shortcut.
  int brute_force_threshold = 14;
};

struct CmcReport {
  Rational eps;  // after clamping
  std::vector<std::string> warnings;
  // "brute_force", "unbalanced_knapsack", "cases" or "knapsack_fallback"
  std::string path;
  bool unbalanced = false;
  Rational alpha;
  std::optional<LargeReport> large;
  std::optional<SmallReport> small;
  bool large_found = false;
  bool small_found = false;
  std::int64_t large_cut_size = -1;
  std::int64_t small_cut_size = -1;
  std::string large_error;
  std::string small_error;
};

struct CmcResult {
  Cut cut;
  std::int64_t cut_size = 0;
  std::int64_t cost = 0;
  CmcReport report;
};

// rho(1+zeta) <= c0 (eps/2) delta^2 n^2
bool IsUnbalanced(const CmcInstance& inst, const Rational& eps);

// Checks 1 <= rho <= c(V)/2 and zeta > 0; throws std::invalid_argument.
void ValidateInstance(const CmcInstance& inst);

// Unbalanced instances take the min-volume knapsack cut; otherwise both the
// large and small cases run and the smaller in-window cut wins. Throws
// Infeasible when no in-window cut is found by any path.
CmcResult ConstrainedMinCut(const CmcInstance& inst, const Rational& eps, const CmcConfig& cfg,
                            std::uint64_t seed);

}  // namespace densecut

#endif  // DENSECUT_CMC_H_
