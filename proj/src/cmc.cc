#include "densecut/cmc.h"

#include <stdexcept>

#include "densecut/errors.h"
#include "densecut/oracle.h"
#include "densecut/rng.h"

namespace densecut {

bool IsUnbalanced(const CmcInstance& inst, const Rational& eps) {
  const DensityParams dp = ComputeDensityParams(inst.graph, inst.costs);
  const int n = inst.n();
  return inst.CostHi() <= dp.c0 * (eps / 2) * dp.delta * dp.delta * n * n;
}

void ValidateInstance(const CmcInstance& inst) {
  if (inst.costs.size() != inst.n()) throw std::invalid_argument("cost vector length differs from n");
  if (inst.zeta <= 0) throw std::invalid_argument("zeta must be positive");
  if (inst.rho < 1 || 2 * inst.rho > inst.costs.total()) {
    throw std::invalid_argument("rho must satisfy 1 <= rho <= c(V)/2");
  }
}

CmcResult ConstrainedMinCut(const CmcInstance& inst, const Rational& eps_in, const CmcConfig& cfg,
                            std::uint64_t seed) {
  ValidateInstance(inst);
  if (eps_in <= 0) throw std::invalid_argument("eps must be positive");
  const Graph& g = inst.graph;
  const int n = inst.n();

  CmcResult result;
  CmcReport& report = result.report;
  report.eps = eps_in;
  if (eps_in > 1) {
    report.eps = 1;
    report.warnings.push_back("eps clamped to 1");
  }
  const Rational& eps = report.eps;
  const DensityParams dp = ComputeDensityParams(g, inst.costs);
  const bool dense = dp.delta > 0 && dp.c0 > 0;
  if (!dense) report.warnings.push_back("instance is not dense (delta or c0 is zero)");
  if (!inst.costs.WithinProblemBounds()) report.warnings.push_back("some cost exceeds n");

  auto finish = [&](const Cut& cut) {
    result.cut = cut;
    result.cut_size = CutSize(g, cut);
    result.cost = Cost(inst.costs, cut);
    if (!inst.Feasible(cut)) throw std::logic_error("solver produced an out-of-window cut");
    return result;
  };
  auto infeasible = [&](const std::string& why) {
    return Infeasible("no cut with cost in [" + ToString(inst.CostLo()) + ", " + ToString(inst.CostHi()) +
                      "]: " + why);
  };

  if (cfg.brute_force_threshold > 0 && n <= cfg.brute_force_threshold) {
    report.path = "brute_force";
    auto exact = BruteForceCmc(inst);
    if (!exact) throw infeasible("exhaustive search");
    return finish(exact->cut);
  }

  report.unbalanced = IsUnbalanced(inst, eps);
  if (report.unbalanced) {
    report.path = "unbalanced_knapsack";
    auto cut = MinVolumeCutKnapsack(g, inst.costs, inst.rho, inst.zeta);
    if (!cut) throw infeasible("knapsack");
    return finish(*cut);
  }

  report.path = "cases";
  const Rational a = cfg.small.a;
  report.alpha = cfg.small.alpha ? *cfg.small.alpha
                                 : AlphaThreshold(eps, dp.delta, dp.c0, inst.RhoPrime(), inst.zeta, a);
  std::optional<ScoredCut> best;

  if (cfg.mode != CmcConfig::Mode::kSmall) {
    LargeConfig large = cfg.large;
    if (!large.eps0) large.eps0 = report.alpha * eps;
    try {
      if (!dense) throw std::invalid_argument("large case needs c0 > 0 and delta > 0");
      LargeResult lr = SolveLarge(inst, eps, large, DeriveSeed(seed, 1));
      report.large = lr.report;
      if (lr.found) {
        report.large_found = true;
        report.large_cut_size = lr.cut_size;
        KeepBest(best, ScoredCut{lr.cut, lr.cut_size});
      } else {
        report.large_error = lr.report.failure;
      }
    } catch (const Error& e) {
      report.large_error = e.code() + ": " + e.what();
    } catch (const std::invalid_argument& e) {
      report.large_error = e.what();
    }
  }

  if (cfg.mode != CmcConfig::Mode::kLarge) {
    SmallConfig small = cfg.small;
    if (!small.alpha) small.alpha = report.alpha;
    try {
      if (!dense && !small.k) throw std::invalid_argument("small case needs delta > 0 for its sample size");
      SmallResult sr = SolveSmall(inst, eps, small, DeriveSeed(seed, 2));
      report.small = sr.report;
      if (sr.found) {
        report.small_found = true;
        report.small_cut_size = sr.cut_size;
        KeepBest(best, ScoredCut{sr.cut, sr.cut_size});
      } else {
        report.small_error = "no adjusted cut in the window";
      }
    } catch (const Error& e) {
      report.small_error = e.code() + ": " + e.what();
    } catch (const std::invalid_argument& e) {
      report.small_error = e.what();
    }
  }

  if (best) return finish(best->cut);

  report.path = "knapsack_fallback";
  auto cut = MinVolumeCutKnapsack(g, inst.costs, inst.rho, inst.zeta);
  if (!cut) throw infeasible("both cases and the knapsack fallback failed");
  return finish(*cut);
}

}  // namespace densecut
