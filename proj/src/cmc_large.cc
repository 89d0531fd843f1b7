#include "densecut/cmc_large.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "densecut/cmc_small.h"
#include "densecut/errors.h"
#include "densecut/knapsack.h"
#include "densecut/lp.h"
#include "densecut/rng.h"

namespace densecut {

Grid GridWithStride(int n, const Rational& nu) {
  if (nu <= 0) throw std::invalid_argument("grid stride must be positive");
  Grid grid;
  grid.nu = nu;
  const std::int64_t steps = CeilToInt(Rational(n) / nu);
  for (std::int64_t i = 0; i <= steps; ++i) grid.values.push_back(nu * Rational(static_cast<long>(i)));
  return grid;
}

Grid MakeGrid(int n, const Rational& eps0, int w) {
  if (w < 1) throw std::invalid_argument("grid needs width w >= 1");
  return GridWithStride(n, eps0 * n / (70 * 6 * w));
}

Rational BucketWidth(const Rational& c0, const Rational& eps0, const Rational& delta, int n) {
  return c0 * Min(eps0, delta) / 30 * n;
}

std::vector<std::int64_t> RoundDown(const std::vector<Rational>& x) {
  std::vector<std::int64_t> y;
  y.reserve(x.size());
  for (const auto& v : x) y.push_back(FloorToInt(v));
  return y;
}

Cut AssembleCut(const CellPartition& p, const std::vector<std::int64_t>& y) {
  int n = 0;
  for (const auto& cell : p.cells) n += static_cast<int>(cell.members.size());
  Cut l(n);
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const auto& members = p.cells[i].members;
    if (y[i] < 0 || y[i] > static_cast<std::int64_t>(members.size())) {
      throw std::invalid_argument("y_P outside [0, |P|]");
    }
    for (std::int64_t j = 0; j < y[i]; ++j) l.Insert(members[j]);
  }
  return l;
}

Cut Rebalance(const VertexCosts& c, const Cut& l, const Rational& rho, const Rational& zeta) {
  const Rational lo = rho * (1 - zeta);
  const Rational hi = rho * (1 + zeta);
  Cut out = l;
  Rational cost(static_cast<long>(Cost(c, l)));
  std::vector<Vertex> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return c[a] < c[b]; });
  if (cost < lo) {
    for (Vertex v : order) {
      if (cost >= lo) break;
      if (out.Contains(v)) continue;
      out.Insert(v);
      cost += c[v];
    }
  } else if (cost > hi) {
    for (Vertex v : order) {
      if (cost <= hi) break;
      if (!out.Contains(v)) continue;
      out.Erase(v);
      cost -= c[v];
    }
  }
  if (cost < lo || cost > hi) {
    throw Unsatisfiable("rebalanced cost " + ToString(cost) + " misses [" + ToString(lo) + ", " +
                        ToString(hi) + "]");
  }
  return out;
}

namespace {

int RepeatCount(const Rational& eta) {
  if (eta <= 0 || eta >= 1) throw std::invalid_argument("eta must lie in (0, 1)");
  const Rational target = 1 / eta;
  int r = 0;
  Rational power = 1;
  while (power < target) {
    power *= 2;
    ++r;
  }
  return r;
}

}  // namespace

LargeResult SolveLarge(const CmcInstance& inst, const Rational& eps, const LargeConfig& cfg,
                       std::uint64_t seed) {
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  const DensityParams dp = ComputeDensityParams(g, inst.costs);
  if (dp.c0 <= 0 || dp.delta <= 0) throw std::invalid_argument("large case needs c0 > 0 and delta > 0");

  LargeResult result;
  LargeReport& report = result.report;
  report.eps0 = cfg.eps0 ? *cfg.eps0
                         : eps * AlphaThreshold(eps, dp.delta, dp.c0, inst.RhoPrime(), inst.zeta,
                                                Rational(1, 10));
  report.decomposition_eps = cfg.decomposition_eps ? *cfg.decomposition_eps : report.eps0 / 10;
  report.kappa = BucketWidth(dp.c0, report.eps0, dp.delta, n);
  report.repeats_planned = cfg.repeats ? *cfg.repeats : RepeatCount(cfg.eta);
  report.profiles_total = 0;

  std::optional<ScoredCut> best;
  for (int rep = 0; rep < report.repeats_planned; ++rep) {
    CutDecomposition d =
        WeakRegularityDecompose(g, report.decomposition_eps, cfg.mode, DeriveSeed(seed, rep), cfg.decompose);
    ++report.repeats_run;
    report.widths.push_back(d.width());
    report.error_bounds.push_back(d.error_bound);
    report.certified = d.certified;
    const int w = d.width();

    CellPartition p = RefineByCost(BasePartition(d), inst.costs, report.kappa);
    report.cells = static_cast<std::int64_t>(p.cells.size());
    Grid grid = cfg.nu ? GridWithStride(n, *cfg.nu)
                       : (w >= 1 ? MakeGrid(n, report.eps0, w) : Grid{Rational(0), {Rational(0)}});
    report.nu = grid.nu;

    // |S_t| and |T_t| bound the reachable profile values.
    std::vector<std::int64_t> side_size(2 * w, 0);
    for (const auto& cell : p.cells) {
      for (int b = 0; b < 2 * w; ++b) {
        if (cell.signature[b]) side_size[b] += static_cast<std::int64_t>(cell.members.size());
      }
    }
    std::vector<int> digits(2 * w);
    mpz_class full = 1;
    mpz_class reachable = 1;
    for (int b = 0; b < 2 * w; ++b) {
      int count = 0;
      while (count < static_cast<int>(grid.values.size()) && grid.values[count] <= side_size[b]) ++count;
      // Digit order: f_1..f_w then g_1..g_w; signature bits interleave S_t, T_t.
      const int t = b / 2;
      const int digit = (b % 2 == 0) ? t : w + t;
      digits[digit] = count;
      full *= static_cast<long>(grid.values.size());
      reachable *= count;
    }
    report.profiles_total += full;
    report.profiles_pruned_by_size += full - reachable;

    std::int64_t budget = cfg.profile_cap;
    if (reachable > static_cast<long>(budget)) report.truncated = true;

    CellLp lp = BuildCellLp(p, std::vector<Rational>(w), std::vector<Rational>(w), grid.nu, inst.rho,
                            inst.zeta);
    std::vector<Rational> t_size(w);
    for (int t = 0; t < w; ++t) t_size[t] = lp.rows[2 * t + 1].hi;  // |T_t| - 0

    std::vector<int> odometer(2 * w, 0);
    bool any_digit_empty = std::any_of(digits.begin(), digits.end(), [](int c) { return c == 0; });
    bool more = !any_digit_empty;
    while (more && budget > 0) {
      --budget;
      ++report.profiles_evaluated;
      for (int t = 0; t < w; ++t) {
        const Rational& f = grid.values[odometer[t]];
        const Rational& gv = grid.values[odometer[w + t]];
        lp.rows[2 * t].lo = f;
        lp.rows[2 * t].hi = f + grid.nu;
        lp.rows[2 * t + 1].lo = t_size[t] - gv - grid.nu;
        lp.rows[2 * t + 1].hi = t_size[t] - gv;
      }
      if (auto x = LpFeasible(lp)) {
        ++report.lp_feasible;
        Cut l_star = AssembleCut(p, RoundDown(*x));
        try {
          Cut l_hat = Rebalance(inst.costs, l_star, inst.rho, inst.zeta);
          KeepBest(best, ScoredCut{l_hat, CutSize(g, l_hat)});
        } catch (const Unsatisfiable&) {
          ++report.unsatisfiable;
        }
      }
      // Advance the last digit fastest (lexicographic order).
      int pos = 2 * w - 1;
      while (pos >= 0) {
        if (++odometer[pos] < digits[pos]) break;
        odometer[pos] = 0;
        --pos;
      }
      more = pos >= 0;
    }
    const bool deterministic =
        cfg.mode == DecompositionMode::kDeterministic || d.certified == Certification::kExact;
    if (deterministic) break;
  }

  if (best) {
    result.found = true;
    result.cut = best->cut;
    result.cut_size = best->size;
  } else if (!WindowReachable(inst.costs, inst.IntLo(), inst.IntHi())) {
    report.failure = "instance infeasible";
  } else if (report.truncated) {
    report.failure = "profile enumeration truncated";
  } else {
    report.failure = "no profile produced an in-window cut";
  }
  return result;
}

LargeResult ConstrainedMinCutLarge(const CmcInstance& inst, const Rational& eps,
                                   const LargeConfig& cfg, std::uint64_t seed) {
  LargeResult result = SolveLarge(inst, eps, cfg, seed);
  if (!result.found) throw NoFeasibleProfile(result.report.failure);
  return result;
}

}  // namespace densecut
