#include "densecut/ratio_cuts.h"

#include <stdexcept>

#include "densecut/errors.h"
#include "densecut/rng.h"

namespace densecut {

Cut SingleVertexMinimizer(const Graph& g, const VertexCosts& c) {
  const int n = g.num_vertices();
  Vertex best = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (c[v] == 0) continue;
    // d_v / c_v < d_best / c_best
    if (best < 0 || static_cast<std::int64_t>(g.degree(v)) * c[best] <
                        static_cast<std::int64_t>(g.degree(best)) * c[v]) {
      best = v;
    }
  }
  if (best < 0) throw DegenerateCut("every vertex cost is zero");
  Cut s(n);
  s.Insert(best);
  return s;
}

namespace {

ParameterSchedule Ladder(const Rational& zeta, const Rational& base, std::int64_t c_total) {
  const Rational half = MakeRational(c_total, 2);
  if (base <= 0) throw EmptySchedule("schedule base is not positive");
  if (base > half) throw EmptySchedule("schedule base " + ToString(base) + " exceeds c(V)/2 = " + ToString(half));
  ParameterSchedule s;
  s.zeta = zeta;
  s.base = base;
  const Rational ratio = (1 + zeta) / (1 - zeta);
  Rational rho = base / (1 - zeta);
  for (;;) {
    s.rhos.push_back(rho);
    if (rho * (1 + zeta) >= half) break;
    rho *= ratio;
  }
  const Rational clamped = half / (1 + zeta);
  s.clamped_last = s.rhos.back() != clamped;
  s.rhos.back() = clamped;
  return s;
}

}  // namespace

ParameterSchedule MqcSchedule(const Rational& eps, const Rational& delta, const Rational& c0,
                              std::int64_t c_total, int n) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Rational zeta = eps / (2 + eps);
  return Ladder(zeta, c0 * eps * delta * n * n, c_total);
}

ParameterSchedule PscSchedule(const Rational& eps, const Rational& delta, const Rational& c0,
                              std::int64_t c_total, int n) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Rational zeta = (eps / 2) / (2 + 3 * eps / 2);
  const Rational nn(static_cast<long>(n) * n);
  const Rational base = Min(eps * delta * c0 * nn, eps / 2 * c0 * c0 * nn);
  return Ladder(zeta, base, c_total);
}

bool CoversWithoutGaps(const ParameterSchedule& s, std::int64_t c_total) {
  if (s.rhos.empty()) return false;
  const Rational half = MakeRational(c_total, 2);
  const std::size_t k = s.rhos.size() - 1;
  const Rational lo0 = s.rhos[0] * (1 - s.zeta);
  if (k > 0 && lo0 != s.base) return false;
  if (k == 0 && lo0 > s.base) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (s.rhos[i + 1] * (1 - s.zeta) != s.rhos[i] * (1 + s.zeta)) return false;
  }
  if (k > 0 && s.rhos[k] * (1 - s.zeta) > s.rhos[k - 1] * (1 + s.zeta)) return false;
  // Every unclamped rung stays below c(V)/2, the clamped one ends on it.
  for (std::size_t i = 0; i < k; ++i) {
    if (s.rhos[i] * (1 + s.zeta) >= half) return false;
  }
  return s.rhos[k] * (1 + s.zeta) == half;
}

bool SatisfiesProductCondition(const ParameterSchedule& s, const Rational& eps, std::int64_t c_total) {
  const Rational total(static_cast<long>(c_total));
  const Rational factor = (1 + s.zeta) / (1 - s.zeta);
  for (const Rational& rho : s.rhos) {
    const Rational den = total - rho * (1 + s.zeta);
    if (den <= 0) return false;
    if (factor * (total - rho * (1 - s.zeta)) / den > 1 + eps) return false;
  }
  return true;
}

namespace {

RatioResult RunLadder(ObjectiveKind kind, const Graph& g, const VertexCosts& c, const Rational& eps_in,
                      const CmcConfig& cfg, std::uint64_t seed) {
  if (eps_in <= 0) throw std::invalid_argument("eps must be positive");
  RatioResult result;
  Rational eps = eps_in;
  if (eps > 1) {
    eps = 1;
    result.warnings.push_back("eps clamped to 1");
  }
  const Rational sub_eps = eps / 3;
  result.cut = SingleVertexMinimizer(g, c);
  result.value = Objective(kind, g, c, result.cut);

  const DensityParams dp = ComputeDensityParams(g, c);
  try {
    result.schedule = kind == ObjectiveKind::kQuotientCut
                          ? MqcSchedule(sub_eps, dp.delta, dp.c0, c.total(), g.num_vertices())
                          : PscSchedule(sub_eps, dp.delta, dp.c0, c.total(), g.num_vertices());
  } catch (const EmptySchedule& e) {
    result.schedule_note = e.what();
    return result;
  }

  for (std::size_t j = 0; j < result.schedule->rhos.size(); ++j) {
    RungRecord rung;
    rung.rho = result.schedule->rhos[j];
    if (rung.rho < 1) {
      rung.note = "rho below 1";
      result.rungs.push_back(std::move(rung));
      continue;
    }
    rung.attempted = true;
    CmcInstance inst{g, c, rung.rho, result.schedule->zeta};
    try {
      CmcResult r = ConstrainedMinCut(inst, sub_eps, cfg, DeriveSeed(seed, 100 + j));
      rung.objective = Objective(kind, g, c, r.cut);
      rung.feasible = true;
      rung.cut_size = r.cut_size;
      rung.path = r.report.path;
      if (*rung.objective < result.value) {
        result.value = *rung.objective;
        result.cut = r.cut;
        result.from_single_vertex = false;
      }
    } catch (const Infeasible& e) {
      rung.note = e.what();
    } catch (const DegenerateCut& e) {
      rung.note = e.what();
    }
    result.rungs.push_back(std::move(rung));
  }
  return result;
}

}  // namespace

RatioResult MinQuotientCut(const Graph& g, const VertexCosts& c, const Rational& eps,
                           const CmcConfig& cfg, std::uint64_t seed) {
  return RunLadder(ObjectiveKind::kQuotientCut, g, c, eps, cfg, seed);
}

RatioResult ProductSparsestCut(const Graph& g, const VertexCosts& c, const Rational& eps,
                               const CmcConfig& cfg, std::uint64_t seed) {
  return RunLadder(ObjectiveKind::kProductSparsestCut, g, c, eps, cfg, seed);
}

}  // namespace densecut
