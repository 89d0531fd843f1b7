#ifndef DENSECUT_RATIO_CUTS_H_
#define DENSECUT_RATIO_CUTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densecut/cmc.h"
#include "densecut/graph.h"
#include "densecut/rational.h"

namespace densecut {

struct ParameterSchedule {
  Rational zeta;
  std::vector<Rational> rhos;  // rho_0 .. rho_k, the last one clamped
  Rational base;               // rho_0 (1 - zeta) before clamping
  bool clamped_last = false;   // whether the clamp changed rho_k
};

// argmin_v d_v / c_v over vertices with c_v > 0, lowest index on ties.
// Throws DegenerateCut when every cost is zero.
Cut SingleVertexMinimizer(const Graph& g, const VertexCosts& c);

// zeta = eps/(2+eps), rho_i = (1+eps)^i c0 eps delta n^2 / (1-zeta); k is the
// first index with rho_k(1+zeta) >= c(V)/2 and rho_k is then set to
// c(V)/(2(1+zeta)). Throws EmptySchedule when the base exceeds c(V)/2.
ParameterSchedule MqcSchedule(const Rational& eps, const Rational& delta, const Rational& c0,
                              std::int64_t c_total, int n);

// zeta = (eps/2)/(2 + 3eps/2), rho_0 (1-zeta) = min{eps delta c0 n^2, (eps/2) c0^2 n^2},
// ratio (1+zeta)/(1-zeta), same stopping rule and clamp.
ParameterSchedule PscSchedule(const Rational& eps, const Rational& delta, const Rational& c0,
                              std::int64_t c_total, int n);

// The intervals chain exactly (rho_{i+1}(1-zeta) = rho_i(1+zeta) before the
// clamp), start at the base and end at c(V)/2 with no gap.
bool CoversWithoutGaps(const ParameterSchedule& s, std::int64_t c_total);

// ((1+zeta)/(1-zeta)) (c(V) - rho_i(1-zeta)) / (c(V) - rho_i(1+zeta)) <= 1 + eps for all i.
bool SatisfiesProductCondition(const ParameterSchedule& s, const Rational& eps, std::int64_t c_total);

struct RungRecord {
  Rational rho;
  bool attempted = false;  // false when rho < 1
  bool feasible = false;
  std::int64_t cut_size = -1;
  std::optional<Rational> objective;
  std::string path;
  std::string note;
};

struct RatioResult {
  Cut cut;
  Rational value;
  bool from_single_vertex = true;
  std::optional<ParameterSchedule> schedule;
  std::string schedule_note;
  std::vector<RungRecord> rungs;
  std::vector<std::string> warnings;
};

// Single-vertex start, then ConstrainedMinCut(G, c, rho_j, zeta, eps/3) on
// every rung of the eps/3 schedule, keeping strict improvements in q.
RatioResult MinQuotientCut(const Graph& g, const VertexCosts& c, const Rational& eps,
                           const CmcConfig& cfg, std::uint64_t seed);

// Same with the product schedule and Phi^x.
RatioResult ProductSparsestCut(const Graph& g, const VertexCosts& c, const Rational& eps,
                               const CmcConfig& cfg, std::uint64_t seed);

}  // namespace densecut

#endif  // DENSECUT_RATIO_CUTS_H_
