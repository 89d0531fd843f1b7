#ifndef DENSECUT_ORACLE_H_
#define DENSECUT_ORACLE_H_

#include <cstdint>
#include <optional>

#include "densecut/cmc_instance.h"
#include "densecut/cmc_small.h"
#include "densecut/graph.h"
#include "densecut/rational.h"

namespace densecut {

inline constexpr int kOracleMaxVertices = 24;

struct ExactCut {
  Cut cut;
  std::int64_t cut_size = 0;
};

// Minimum cut size over all S with c(S) in the window (Gray-code walk with
// incremental cut and cost). Ties: LexLess. nullopt when no S is feasible.
// Throws TooLarge for n > 24.
std::optional<ExactCut> BruteForceCmc(const CmcInstance& inst);

struct ExactRatio {
  Cut cut;
  Rational value;
};

// Exact optimum of the ratio objective over nonempty proper S with nonzero
// denominator. Throws TooLarge for n > 24 and DegenerateCut if every
// denominator vanishes.
ExactRatio BruteForceRatio(ObjectiveKind kind, const Graph& g, const VertexCosts& c);

// Exhaustive minimum of the adjust auxiliary problem. Throws TooLarge past
// 12 L-items or 10 X-items, DpInfeasible when nothing is feasible.
AdjustSolution BruteForceAdjust(const AdjustProblem& problem);

// Analysis quantities of a classification against a known optimal side.
struct ClassificationAudit {
  Cut u_l;  // L ∩ R_OPT
  Cut u_r;  // R ∩ L_OPT
  Cut x_l;  // X ∩ L_OPT
  Cut x_r;  // X ∩ R_OPT
  std::int64_t opt = 0;
  std::int64_t vol_ul = 0;
  std::int64_t vol_ur = 0;
  std::int64_t vol_x = 0;
  Rational mu;            // 4 OPT^2 / ((1/2 - 3a)^2 delta^2 n^2)
  std::int64_t opt_x = 0;  // cut edges with an endpoint in X
  // max_v |p̂_L(v) - p_L(v)|, taking 1 for vertices with no sampled neighbor.
  Rational max_estimator_error;
  bool concentration = false;  // max_estimator_error <= a
  bool claim_ul_ur = false;    // vol(U_L), vol(U_R) <= OPT / (1/2 + a)
  bool claim_x = false;        // vol(X) <= 2 OPT / (1/2 - 3a)
};

ClassificationAudit Audit(const Classification& cl, const Cut& l_opt, const Graph& g, const Rational& a);

}  // namespace densecut

#endif  // DENSECUT_ORACLE_H_
