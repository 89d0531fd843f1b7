#ifndef DENSECUT_CMC_INSTANCE_H_
#define DENSECUT_CMC_INSTANCE_H_

#include <cstdint>
#include <optional>

#include "densecut/graph.h"
#include "densecut/rational.h"

namespace densecut {

// Graph, costs and the cost window [rho(1-zeta), rho(1+zeta)].
// rho is kept rational because the ratio-cut ladders produce rational rungs.
struct CmcInstance {
  Graph graph;
  VertexCosts costs;
  Rational rho;
  Rational zeta;

  int n() const { return graph.num_vertices(); }
  Rational CostLo() const { return rho * (1 - zeta); }
  Rational CostHi() const { return rho * (1 + zeta); }
  // Integer window for integer costs: [ceil(lo), floor(hi)].
  std::int64_t IntLo() const { return CeilToInt(CostLo()); }
  std::int64_t IntHi() const { return FloorToInt(CostHi()); }
  bool Feasible(const Cut& s) const {
    const std::int64_t c = Cost(costs, s);
    return c >= IntLo() && c <= IntHi();
  }
  // rho / c(V)
  Rational RhoPrime() const { return rho / Rational(static_cast<long>(costs.total())); }
};

// A cut with its size, ordered by (size, LexLess).
struct ScoredCut {
  Cut cut;
  std::int64_t size = 0;
};

inline bool BetterCut(const ScoredCut& a, const ScoredCut& b) {
  if (a.size != b.size) return a.size < b.size;
  return LexLess(a.cut, b.cut);
}

// Replaces `best` with `candidate` when it is strictly better.
inline void KeepBest(std::optional<ScoredCut>& best, ScoredCut candidate) {
  if (!best || BetterCut(candidate, *best)) best = std::move(candidate);
}

}  // namespace densecut

#endif  // DENSECUT_CMC_INSTANCE_H_
