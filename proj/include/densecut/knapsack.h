#ifndef DENSECUT_KNAPSACK_H_
#define DENSECUT_KNAPSACK_H_

#include <cstdint>
#include <optional>
#include <span>

#include "densecut/graph.h"
#include "densecut/rational.h"

namespace densecut {

// Minimum sum of weights[v] over S with c(S) in [rho(1-zeta), rho(1+zeta)],
// by 0/1 knapsack over exact cost values. Ties go to the first minimizer in
// increasing cost, then to the earlier-item choice. nullopt when no subset
// reaches the window. Throws TooLarge past `cell_cap` table bits.
std::optional<Cut> MinWeightInWindow(const VertexCosts& c, std::span<const std::int64_t> weights,
                                     const Rational& rho, const Rational& zeta,
                                     std::int64_t cell_cap = 2'000'000'000);

// Weights = degrees.
std::optional<Cut> MinVolumeCutKnapsack(const Graph& g, const VertexCosts& c, const Rational& rho,
                                        const Rational& zeta);

// Whether some subset has cost in [lo, hi] (subset-sum reachability).
bool WindowReachable(const VertexCosts& c, std::int64_t lo, std::int64_t hi);

}  // namespace densecut

#endif  // DENSECUT_KNAPSACK_H_
