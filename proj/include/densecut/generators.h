#ifndef DENSECUT_GENERATORS_H_
#define DENSECUT_GENERATORS_H_

#include <cstdint>

#include "densecut/cmc_instance.h"
#include "densecut/graph.h"
#include "densecut/rational.h"

namespace densecut {

// What a generator checked before returning.
struct DensityCertificate {
  int required_min_degree = 0;  // min(n-1, ceil(delta_target n))
  int min_degree = 0;
  std::int64_t repair_edges = 0;
  bool ok = false;
};

struct DenseGraph {
  Graph graph;
  DensityCertificate cert;
};

// G(n, p) with p = min(1, delta_target + 1/10), then every vertex below the
// required degree is joined to random non-neighbors.
DenseGraph GenDense(int n, const Rational& delta_target, std::uint64_t seed);

struct PlantCertificate {
  DensityCertificate density;
  std::int64_t cross_budget = 0;
  std::int64_t crossing_edges = 0;  // achieved
  std::int64_t forced_crossings = 0;
  std::int64_t slack = 0;
  bool ok = false;
};

struct PlantedGraph {
  Graph graph;
  Cut plant;  // the side of size floor(rho_fraction n)
  PlantCertificate cert;
};

// Two sides of sizes floor(rho_fraction n) and the rest, each G(size, p_in)
// with p_in = min(1, delta_target n / size + 1/20), exactly cross_budget
// random crossing edges, and degree repair that prefers same-side edges.
// Labels are shuffled. Throws InfeasiblePlant when repair needs more than
// `slack` extra crossing edges.
PlantedGraph GenPlanted(int n, const Rational& rho_fraction, std::int64_t cross_budget,
                        const Rational& delta_target, std::uint64_t seed, std::int64_t slack = -1);

// Uniform integers in [ceil(c0_target n), n].
VertexCosts GenCosts(int n, const Rational& c0_target, std::uint64_t seed);

// |S| in [t(1-zeta), t(1+zeta)] as a constrained cut with unit costs.
CmcInstance BalancedSeparatorInstance(const Graph& g, std::int64_t t, const Rational& zeta);

// ceil(t(1+zeta)) + n
int AugmentCliqueSize(int n, std::int64_t t, const Rational& zeta);

// G plus a disjoint clique of AugmentCliqueSize vertices labeled n, n+1, ...
Graph CliqueAugment(const Graph& g, std::int64_t t, const Rational& zeta);

// X = S' ∩ V, padded with the lowest-index vertices outside X up to
// ceil(t(1-zeta)). Throws InfeasibleInput when |S'| is outside the window.
Cut RecoverFromAugmented(const Cut& s_prime, const Graph& g_orig, std::int64_t t, const Rational& zeta);

}  // namespace densecut

#endif  // DENSECUT_GENERATORS_H_
