#include "densecut/oracle.h"

#include <bit>
#include <string>
#include <vector>

#include "densecut/errors.h"

namespace densecut {

namespace {

void RequireSmall(int n) {
  if (n > kOracleMaxVertices) {
    throw TooLarge("brute force limited to n <= " + std::to_string(kOracleMaxVertices) + ", got " +
                   std::to_string(n));
  }
}

std::vector<std::uint32_t> AdjacencyMasks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) adj[u] |= 1U << v;
  }
  return adj;
}

// LexLess on masks: at the lowest differing bit, the set lacking it wins.
bool MaskLexLess(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (b & (diff & (~diff + 1))) != 0;
}

// Visits every subset in Gray-code order with its cut size, size, volume and
// cost maintained incrementally. The empty set is visited first.
template <typename Visit>
void WalkSubsets(const Graph& g, const VertexCosts& c, Visit&& visit) {
  const int n = g.num_vertices();
  const auto adj = AdjacencyMasks(g);
  std::uint32_t mask = 0;
  std::int64_t cut = 0;
  std::int64_t size = 0;
  std::int64_t vol = 0;
  std::int64_t cost = 0;
  visit(mask, cut, size, vol, cost);
  const std::uint64_t limit = 1ULL << n;
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int v = std::countr_zero(step);
    const std::uint32_t bit = 1U << v;
    const std::int64_t inside = std::popcount(adj[v] & (mask & ~bit));
    const std::int64_t d = g.degree(v);
    const std::int64_t cv = c.size() > 0 ? c[v] : 0;
    if (mask & bit) {
      mask &= ~bit;
      cut -= d - 2 * inside;
      --size;
      vol -= d;
      cost -= cv;
    } else {
      mask |= bit;
      cut += d - 2 * inside;
      ++size;
      vol += d;
      cost += cv;
    }
    visit(mask, cut, size, vol, cost);
  }
}

}  // namespace

std::optional<ExactCut> BruteForceCmc(const CmcInstance& inst) {
  const int n = inst.n();
  RequireSmall(n);
  const std::int64_t lo = inst.IntLo();
  const std::int64_t hi = inst.IntHi();
  bool found = false;
  std::uint32_t best_mask = 0;
  std::int64_t best_cut = 0;
  WalkSubsets(inst.graph, inst.costs,
              [&](std::uint32_t mask, std::int64_t cut, std::int64_t, std::int64_t, std::int64_t cost) {
                if (cost < lo || cost > hi) return;
                if (!found || cut < best_cut || (cut == best_cut && MaskLexLess(mask, best_mask))) {
                  found = true;
                  best_cut = cut;
                  best_mask = mask;
                }
              });
  if (!found) return std::nullopt;
  return ExactCut{Cut::FromMask(n, best_mask), best_cut};
}

ExactRatio BruteForceRatio(ObjectiveKind kind, const Graph& g, const VertexCosts& c) {
  const int n = g.num_vertices();
  RequireSmall(n);
  if (UsesCosts(kind) && c.size() != n) throw std::invalid_argument("costs required for this objective");
  const std::int64_t total_vol = 2 * g.num_edges();
  const std::int64_t total_cost = c.size() == n ? c.total() : 0;
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
  bool found = false;
  std::uint32_t best_mask = 0;
  std::int64_t best_num = 0;
  std::int64_t best_den = 1;
  VertexCosts zero = c.size() == n ? c : VertexCosts::Uniform(n, 0);
  WalkSubsets(g, zero,
              [&](std::uint32_t mask, std::int64_t cut, std::int64_t size, std::int64_t vol, std::int64_t cost) {
                if (mask == 0 || mask == full) return;
                std::int64_t den = 0;
                switch (kind) {
                  case ObjectiveKind::kUniformSparsestCut: den = size * (n - size); break;
                  case ObjectiveKind::kEdgeExpansion: den = std::min<std::int64_t>(size, n - size); break;
                  case ObjectiveKind::kConductance: den = std::min(vol, total_vol - vol); break;
                  case ObjectiveKind::kNormalizedCut: den = vol * (total_vol - vol); break;
                  case ObjectiveKind::kQuotientCut: den = std::min(cost, total_cost - cost); break;
                  case ObjectiveKind::kProductSparsestCut: den = cost * (total_cost - cost); break;
                }
                if (den == 0) return;
                // cut/den < best_num/best_den
                const __int128 lhs = static_cast<__int128>(cut) * best_den;
                const __int128 rhs = static_cast<__int128>(best_num) * den;
                if (!found || lhs < rhs || (lhs == rhs && MaskLexLess(mask, best_mask))) {
                  found = true;
                  best_mask = mask;
                  best_num = cut;
                  best_den = den;
                }
              });
  if (!found) {
    throw DegenerateCut(std::string(ObjectiveName(kind)) + " has a zero denominator on every cut");
  }
  return ExactRatio{Cut::FromMask(n, best_mask), MakeRational(best_num, best_den)};
}

AdjustSolution BruteForceAdjust(const AdjustProblem& problem) {
  const int nl = static_cast<int>(problem.items_l.size());
  const int nx = static_cast<int>(problem.items_x.size());
  if (nl > 12 || nx > 10) throw TooLarge("brute-force adjust limited to 12 L-items and 10 X-items");
  bool found = false;
  AdjustSolution best;
  std::vector<int> s;
  std::vector<int> t;
  for (std::uint32_t ms = 0; ms < (1U << nl); ++ms) {
    s.clear();
    for (int i = 0; i < nl; ++i) {
      if (ms >> i & 1U) s.push_back(i);
    }
    for (std::uint32_t mt = 0; mt < (1U << nx); ++mt) {
      t.clear();
      for (int i = 0; i < nx; ++i) {
        if (mt >> i & 1U) t.push_back(i);
      }
      if (!AdjustFeasible(problem, s, t)) continue;
      const std::int64_t value = AdjustValue(problem, s, t);
      if (!found || value < best.value) {
        found = true;
        best.value = value;
        best.s = s;
        best.t = t;
      }
    }
  }
  if (!found) throw DpInfeasible("no (S, T) satisfies the constraints");
  return best;
}

ClassificationAudit Audit(const Classification& cl, const Cut& l_opt, const Graph& g, const Rational& a) {
  const int n = g.num_vertices();
  const Cut r_opt = l_opt.Complement();
  ClassificationAudit audit;
  audit.u_l = cl.l & r_opt;
  audit.u_r = cl.r & l_opt;
  audit.x_l = cl.x & l_opt;
  audit.x_r = cl.x & r_opt;
  audit.opt = CutSize(g, l_opt);
  audit.vol_ul = Volume(g, audit.u_l);
  audit.vol_ur = Volume(g, audit.u_r);
  audit.vol_x = Volume(g, cl.x);
  const Rational delta = MakeRational(g.MinDegree(), n);
  const Rational gap = Rational(1, 2) - 3 * a;
  const Rational opt(static_cast<long>(audit.opt));
  if (delta > 0 && gap != 0) audit.mu = 4 * opt * opt / (gap * gap * delta * delta * n * n);
  for (Vertex u : l_opt.Members()) {
    for (Vertex v : g.neighbors(u)) {
      if (!l_opt.Contains(v) && (cl.x.Contains(u) || cl.x.Contains(v))) ++audit.opt_x;
    }
  }
  audit.max_estimator_error = 0;
  for (Vertex v = 0; v < n; ++v) {
    Rational err;
    if (cl.hits_l[v] + cl.hits_r[v] == 0 || g.degree(v) == 0) {
      err = 1;
    } else {
      err = abs(cl.PL(v) - MakeRational(g.NeighborsIn(v, l_opt), g.degree(v)));
    }
    if (err > audit.max_estimator_error) audit.max_estimator_error = err;
  }
  audit.concentration = audit.max_estimator_error <= a;
  const Rational ul_bound = opt / (Rational(1, 2) + a);
  audit.claim_ul_ur = audit.vol_ul <= ul_bound && audit.vol_ur <= ul_bound;
  audit.claim_x = gap > 0 && Rational(static_cast<long>(audit.vol_x)) <= 2 * opt / gap;
  return audit;
}

}  // namespace densecut
