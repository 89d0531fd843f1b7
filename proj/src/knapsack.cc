#include "densecut/knapsack.h"

#include <limits>
#include <string>
#include <vector>

#include "densecut/errors.h"

namespace densecut {

std::optional<Cut> MinWeightInWindow(const VertexCosts& c, std::span<const std::int64_t> weights,
                                     const Rational& rho, const Rational& zeta, std::int64_t cell_cap) {
  const int n = c.size();
  const std::int64_t lo = std::max<std::int64_t>(0, CeilToInt(rho * (1 - zeta)));
  const std::int64_t hi = std::min(c.total(), FloorToInt(rho * (1 + zeta)));
  if (lo > hi) return std::nullopt;
  const std::int64_t states = hi + 1;
  if (states * (n + 1) > cell_cap) {
    throw TooLarge("knapsack table needs " + std::to_string(states * (n + 1)) + " cells");
  }
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> best(static_cast<std::size_t>(states), kInf);
  best[0] = 0;
  std::vector<std::vector<bool>> take(n);
  for (Vertex v = 0; v < n; ++v) {
    take[v].assign(static_cast<std::size_t>(states), false);
    for (std::int64_t s = hi; s >= c[v]; --s) {
      const std::int64_t from = best[s - c[v]];
      if (from >= kInf) continue;
      if (from + weights[v] < best[s]) {
        best[s] = from + weights[v];
        take[v][s] = true;
      }
    }
  }
  std::int64_t arg = -1;
  for (std::int64_t s = lo; s <= hi; ++s) {
    if (best[s] < kInf && (arg < 0 || best[s] < best[arg])) arg = s;
  }
  if (arg < 0) return std::nullopt;
  Cut out(n);
  for (Vertex v = n; v-- > 0;) {
    if (take[v][arg]) {
      out.Insert(v);
      arg -= c[v];
    }
  }
  return out;
}

std::optional<Cut> MinVolumeCutKnapsack(const Graph& g, const VertexCosts& c, const Rational& rho,
                                        const Rational& zeta) {
  std::vector<std::int64_t> degrees(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) degrees[v] = g.degree(v);
  return MinWeightInWindow(c, degrees, rho, zeta);
}

bool WindowReachable(const VertexCosts& c, std::int64_t lo, std::int64_t hi) {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, c.total());
  if (lo > hi) return false;
  std::vector<char> reach(static_cast<std::size_t>(hi + 1), 0);
  reach[0] = 1;
  for (std::int64_t x : c.values()) {
    for (std::int64_t s = hi; s >= x; --s) {
      if (reach[s - x]) reach[s] = 1;
    }
  }
  for (std::int64_t s = lo; s <= hi; ++s) {
    if (reach[s]) return true;
  }
  return false;
}

}  // namespace densecut
