#include "densecut/generators.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "densecut/errors.h"
#include "densecut/rng.h"

namespace densecut {

namespace {

class AdjacencyBuilder {
 public:
  explicit AdjacencyBuilder(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), degree_(n, 0) {}

  bool Has(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  void Add(Vertex u, Vertex v) {
    if (u == v || Has(u, v)) return;
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    ++degree_[u];
    ++degree_[v];
  }
  int degree(Vertex v) const { return degree_[v]; }

  Graph Build(const std::vector<Vertex>& relabel) const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (Has(u, v)) edges.emplace_back(relabel[u], relabel[v]);
      }
    }
    return Graph(n_, edges);
  }

 private:
  int n_;
  std::vector<char> adj_;
  std::vector<int> degree_;
};

int RequiredDegree(int n, const Rational& delta_target) {
  return static_cast<int>(std::min<std::int64_t>(n - 1, CeilToInt(delta_target * n)));
}

std::vector<Vertex> Identity(int n) {
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

DensityCertificate Certify(const Graph& g, int required, std::int64_t repairs) {
  DensityCertificate cert;
  cert.required_min_degree = required;
  cert.min_degree = g.MinDegree();
  cert.repair_edges = repairs;
  cert.ok = cert.min_degree >= required;
  return cert;
}

}  // namespace

DenseGraph GenDense(int n, const Rational& delta_target, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_dense needs n >= 2");
  if (delta_target <= 0 || delta_target >= 1) throw std::invalid_argument("delta_target must lie in (0, 1)");
  Rng rng(seed);
  const double p = std::min(1.0, ToDouble(delta_target) + 0.1);
  AdjacencyBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) b.Add(u, v);
    }
  }
  const int required = RequiredDegree(n, delta_target);
  std::int64_t repairs = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (b.degree(v) >= required) continue;
    std::vector<Vertex> pool;
    for (Vertex w = 0; w < n; ++w) {
      if (w != v && !b.Has(v, w)) pool.push_back(w);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; i < pool.size() && b.degree(v) < required; ++i) {
      b.Add(v, pool[i]);
      ++repairs;
    }
  }
  DenseGraph out{b.Build(Identity(n)), {}};
  out.cert = Certify(out.graph, required, repairs);
  if (!out.cert.ok) throw std::logic_error("gen_dense failed its degree certification");
  return out;
}

PlantedGraph GenPlanted(int n, const Rational& rho_fraction, std::int64_t cross_budget,
                        const Rational& delta_target, std::uint64_t seed, std::int64_t slack) {
  if (n < 2) throw std::invalid_argument("gen_planted needs n >= 2");
  if (delta_target <= 0 || delta_target >= 1) throw std::invalid_argument("delta_target must lie in (0, 1)");
  const int s1 = static_cast<int>(FloorToInt(rho_fraction * n));
  const int s2 = n - s1;
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("rho_fraction leaves an empty side");
  const std::int64_t max_cross = static_cast<std::int64_t>(s1) * s2;
  if (cross_budget < 0 || cross_budget > max_cross) {
    throw std::invalid_argument("cross_budget must lie in [0, " + std::to_string(max_cross) + "]");
  }
  if (slack < 0) slack = n;

  Rng rng(seed);
  AdjacencyBuilder b(n);
  auto side = [s1](Vertex v) { return v < s1 ? 0 : 1; };
  for (int part = 0; part < 2; ++part) {
    const int lo = part == 0 ? 0 : s1;
    const int size = part == 0 ? s1 : s2;
    const double p = std::min(1.0, ToDouble(delta_target) * n / size + 0.05);
    for (Vertex u = lo; u < lo + size; ++u) {
      for (Vertex v = u + 1; v < lo + size; ++v) {
        if (rng.Bernoulli(p)) b.Add(u, v);
      }
    }
  }
  // Exactly cross_budget distinct crossing pairs.
  std::int64_t placed = 0;
  if (2 * cross_budget <= max_cross) {
    while (placed < cross_budget) {
      const Vertex u = static_cast<Vertex>(rng.Below(s1));
      const Vertex v = static_cast<Vertex>(s1 + rng.Below(s2));
      if (!b.Has(u, v)) {
        b.Add(u, v);
        ++placed;
      }
    }
  } else {
    std::vector<std::int64_t> pairs(max_cross);
    std::iota(pairs.begin(), pairs.end(), 0);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (std::int64_t i = 0; i < cross_budget; ++i) {
      b.Add(static_cast<Vertex>(pairs[i] / s2), static_cast<Vertex>(s1 + pairs[i] % s2));
      ++placed;
    }
  }

  const int required = RequiredDegree(n, delta_target);
  std::int64_t repairs = 0;
  std::int64_t forced = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (b.degree(v) >= required) continue;
    std::vector<Vertex> same;
    std::vector<Vertex> other;
    for (Vertex w = 0; w < n; ++w) {
      if (w == v || b.Has(v, w)) continue;
      (side(w) == side(v) ? same : other).push_back(w);
    }
    std::shuffle(same.begin(), same.end(), rng);
    std::shuffle(other.begin(), other.end(), rng);
    for (std::size_t i = 0; i < same.size() && b.degree(v) < required; ++i, ++repairs) b.Add(v, same[i]);
    for (std::size_t i = 0; i < other.size() && b.degree(v) < required; ++i, ++repairs, ++forced) {
      b.Add(v, other[i]);
    }
  }
  if (forced > slack) {
    throw InfeasiblePlant("density repair needs " + std::to_string(forced) +
                          " extra crossing edges, slack is " + std::to_string(slack));
  }

  std::vector<Vertex> relabel = Identity(n);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  PlantedGraph out{b.Build(relabel), Cut(n), {}};
  for (Vertex v = 0; v < s1; ++v) out.plant.Insert(relabel[v]);
  out.cert.density = Certify(out.graph, required, repairs);
  out.cert.cross_budget = cross_budget;
  out.cert.crossing_edges = CutSize(out.graph, out.plant);
  out.cert.forced_crossings = forced;
  out.cert.slack = slack;
  out.cert.ok = out.cert.density.ok && out.cert.crossing_edges == cross_budget + forced;
  if (!out.cert.ok) throw std::logic_error("gen_planted failed its certification");
  return out;
}

VertexCosts GenCosts(int n, const Rational& c0_target, std::uint64_t seed) {
  if (c0_target <= 0 || c0_target > 1) throw std::invalid_argument("c0_target must lie in (0, 1]");
  Rng rng(seed);
  const std::int64_t lo = CeilToInt(c0_target * n);
  std::vector<std::int64_t> c(n);
  for (auto& x : c) x = rng.Between(lo, n);
  return VertexCosts(std::move(c));
}

CmcInstance BalancedSeparatorInstance(const Graph& g, std::int64_t t, const Rational& zeta) {
  return CmcInstance{g, VertexCosts::Uniform(g.num_vertices(), 1), Rational(static_cast<long>(t)), zeta};
}

int AugmentCliqueSize(int n, std::int64_t t, const Rational& zeta) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  return static_cast<int>(CeilToInt(Rational(static_cast<long>(t)) * (1 + zeta)) + n);
}

Graph CliqueAugment(const Graph& g, std::int64_t t, const Rational& zeta) {
  const int n = g.num_vertices();
  const int k = AugmentCliqueSize(n, t, zeta);
  auto edges = g.Edges();
  for (Vertex u = n; u < n + k; ++u) {
    for (Vertex v = u + 1; v < n + k; ++v) edges.emplace_back(u, v);
  }
  return Graph(n + k, edges);
}

Cut RecoverFromAugmented(const Cut& s_prime, const Graph& g_orig, std::int64_t t, const Rational& zeta) {
  const int n = g_orig.num_vertices();
  const int k = AugmentCliqueSize(n, t, zeta);
  if (s_prime.universe() != n + k) throw std::invalid_argument("cut does not live on the augmented graph");
  const Rational tr(static_cast<long>(t));
  const std::int64_t size = s_prime.Count();
  if (size < CeilToInt(tr * (1 - zeta)) || size > FloorToInt(tr * (1 + zeta))) {
    throw InfeasibleInput("|S'| = " + std::to_string(size) + " is outside [" + ToString(tr * (1 - zeta)) + ", " +
                          ToString(tr * (1 + zeta)) + "]");
  }
  Cut x(n);
  std::int64_t y = 0;
  for (Vertex v : s_prime.Members()) {
    if (v < n) {
      x.Insert(v);
    } else {
      ++y;
    }
  }
  if (k - y < n) throw std::logic_error("|K| - |Y| < n on a feasible augmented cut");
  // |E_G(T, T')| <= |E_G(X, X')| + |Y| (|K| - |Y|) = |E_G'(S', S'')|
  const std::int64_t augmented = CutSize(g_orig, x) + y * (k - y);
  const std::int64_t target = CeilToInt(tr * (1 - zeta));
  for (Vertex v = 0; v < n && x.Count() < target; ++v) x.Insert(v);
  if (CutSize(g_orig, x) > augmented) throw std::logic_error("recovered cut is larger than the augmented cut");
  return x;
}

}  // namespace densecut
