#include "densecut/cmc_small.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "densecut/errors.h"
#include "densecut/rng.h"

namespace densecut {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Multiplies out p/q for a cheap exact threshold test num/den > p/q.
bool ExceedsFraction(std::int64_t num, std::int64_t den, const Rational& thr) {
  return Rational(static_cast<long>(num)) > thr * Rational(static_cast<long>(den));
}

}  // namespace

std::vector<Vertex> SampleSet::Distinct() const {
  std::vector<Vertex> out = occurrences;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> SampleSet::Multiplicities() const {
  std::vector<int> mult(n, 0);
  for (Vertex v : occurrences) ++mult[v];
  return mult;
}

Rational Classification::PL(Vertex v) const {
  const int total = hits_l[v] + hits_r[v];
  return total == 0 ? Rational(0) : MakeRational(hits_l[v], total);
}

Rational Classification::PR(Vertex v) const {
  const int total = hits_l[v] + hits_r[v];
  return total == 0 ? Rational(0) : MakeRational(hits_r[v], total);
}

Rational AlphaThreshold(const Rational& eps, const Rational& delta, const Rational& c0,
                        const Rational& rho_prime, const Rational& zeta, const Rational& a) {
  const Rational half_gap = Rational(1, 2) - 3 * a;
  Rational first = eps / 22 * half_gap * half_gap * delta * delta;
  Rational second = 6 * rho_prime * zeta * c0 * delta / 35;
  return Min(first, second);
}

Rational DefaultSampleMultiplier(const Rational& a, const Rational& delta) {
  if (delta <= 0) throw std::invalid_argument("sample multiplier needs delta > 0");
  return Max(Rational(2) / (a * a * delta), Rational(4) / (delta * delta));
}

std::int64_t SampleLength(const Rational& k, int n) {
  if (n < 2) throw std::invalid_argument("sampling needs n >= 2");
  const double t = std::ceil(ToDouble(k) * std::log(static_cast<double>(n)));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(t));
}

SampleSet DrawSample(int n, std::int64_t t, std::uint64_t seed) {
  SampleSet s;
  s.n = n;
  Rng rng(seed);
  s.occurrences.reserve(static_cast<std::size_t>(t));
  for (std::int64_t i = 0; i < t; ++i) s.occurrences.push_back(static_cast<Vertex>(rng.Below(n)));
  return s;
}

std::int64_t ForEachConsistentPartition(const SampleSet& s, const PartitionSource& source,
                                        const std::function<void(const ConsistentPartition&)>& visit,
                                        bool* truncated) {
  ConsistentPartition p;
  p.vertices = s.Distinct();
  const int m = static_cast<int>(p.vertices.size());
  p.in_l.assign(m, 0);
  if (truncated != nullptr) *truncated = false;

  if (source.kind == PartitionSource::Kind::kHinted) {
    std::set<std::vector<char>> seen;
    std::int64_t count = 0;
    for (const Cut& hint : source.hints) {
      for (int j = 0; j < m; ++j) p.in_l[j] = hint.Contains(p.vertices[j]);
      if (!seen.insert(p.in_l).second) continue;
      visit(p);
      ++count;
    }
    return count;
  }

  std::int64_t limit;
  if (source.kind == PartitionSource::Kind::kAll) {
    if (m > 30) {
      throw TooLarge("enumerating all partitions of " + std::to_string(m) + " distinct sampled vertices");
    }
    limit = std::int64_t{1} << m;
  } else {
    limit = source.limit;
    if (m < 62 && limit >= (std::int64_t{1} << m)) {
      limit = std::int64_t{1} << m;
    } else if (truncated != nullptr) {
      *truncated = true;
    }
  }
  for (std::int64_t i = 0; i < limit; ++i) {
    const std::uint64_t gray = static_cast<std::uint64_t>(i) ^ (static_cast<std::uint64_t>(i) >> 1);
    for (int j = 0; j < m && j < 64; ++j) p.in_l[j] = static_cast<char>((gray >> j) & 1ULL);
    visit(p);
  }
  return limit;
}

Classification Classify(const Graph& g, const SampleSet& s, const ConsistentPartition& p,
                        const Rational& a) {
  const int n = g.num_vertices();
  const std::vector<int> mult = s.Multiplicities();
  Classification cl;
  cl.l = Cut(n);
  cl.r = Cut(n);
  cl.x = Cut(n);
  cl.hits_l.assign(n, 0);
  cl.hits_r.assign(n, 0);
  const Rational thr = Rational(1, 2) + 2 * a;
  for (Vertex v = 0; v < n; ++v) {
    int hl = 0;
    int hr = 0;
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      const Vertex u = p.vertices[j];
      if (!g.Adjacent(v, u)) continue;
      if (p.in_l[j]) {
        hl += mult[u];
      } else {
        hr += mult[u];
      }
    }
    cl.hits_l[v] = hl;
    cl.hits_r[v] = hr;
    const int total = hl + hr;
    if (total > 0 && ExceedsFraction(hl, total, thr)) {
      cl.l.Insert(v);
    } else if (total > 0 && ExceedsFraction(hr, total, thr)) {
      cl.r.Insert(v);
    } else {
      cl.x.Insert(v);
    }
  }
  return cl;
}

bool AdjustFeasible(const AdjustProblem& problem, const std::vector<int>& s, const std::vector<int>& t) {
  std::int64_t deg = 0;
  std::int64_t cs = 0;
  std::int64_t ct = 0;
  for (int i : s) {
    deg += problem.items_l[i].degree;
    cs += problem.items_l[i].cost;
  }
  for (int i : t) ct += problem.items_x[i].cost;
  if (deg > problem.budget_deg) return false;
  if (problem.kind == AdjustProblem::Kind::kUpper) return problem.c_l - cs + ct <= problem.bound;
  return problem.c_l + cs + problem.c_x - ct >= problem.bound;
}

std::int64_t AdjustValue(const AdjustProblem& problem, const std::vector<int>& s, const std::vector<int>& t) {
  std::int64_t total = 0;
  for (int i : s) total += problem.items_l[i].value;
  for (int i : t) total += problem.items_x[i].value;
  return total;
}

AdjustSolution AdjustDp(const AdjustProblem& problem, std::int64_t cell_cap) {
  if (problem.budget_deg < 0) throw DpInfeasible("negative degree budget");
  for (const auto& it : problem.items_l) {
    if (it.cost < 0 || it.degree < 0) throw std::invalid_argument("adjust items need nonnegative cost and degree");
  }
  for (const auto& it : problem.items_x) {
    if (it.cost < 0) throw std::invalid_argument("adjust items need nonnegative cost");
  }

  // Items that alone exceed the degree budget can never be chosen.
  std::vector<int> usable;
  std::int64_t cost_l = 0;
  std::int64_t deg_l = 0;
  for (int i = 0; i < static_cast<int>(problem.items_l.size()); ++i) {
    if (problem.items_l[i].degree > problem.budget_deg) continue;
    usable.push_back(i);
    cost_l += problem.items_l[i].cost;
    deg_l += problem.items_l[i].degree;
  }
  const std::int64_t dmax = std::min(problem.budget_deg, deg_l);
  std::int64_t cost_x = 0;
  for (const auto& it : problem.items_x) cost_x += it.cost;

  const std::int64_t width_l = dmax + 1;
  const std::int64_t states_l = (cost_l + 1) * width_l;
  const std::int64_t states_x = cost_x + 1;
  const std::int64_t cells = states_l * static_cast<std::int64_t>(usable.size() + 1) +
                             states_x * static_cast<std::int64_t>(problem.items_x.size() + 1);
  if (cells > cell_cap) {
    throw TooLarge("adjust DP needs " + std::to_string(cells) + " cells, cap is " + std::to_string(cell_cap));
  }

  // table_L[C][D]: min sum V over S with c(S) = C and sum d = D.
  std::vector<std::int64_t> table_l(static_cast<std::size_t>(states_l), kInf);
  table_l[0] = 0;
  std::vector<std::vector<bool>> take_l(usable.size());
  for (std::size_t k = 0; k < usable.size(); ++k) {
    const AdjustItem& it = problem.items_l[usable[k]];
    take_l[k].assign(static_cast<std::size_t>(states_l), false);
    for (std::int64_t c = cost_l; c >= it.cost; --c) {
      for (std::int64_t d = dmax; d >= it.degree; --d) {
        const std::int64_t from = table_l[(c - it.cost) * width_l + (d - it.degree)];
        if (from >= kInf) continue;
        std::int64_t& to = table_l[c * width_l + d];
        if (from + it.value < to) {
          to = from + it.value;
          take_l[k][c * width_l + d] = true;
        }
      }
    }
  }

  // table_X[C']: min sum V' over T with c(T) = C'.
  std::vector<std::int64_t> table_x(static_cast<std::size_t>(states_x), kInf);
  table_x[0] = 0;
  std::vector<std::vector<bool>> take_x(problem.items_x.size());
  for (std::size_t k = 0; k < problem.items_x.size(); ++k) {
    const AdjustItem& it = problem.items_x[k];
    take_x[k].assign(static_cast<std::size_t>(states_x), false);
    for (std::int64_t c = cost_x; c >= it.cost; --c) {
      const std::int64_t from = table_x[c - it.cost];
      if (from >= kInf) continue;
      if (from + it.value < table_x[c]) {
        table_x[c] = from + it.value;
        take_x[k][c] = true;
      }
    }
  }

  // prefix_x[C'] = min over table_X[0..C'], with its argmin.
  std::vector<std::int64_t> prefix_x(static_cast<std::size_t>(states_x));
  std::vector<std::int64_t> prefix_arg(static_cast<std::size_t>(states_x));
  for (std::int64_t c = 0; c < states_x; ++c) {
    if (c == 0 || table_x[c] < prefix_x[c - 1]) {
      prefix_x[c] = table_x[c];
      prefix_arg[c] = c;
    } else {
      prefix_x[c] = prefix_x[c - 1];
      prefix_arg[c] = prefix_arg[c - 1];
    }
  }

  // Both constraint kinds reduce to c(T) <= c(S) + shift.
  const std::int64_t shift = problem.kind == AdjustProblem::Kind::kUpper
                                 ? problem.bound - problem.c_l
                                 : problem.c_l + problem.c_x - problem.bound;
  std::int64_t best = kInf;
  std::int64_t best_c = -1;
  std::int64_t best_d = -1;
  std::int64_t best_cx = -1;
  for (std::int64_t c = 0; c <= cost_l; ++c) {
    std::int64_t lim = c + shift;
    if (lim < 0) continue;
    lim = std::min(lim, cost_x);
    if (prefix_x[lim] >= kInf) continue;
    for (std::int64_t d = 0; d <= dmax; ++d) {
      const std::int64_t vl = table_l[c * width_l + d];
      if (vl >= kInf) continue;
      if (vl + prefix_x[lim] < best) {
        best = vl + prefix_x[lim];
        best_c = c;
        best_d = d;
        best_cx = prefix_arg[lim];
      }
    }
  }
  if (best_c < 0) throw DpInfeasible("no (S, T) satisfies the degree budget and cost bound");

  AdjustSolution sol;
  sol.value = best;
  std::int64_t c = best_c;
  std::int64_t d = best_d;
  for (std::size_t k = usable.size(); k-- > 0;) {
    if (take_l[k][c * width_l + d]) {
      const AdjustItem& it = problem.items_l[usable[k]];
      sol.s.push_back(usable[k]);
      c -= it.cost;
      d -= it.degree;
    }
  }
  std::int64_t cx = best_cx;
  for (std::size_t k = problem.items_x.size(); k-- > 0;) {
    if (take_x[k][cx]) {
      sol.t.push_back(static_cast<int>(k));
      cx -= problem.items_x[k].cost;
    }
  }
  std::reverse(sol.s.begin(), sol.s.end());
  std::reverse(sol.t.begin(), sol.t.end());
  return sol;
}

std::int64_t DegreeBudget(const Rational& alpha, int n, const Rational& a) {
  return FloorToInt(alpha * n * n / (Rational(1, 2) + a));
}

AdjustOutcome Adjust(const Graph& g, const VertexCosts& c, const Classification& cl,
                     const Rational& c_min, const Rational& c_max, const Rational& alpha,
                     const Rational& a, std::int64_t cell_cap) {
  if (c_min > c_max) throw std::invalid_argument("adjust needs C_m <= C_M");
  const int n = g.num_vertices();
  const std::int64_t cost_l = Cost(c, cl.l);
  const std::int64_t cost_x = Cost(c, cl.x);
  const auto in_l = [&](Vertex u) { return g.NeighborsIn(u, cl.l); };
  const auto in_r = [&](Vertex u) { return g.NeighborsIn(u, cl.r); };
  const std::vector<Vertex> xs = cl.x.Members();

  AdjustOutcome out;
  if (Rational(static_cast<long>(cost_l + cost_x)) >= c_max) {
    out.branch = 1;
    const std::vector<Vertex> ls = cl.l.Members();
    AdjustProblem problem;
    problem.kind = AdjustProblem::Kind::kUpper;
    problem.budget_deg = DegreeBudget(alpha, n, a);
    problem.c_l = cost_l;
    problem.c_x = cost_x;
    problem.bound = FloorToInt(c_max);
    for (Vertex u : ls) problem.items_l.push_back({in_l(u) - in_r(u), c[u], g.degree(u)});
    for (Vertex u : xs) problem.items_x.push_back({in_r(u) - in_l(u), c[u], 0});
    AdjustSolution sol = AdjustDp(problem, cell_cap);
    out.l = cl.l;
    for (int i : sol.s) out.l.Erase(ls[i]);
    for (int i : sol.t) out.l.Insert(xs[i]);
    out.value = sol.value;
    return out;
  }
  if (Rational(static_cast<long>(cost_l)) < c_min) {
    out.branch = 2;
    const std::vector<Vertex> rs = cl.r.Members();
    AdjustProblem problem;
    problem.kind = AdjustProblem::Kind::kLower;
    problem.budget_deg = DegreeBudget(alpha, n, a);
    problem.c_l = cost_l;
    problem.c_x = cost_x;
    problem.bound = CeilToInt(c_min);
    for (Vertex u : rs) problem.items_l.push_back({in_r(u) - in_l(u), c[u], g.degree(u)});
    for (Vertex u : xs) problem.items_x.push_back({in_l(u) - in_r(u), c[u], 0});
    AdjustSolution sol = AdjustDp(problem, cell_cap);
    out.l = cl.l | cl.x;
    for (int i : sol.s) out.l.Insert(rs[i]);
    for (int i : sol.t) out.l.Erase(xs[i]);
    out.value = sol.value;
    return out;
  }
  out.branch = 3;
  out.l = cl.l;
  for (Vertex u : xs) {
    const std::int64_t v = in_r(u) - in_l(u);
    if (v < 0) {
      out.l.Insert(u);
      out.value += v;
    }
  }
  return out;
}

SmallResult SolveSmall(const CmcInstance& inst, const Rational& eps, const SmallConfig& cfg,
                       std::uint64_t seed) {
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  if (cfg.a <= 0 || cfg.a >= Rational(1, 6)) throw std::invalid_argument("margin a must lie in (0, 1/6)");
  const DensityParams dp = ComputeDensityParams(g, inst.costs);

  SmallResult result;
  SmallReport& report = result.report;
  report.alpha = cfg.alpha ? *cfg.alpha
                           : AlphaThreshold(eps, dp.delta, dp.c0, inst.RhoPrime(), inst.zeta, cfg.a);
  report.k = cfg.k ? *cfg.k : DefaultSampleMultiplier(cfg.a, dp.delta);

  std::vector<SampleSet> samples = cfg.samples;
  if (samples.empty()) {
    report.sample_length = SampleLength(report.k, n);
    samples.push_back(DrawSample(n, report.sample_length, seed));
  } else {
    report.sample_length = static_cast<std::int64_t>(samples.front().occurrences.size());
  }
  report.samples = static_cast<std::int64_t>(samples.size());

  const Rational c_min = inst.CostLo();
  const Rational c_max = inst.CostHi();
  std::optional<ScoredCut> best;
  for (const SampleSet& sample : samples) {
    report.distinct_max = std::max<std::int64_t>(report.distinct_max, sample.Distinct().size());
    bool truncated = false;
    report.partitions_evaluated += ForEachConsistentPartition(
        sample, cfg.partitions,
        [&](const ConsistentPartition& p) {
          Classification cl = Classify(g, sample, p, cfg.a);
          AdjustOutcome adjusted;
          try {
            adjusted = Adjust(g, inst.costs, cl, c_min, c_max, report.alpha, cfg.a, cfg.dp_cell_cap);
          } catch (const DpInfeasible&) {
            ++report.dp_infeasible;
            return;
          }
          ++report.branch_counts[adjusted.branch - 1];
          if (!inst.Feasible(adjusted.l)) {
            ++report.out_of_window;
            return;
          }
          KeepBest(best, ScoredCut{adjusted.l, CutSize(g, adjusted.l)});
        },
        &truncated);
    report.truncated = report.truncated || truncated;
  }
  if (best) {
    result.found = true;
    result.cut = best->cut;
    result.cut_size = best->size;
  }
  return result;
}

SmallResult ConstrainedMinCutSmall(const CmcInstance& inst, const Rational& eps,
                                   const SmallConfig& cfg, std::uint64_t seed) {
  SmallResult result = SolveSmall(inst, eps, cfg, seed);
  if (!result.found) {
    throw NoFeasibleCut("no adjusted cut lands in [" + ToString(inst.CostLo()) + ", " +
                        ToString(inst.CostHi()) + "] over " +
                        std::to_string(result.report.partitions_evaluated) + " partitions");
  }
  return result;
}

}  // namespace densecut
