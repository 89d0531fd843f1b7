// Acceptance checks AC1..AC11. One PASS/FAIL line per criterion.
//
//   densecut_acceptance [--only N] [--out DIR]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "densecut/cmc.h"
#include "densecut/derand.h"
#include "densecut/errors.h"
#include "densecut/generators.h"
#include "densecut/knapsack.h"
#include "densecut/oracle.h"
#include "densecut/ratio_cuts.h"
#include "densecut/regularity.h"
#include "support/naive.h"

namespace {

using namespace densecut;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

CmcInstance DenseInstance(int n, std::uint64_t seed) {
  const DenseGraph dg = GenDense(n, MakeRational(1, 2), seed);
  const VertexCosts c = GenCosts(n, MakeRational(1, 2), seed ^ 0x5bd1e995ULL);
  return CmcInstance{dg.graph, c, c.total() / 3, MakeRational(1, 3)};
}

// Approximate path only: no exhaustive shortcut, tiny sample with every
// consistent partition, large case restricted to width <= 2.
CmcConfig ApproximateConfig() {
  CmcConfig cfg;
  cfg.brute_force_threshold = 0;
  cfg.small.k = 2;
  cfg.small.partitions.kind = PartitionSource::Kind::kAll;
  cfg.large.decomposition_eps = MakeRational(1, 2);
  cfg.large.nu = 1;
  cfg.large.decompose.width_cap = 2;
  cfg.large.profile_cap = std::int64_t{1} << 40;
  return cfg;
}

Outcome Ac1() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> value(-20, 20);
  std::uniform_int_distribution<int> cost(0, 12);
  std::uniform_int_distribution<int> degree(0, 10);
  int agree = 0;
  int infeasible = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    AdjustProblem p;
    p.kind = trial % 2 == 0 ? AdjustProblem::Kind::kUpper : AdjustProblem::Kind::kLower;
    const int nl = static_cast<int>(rng() % 11);
    const int nx = static_cast<int>(rng() % 7);
    for (int i = 0; i < nl; ++i) {
      p.items_l.push_back({value(rng), cost(rng), degree(rng)});
      p.c_l += p.items_l.back().cost;
    }
    for (int i = 0; i < nx; ++i) {
      p.items_x.push_back({value(rng), cost(rng), 0});
      p.c_x += p.items_x.back().cost;
    }
    p.budget_deg = static_cast<std::int64_t>(rng() % (10 * nl + 1));
    p.bound = static_cast<std::int64_t>(rng() % (p.c_l + p.c_x + 1));
    std::optional<std::int64_t> expected;
    std::optional<std::int64_t> got;
    try {
      expected = BruteForceAdjust(p).value;
    } catch (const DpInfeasible&) {
    }
    try {
      const AdjustSolution sol = AdjustDp(p);
      if (AdjustFeasible(p, sol.s, sol.t) && AdjustValue(p, sol.s, sol.t) == sol.value) got = sol.value;
      else got = std::numeric_limits<std::int64_t>::min();
    } catch (const DpInfeasible&) {
    }
    infeasible += !expected.has_value();
    agree += expected == got;
  }
  const double secs = Seconds(start);
  return {agree == trials && secs < 10,
          Format("adjust_dp == brute_force_adjust on %d/%d (%d both infeasible), %.2f s", agree, trials,
                 infeasible, secs)};
}

Outcome Ac2() {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  std::uint64_t seed = 2002;
  for (double p : {0.5, 0.8}) {
    for (const Rational& eps : {MakeRational(3, 10), MakeRational(1, 2)}) {
      int ok = 0;
      int max_width = 0;
      for (int trial = 0; trial < 50; ++trial) {
        const int n = 8 + trial % 9;
        const Graph g(n, naive::RandomEdges(n, p, ++seed));
        const CutDecomposition d = WeakRegularityDecompose(g, eps, DecompositionMode::kRandomized, seed);
        RationalMatrix residual = RationalMatrix::Adjacency(g);
        const RationalMatrix approx = d.Approximation();
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) residual.at(i, j) -= approx.at(i, j);
        }
        const Rational cut_norm = CutNormExact(residual).value;
        const Rational fro = RationalMatrix::Adjacency(g).FrobeniusSquared();
        const Rational nn(static_cast<long>(n) * n);
        const bool error_ok = cut_norm * cut_norm <= eps * eps * nn * fro;
        const bool width_ok = d.width() <= CeilToInt(Rational(27) / (eps * eps));
        Rational coeff = 0;
        for (const CutTerm& t : d.terms) coeff += t.d * t.d;
        const bool coeff_ok = coeff * nn <= 27 * fro;
        ok += error_ok && width_ok && coeff_ok;
        max_width = std::max(max_width, d.width());
      }
      pass = pass && ok == 50;
      detail += Format("p=%.1f eps=%s %d/50 (max width %d); ", p, ToString(eps).c_str(), ok, max_width);
    }
  }
  const double secs = Seconds(start);
  return {pass && secs < 120, detail + Format("%.2f s", secs)};
}

Outcome Ac3() {
  const auto start = std::chrono::steady_clock::now();
  int exact = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 13;
    const auto e = naive::RandomEdges(n, 0.3 + 0.05 * (trial % 10), 3000 + trial);
    const auto cv = naive::RandomCosts(n, 0, n, 3500 + trial);
    const Graph g(n, e);
    std::vector<std::int64_t> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = naive::Degree(e, v);
    const Rational rho = MakeRational(1 + trial % (n * n / 2 + 1), 1 + trial % 3);
    const Rational zeta = MakeRational(1 + trial % 4, 5);
    const auto expected = naive::MinWeight(cv, deg, rho * (1 - zeta), rho * (1 + zeta));
    const auto got = MinVolumeCutKnapsack(g, VertexCosts(cv), rho, zeta);
    if (expected.has_value() != got.has_value()) continue;
    if (!got) {
      ++exact;
      continue;
    }
    const Rational cost(static_cast<long>(Cost(VertexCosts(cv), *got)));
    exact += Volume(g, *got) == *expected && cost >= rho * (1 - zeta) && cost <= rho * (1 + zeta);
  }

  // Unbalanced windows on dense instances.
  int unbalanced = 0;
  int within = 0;
  std::int64_t seed = 4000;
  while (unbalanced < 100) {
    ++seed;
    const int n = 8 + static_cast<int>(seed % 7);
    const Rational eps = seed % 2 ? Rational(1) : MakeRational(1, 2);
    const DenseGraph dg = GenDense(n, MakeRational(3, 4), seed);
    const VertexCosts c = GenCosts(n, MakeRational(1, 2), seed + 77);
    const DensityParams dp = ComputeDensityParams(dg.graph, c);
    const Rational limit = dp.c0 * (eps / 2) * dp.delta * dp.delta * n * n;
    const Rational zeta = MakeRational(1 + seed % 3, 4);
    CmcInstance inst{dg.graph, c, FloorToInt(limit / (1 + zeta)), zeta};
    if (inst.rho < 1 || !IsUnbalanced(inst, eps)) continue;
    const auto opt = BruteForceCmc(inst);
    if (!opt) continue;
    ++unbalanced;
    const auto k = MinVolumeCutKnapsack(inst.graph, inst.costs, inst.rho, inst.zeta);
    if (k && inst.Feasible(*k) && Rational(static_cast<long>(CutSize(inst.graph, *k))) <=
                                       (1 + eps) * Rational(static_cast<long>(opt->cut_size))) {
      ++within;
    }
  }
  return {exact == 200 && within == unbalanced,
          Format("knapsack == enumeration %d/200; unbalanced cut <= (1+eps) OPT %d/%d; %.2f s", exact, within,
                 unbalanced, Seconds(start))};
}

Outcome Ac4() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(4004);
  int in_window = 0;
  int infeasible_ok = 0;
  int infeasible_total = 0;
  int violations = 0;
  int missed = 0;
  const CmcConfig cfg = ApproximateConfig();
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 8 + trial % 7;
    CmcInstance inst = DenseInstance(n, 40000 + trial);
    const std::int64_t half = inst.costs.total() / 2;
    if (trial % 5 == 4) {
      // Window strictly below the cheapest vertex.
      inst.rho = std::max<std::int64_t>(1, inst.costs.Min() / 2);
      inst.zeta = MakeRational(1, 2);
      if (inst.costs.Min() <= 1) inst.costs = VertexCosts::Uniform(n, n);
      inst.rho = std::max<std::int64_t>(1, inst.costs.Min() / 2);
    } else {
      inst.rho = 1 + static_cast<std::int64_t>(rng() % half);
      inst.zeta = MakeRational(1 + rng() % 9, 10);
    }
    const bool feasible = BruteForceCmc(inst).has_value();
    infeasible_total += !feasible;
    try {
      const CmcResult r = ConstrainedMinCut(inst, MakeRational(1, 2), cfg, trial);
      if (inst.Feasible(r.cut) && feasible) {
        ++in_window;
      } else {
        ++violations;
      }
    } catch (const Infeasible&) {
      if (feasible) {
        ++missed;
      } else {
        ++infeasible_ok;
      }
    }
  }
  const int feasible_total = 500 - infeasible_total;
  return {violations == 0 && missed == 0 && infeasible_ok == infeasible_total,
          Format("in-window %d/%d feasible, Infeasible raised %d/%d infeasible, violations %d, missed %d; %.2f s",
                 in_window, feasible_total, infeasible_ok, infeasible_total, violations, missed, Seconds(start))};
}

Outcome Ac5(const std::string& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  const CmcConfig cfg = ApproximateConfig();
  const int trials = 200;
  int le15 = 0;
  int le20 = 0;
  double worst = 0;
  std::ofstream csv(out_dir + "/ac5_ratios.csv");
  csv << "instance,n,opt,cut_size,ratio,path,large_width,large_cut_size,small_cut_size\n";
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 8 + trial % 5;
    const CmcInstance inst = DenseInstance(n, 50000 + trial);
    const auto opt = BruteForceCmc(inst);
    const CmcResult r = ConstrainedMinCut(inst, MakeRational(1, 2), cfg, trial);
    const double ratio = opt->cut_size == 0 ? (r.cut_size == 0 ? 1.0 : INFINITY)
                                             : static_cast<double>(r.cut_size) / opt->cut_size;
    le15 += 2 * r.cut_size <= 3 * opt->cut_size && inst.Feasible(r.cut);
    le20 += r.cut_size <= 2 * opt->cut_size && inst.Feasible(r.cut);
    worst = std::max(worst, ratio);
    int width = -1;
    if (r.report.large && !r.report.large->widths.empty()) width = r.report.large->widths.front();
    csv << trial << ',' << n << ',' << opt->cut_size << ',' << r.cut_size << ',' << Format("%.6f", ratio) << ','
        << r.report.path << ',' << width << ',' << r.report.large_cut_size << ',' << r.report.small_cut_size
        << '\n';
  }
  const double secs = Seconds(start);
  return {le15 * 10 >= 9 * trials && le20 == trials && secs < 600,
          Format("ratio <= 1.5 on %d/%d, <= 2.0 on %d/%d, worst %.3f; CSV %s/ac5_ratios.csv; %.2f s", le15, trials,
                 le20, trials, worst, out_dir.c_str(), secs)};
}

Outcome Ac6() {
  const auto start = std::chrono::steady_clock::now();
  const int n = 2000;
  const Rational a = MakeRational(1, 10);
  const Rational delta_target = MakeRational(2, 5);
  const std::int64_t cross = static_cast<std::int64_t>(n) * n / 100;
  int concentrated = 0;
  int claims_ok = 0;
  int trials = 100;
  Rational worst = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const PlantedGraph pg = GenPlanted(n, MakeRational(1, 2), cross, delta_target, 60000 + trial);
    const Graph& g = pg.graph;
    const Rational delta = MakeRational(g.MinDegree(), n);
    const Rational k = DefaultSampleMultiplier(a, delta);
    const SampleSet s = DrawSample(n, SampleLength(k, n), 61000 + trial);
    PartitionSource hint;
    hint.kind = PartitionSource::Kind::kHinted;
    hint.hints.push_back(pg.plant);
    bool truncated = false;
    std::optional<ClassificationAudit> audit;
    ForEachConsistentPartition(
        s, hint, [&](const ConsistentPartition& p) { audit = Audit(Classify(g, s, p, a), pg.plant, g, a); },
        &truncated);
    if (!audit) continue;
    worst = Max(worst, audit->max_estimator_error);
    if (!audit->concentration) continue;
    ++concentrated;
    claims_ok += audit->claim_ul_ur && audit->claim_x;
  }
  const double secs = Seconds(start);
  return {concentrated >= 99 && claims_ok == concentrated && secs < 300,
          Format("concentration %d/%d (worst max|p^-p| = %.4f), claims hold %d/%d; %.2f s", concentrated, trials,
                 ToDouble(worst), claims_ok, concentrated, secs)};
}

// Exact interval checks written out independently of the library helpers.
bool ChainsAndClamps(const ParameterSchedule& s, std::int64_t c_total) {
  const Rational half = MakeRational(c_total, 2);
  const std::size_t k = s.rhos.size();
  if (k == 0) return false;
  if (k >= 2 && s.rhos[0] * (1 - s.zeta) != s.base) return false;
  for (std::size_t i = 0; i + 2 < k; ++i) {
    if (s.rhos[i + 1] * (1 - s.zeta) != s.rhos[i] * (1 + s.zeta)) return false;
  }
  if (s.rhos[k - 1] * (1 + s.zeta) != half) return false;
  const Rational prev_top = k >= 2 ? Rational(s.rhos[k - 2] * (1 + s.zeta)) : s.base;
  if (s.rhos[k - 1] * (1 - s.zeta) > prev_top) return false;
  // Unclamped, the last rung would already reach c(V)/2.
  if (k >= 2 && s.rhos[k - 2] * (1 + s.zeta) >= half) return false;
  return true;
}

Outcome Ac7() {
  std::mt19937_64 rng(7007);
  int ok = 0;
  int tuples = 0;
  while (tuples < 50) {
    const int n = 8 + static_cast<int>(rng() % 300);
    const Rational eps = MakeRational(1 + rng() % 20, 20);
    const Rational delta = MakeRational(1 + rng() % 19, 20);
    const Rational c0 = MakeRational(1 + rng() % 19, 20);
    const std::int64_t lo = CeilToInt(c0 * n);
    const std::int64_t c_total = static_cast<std::int64_t>(n) * lo + static_cast<std::int64_t>(rng() % (n * (n - lo) + 1));
    std::optional<ParameterSchedule> m;
    std::optional<ParameterSchedule> p;
    try {
      m = MqcSchedule(eps, delta, c0, c_total, n);
      p = PscSchedule(eps, delta, c0, c_total, n);
    } catch (const EmptySchedule&) {
      continue;
    }
    ++tuples;
    bool good = ChainsAndClamps(*m, c_total) && ChainsAndClamps(*p, c_total);
    good = good && m->zeta == eps / (2 + eps) && (1 + m->zeta) / (1 - m->zeta) == 1 + eps;
    good = good && p->zeta == (eps / 2) / (2 + 3 * eps / 2);
    const Rational ct(static_cast<long>(c_total));
    for (const Rational& rho : p->rhos) {
      const Rational lhs = (1 + p->zeta) / (1 - p->zeta) * (ct - rho * (1 - p->zeta)) / (ct - rho * (1 + p->zeta));
      good = good && lhs <= 1 + eps;
    }
    ok += good;
  }
  return {ok == 50, Format("chaining, clamp coverage and product condition exact on %d/50 tuples", ok)};
}

Outcome Ac8() {
  const auto start = std::chrono::steady_clock::now();
  const CmcConfig cfg = ApproximateConfig();
  const Rational eps = MakeRational(1, 2);
  const int trials = 200;
  int good_q = 0;
  int good_p = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 8 + trial % 5;
    const DenseGraph dg = GenDense(n, MakeRational(1, 2), 80000 + trial);
    const VertexCosts c = GenCosts(n, MakeRational(1, 2), 81000 + trial);
    const RatioResult q = MinQuotientCut(dg.graph, c, eps, cfg, trial);
    const RatioResult p = ProductSparsestCut(dg.graph, c, eps, cfg, trial);
    const Rational q_opt = BruteForceRatio(ObjectiveKind::kQuotientCut, dg.graph, c).value;
    const Rational p_opt = BruteForceRatio(ObjectiveKind::kProductSparsestCut, dg.graph, c).value;
    good_q += q.value == Objective(ObjectiveKind::kQuotientCut, dg.graph, c, q.cut) && q.value <= (1 + eps) * q_opt;
    good_p += p.value == Objective(ObjectiveKind::kProductSparsestCut, dg.graph, c, p.cut) &&
              p.value <= (1 + eps) * p_opt;
  }
  const double secs = Seconds(start);
  return {good_q * 100 >= 95 * trials && good_p * 100 >= 95 * trials && secs < 900,
          Format("mqc within 1.5x on %d/%d, psc within 1.5x on %d/%d; %.2f s", good_q, trials, good_p, trials,
                 secs)};
}

Outcome Ac9() {
  std::mt19937_64 rng(9009);
  int ok = 0;
  const int cuts = 1000;
  for (int i = 0; i < cuts; ++i) {
    const int n = 4 + static_cast<int>(rng() % 40);
    const Graph g(n, naive::RandomEdges(n, 0.5 + 0.4 * (i % 2), rng()));
    Cut s(n);
    while (s.Empty() || s.Count() == n) {
      s = Cut(n);
      for (Vertex v = 0; v < n; ++v) s.Set(v, rng() & 1);
    }
    const VertexCosts uni = VertexCosts::Uniform(n, n);
    const VertexCosts deg = VertexCosts::FromDegrees(g);
    bool good = Objective(ObjectiveKind::kQuotientCut, g, uni, s) * n ==
                    Objective(ObjectiveKind::kEdgeExpansion, g, uni, s) &&
                Objective(ObjectiveKind::kProductSparsestCut, g, uni, s) * n * n ==
                    Objective(ObjectiveKind::kUniformSparsestCut, g, uni, s);
    if (Volume(g, s) > 0 && Volume(g, s.Complement()) > 0) {
      good = good && Objective(ObjectiveKind::kProductSparsestCut, g, deg, s) ==
                         Objective(ObjectiveKind::kNormalizedCut, g, deg, s);
    }
    ok += good;
  }
  return {ok == cuts, Format("q n == h, psc n^2 == usc, psc(deg) == nc on %d/%d cuts", ok, cuts)};
}

Outcome Ac10() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (int m : {10, 20, 30, 40}) {
    const ExpanderGraph e = MargulisExpander(m);
    bool regular = e.d == 8;
    for (Vertex v = 0; v < e.n && regular; ++v) {
      for (int p = 0; p < e.d; ++p) {
        const Vertex w = e.Neighbor(v, p);
        const int q = e.BackPort(v, p);
        regular = regular && w >= 0 && w < e.n && e.Neighbor(w, q) == v && e.BackPort(w, q) == p;
      }
    }
    const bool ok = regular && e.spectrum.converged && e.lambda2() <= 0.95;
    pass = pass && ok;
    detail += Format("m=%d lambda2<=%.4f%s; ", m, e.lambda2(), ok ? "" : " (bad)");
  }

  const ExpanderGraph e = MargulisExpander(10);
  const double gap = 1.0 - e.lambda2();
  const double u = 0.1;
  const double norm = UniformInverseRootNorm(e.n);
  // Shortest walk for which the bound drops to 1/2.
  const auto t = static_cast<std::int64_t>(
      std::ceil(20.0 * std::log(4.0 * (1.0 + u * gap / 10.0) * norm) / (gap * u * u)));
  const double bound = GillmanBound(u, gap, t, norm);
  std::mt19937_64 rng(10010);
  const int num_sets = 5;
  std::vector<std::vector<char>> sets(num_sets, std::vector<char>(e.n, 0));
  std::vector<double> mu(num_sets);
  for (int k = 0; k < num_sets; ++k) {
    const int size = 10 + static_cast<int>(rng() % 81);
    std::vector<Vertex> all(e.n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    for (int i = 0; i < size; ++i) sets[k][all[i]] = 1;
    mu[k] = static_cast<double>(size) / e.n;
  }
  std::vector<std::int64_t> deviations(num_sets, 0);
  const std::int64_t walks = 10'000;
  SeededWalks(e, t, walks, 10011, [&](std::span<const Vertex> walk) {
    for (int k = 0; k < num_sets; ++k) {
      std::int64_t hits = 0;
      for (Vertex v : walk) hits += sets[k][v];
      if (std::abs(static_cast<double>(hits) / static_cast<double>(t) - mu[k]) >= u) ++deviations[k];
    }
  });
  double worst = 0;
  for (std::int64_t d : deviations) worst = std::max(worst, static_cast<double>(d) / walks);
  pass = pass && worst <= bound;
  const double secs = Seconds(start);
  detail += Format("walks: t=%lld, observed Pr[dev>=0.1] max %.4f vs bound %.4f; %.2f s",
                   static_cast<long long>(t), worst, bound, secs);
  return {pass && secs < 120, detail};
}

Outcome Ac11() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(11011);
  int equal = 0;
  int recovered = 0;
  int checks = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g(n, naive::RandomEdges(n, 0.3 + 0.1 * (trial % 6), 11100 + trial));
    const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % (n / 2));
    const Rational zeta = trial % 2 ? MakeRational(1, 2) : MakeRational(1, 3);
    const Graph g2 = CliqueAugment(g, t, zeta);
    const auto opt = BruteForceCmc(BalancedSeparatorInstance(g, t, zeta));
    const auto opt2 = BruteForceCmc(BalancedSeparatorInstance(g2, t, zeta));
    if (!opt || !opt2) continue;
    equal += opt->cut_size == opt2->cut_size;
    // The augmented optimum and random in-window sides of G'.
    std::vector<Cut> sides = {opt2->cut};
    const std::int64_t lo = CeilToInt(t * (1 - zeta));
    const std::int64_t hi = FloorToInt(t * (1 + zeta));
    for (int k = 0; k < 20; ++k) {
      std::vector<Vertex> all(g2.num_vertices());
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(lo + rng() % (hi - lo + 1));
      sides.push_back(Cut::FromMembers(g2.num_vertices(), all));
    }
    for (const Cut& s : sides) {
      ++checks;
      const Cut r = RecoverFromAugmented(s, g, t, zeta);
      recovered += CutSize(g, r) <= CutSize(g2, s) && r.Count() >= lo && r.Count() <= hi;
    }
  }
  return {equal == 50 && recovered == checks,
          Format("OPT_G == OPT_G' on %d/50, recovery never worse %d/%d; %.2f s", equal, recovered, checks,
                 Seconds(start))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  std::string out_dir = ".";
  app.add_option("--only", only, "run a single criterion (1-11)");
  app.add_option("--out", out_dir, "directory for CSV output");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> checks = {
      Ac1, Ac2, Ac3, Ac4, [&] { return Ac5(out_dir); }, Ac6, Ac7, Ac8, Ac9, Ac10, Ac11};
  int failures = 0;
  for (int i = 1; i <= static_cast<int>(checks.size()); ++i) {
    if (only != 0 && only != i) continue;
    Outcome o;
    try {
      o = checks[i - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("AC%d %s: %s\n", i, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
