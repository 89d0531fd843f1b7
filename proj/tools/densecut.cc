// densecut command-line front end.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "densecut/cmc.h"
#include "densecut/derand.h"
#include "densecut/errors.h"
#include "densecut/generators.h"
#include "densecut/io.h"
#include "densecut/oracle.h"
#include "densecut/ratio_cuts.h"
#include "densecut/regularity.h"
#include "densecut/rng.h"

namespace {

using densecut::Rational;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int Fail(int code, const std::string& kind, const std::string& message) {
  Json j{{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << j.dump() << "\n";
  return code;
}

Rational ParseArg(const std::string& text, const char* name) {
  try {
    return densecut::ParseRational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void Emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

// Solver knobs shared by solve-*, compare and bench.
struct SolverOptions {
  std::string mode = "auto";
  std::string partitions = "cap=4096";
  std::string k;
  std::string alpha;
  std::string a = "1/10";
  std::string decomposition_eps;
  std::string nu;
  std::string eps0;
  int width_cap = 0;
  int repeats = 0;
  long long profile_cap = 1'000'000;
  int exact_threshold = 14;
  bool deterministic = false;

  void Register(CLI::App* app) {
    app->add_option("--mode", mode, "auto|large|small")->check(CLI::IsMember({"auto", "large", "small"}));
    app->add_option("--partitions", partitions, "all | cap=N | hint=FILE");
    app->add_option("--k", k, "sample multiplier (default max(2/(a^2 delta), 4/delta^2))");
    app->add_option("--alpha", alpha, "large/small threshold alpha");
    app->add_option("--a", a, "classification margin a");
    app->add_option("--decomposition-eps", decomposition_eps, "decomposition accuracy (default eps0/10)");
    app->add_option("--nu", nu, "profile grid stride");
    app->add_option("--eps0", eps0, "large-case accuracy (default alpha*eps)");
    app->add_option("--width-cap", width_cap, "decomposition width cap (0 = ceil(27/eps^2))");
    app->add_option("--repeats", repeats, "decomposition repeats (0 = ceil(log2(1/eta)))");
    app->add_option("--profile-cap", profile_cap, "profiles evaluated before truncation");
    app->add_option("--exact-threshold", exact_threshold, "solve n <= T exhaustively (0 disables)");
    app->add_flag("--deterministic", deterministic, "deterministic decomposition");
  }

  densecut::CmcConfig Build(int n) const {
    densecut::CmcConfig cfg;
    cfg.mode = mode == "large"   ? densecut::CmcConfig::Mode::kLarge
               : mode == "small" ? densecut::CmcConfig::Mode::kSmall
                                 : densecut::CmcConfig::Mode::kAuto;
    cfg.brute_force_threshold = exact_threshold;
    cfg.small.a = ParseArg(a, "a");
    if (!k.empty()) cfg.small.k = ParseArg(k, "k");
    if (!alpha.empty()) cfg.small.alpha = ParseArg(alpha, "alpha");
    if (partitions == "all") {
      cfg.small.partitions.kind = densecut::PartitionSource::Kind::kAll;
    } else if (partitions.rfind("cap=", 0) == 0) {
      cfg.small.partitions.kind = densecut::PartitionSource::Kind::kCapped;
      try {
        cfg.small.partitions.limit = std::stoll(partitions.substr(4));
      } catch (const std::exception&) {
        throw UsageError("--partitions cap=N needs an integer");
      }
    } else if (partitions.rfind("hint=", 0) == 0) {
      cfg.small.partitions.kind = densecut::PartitionSource::Kind::kHinted;
      std::ifstream f(partitions.substr(5));
      if (!f) throw UsageError("cannot open hint file " + partitions.substr(5));
      Json hints;
      try {
        hints = Json::parse(f);
      } catch (const std::exception& e) {
        throw UsageError(std::string("hint file: ") + e.what());
      }
      if (!hints.is_array()) throw UsageError("hint file must hold a list of vertex sets");
      for (const Json& h : hints) cfg.small.partitions.hints.push_back(densecut::CutFromJson(n, h));
    } else {
      throw UsageError("--partitions expects all, cap=N or hint=FILE");
    }
    if (!decomposition_eps.empty()) cfg.large.decomposition_eps = ParseArg(decomposition_eps, "decomposition-eps");
    if (!nu.empty()) cfg.large.nu = ParseArg(nu, "nu");
    if (!eps0.empty()) cfg.large.eps0 = ParseArg(eps0, "eps0");
    if (width_cap > 0) cfg.large.decompose.width_cap = width_cap;
    if (repeats > 0) cfg.large.repeats = repeats;
    cfg.large.profile_cap = profile_cap;
    cfg.large.mode = deterministic ? densecut::DecompositionMode::kDeterministic
                                   : densecut::DecompositionMode::kRandomized;
    return cfg;
  }

  Json Describe() const {
    return Json{{"mode", mode},
                {"partitions", partitions},
                {"k", k.empty() ? Json("default") : Json(k)},
                {"alpha", alpha.empty() ? Json("default") : Json(alpha)},
                {"a", a},
                {"decomposition_eps", decomposition_eps.empty() ? Json("default") : Json(decomposition_eps)},
                {"nu", nu.empty() ? Json("default") : Json(nu)},
                {"eps0", eps0.empty() ? Json("default") : Json(eps0)},
                {"width_cap", width_cap},
                {"repeats", repeats},
                {"profile_cap", profile_cap},
                {"exact_threshold", exact_threshold},
                {"deterministic", deterministic}};
  }
};

densecut::VertexCosts CostsOrUniform(const densecut::InstanceFile& inst) {
  if (inst.costs) return *inst.costs;
  return densecut::VertexCosts::Uniform(inst.graph.num_vertices(), inst.graph.num_vertices());
}

densecut::ObjectiveKind ParseProblem(const std::string& name) {
  try {
    return densecut::ParseObjectiveKind(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int ThreadCount() {
  int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("DENSECUT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

// Runs body(i) for i in [0, count) on a small pool.
template <typename Body>
void ParallelFor(int count, Body&& body) {
  const int threads = std::min(ThreadCount(), std::max(count, 1));
  std::atomic<int> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct CsvRow {
  std::string instance_id;
  int n = 0;
  std::string eps;
  std::uint64_t seed = 0;
  std::string problem;
  std::string approx_value;
  std::string exact_value;
  std::string ratio;
  bool feasible = false;
  long long runtime_ms = 0;
  bool truncated = false;
};

std::string FormatRatio(const Rational& approx, const std::optional<Rational>& exact) {
  if (!exact) return "";
  if (*exact == 0) return approx == 0 ? "1.000000" : "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", densecut::ToDouble(approx / *exact));
  return buf;
}

void WriteCsv(std::vector<CsvRow> rows, std::ostream& out) {
  std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) { return a.instance_id < b.instance_id; });
  out << "instance_id,n,eps,seed,problem,approx_value,exact_value,ratio,feasible,runtime_ms,truncated\n";
  for (const CsvRow& r : rows) {
    out << r.instance_id << ',' << r.n << ',' << r.eps << ',' << r.seed << ',' << r.problem << ','
        << r.approx_value << ',' << r.exact_value << ',' << r.ratio << ',' << (r.feasible ? "true" : "false")
        << ',' << r.runtime_ms << ',' << (r.truncated ? "true" : "false") << '\n';
  }
}

// One generated instance solved approximately and, when small enough, exactly.
CsvRow RunTrial(const std::string& id, const std::string& problem, int n, const Rational& eps,
                const Rational& delta, const Rational& c0, std::uint64_t seed, const SolverOptions& opts,
                bool timing) {
  CsvRow row;
  row.instance_id = id;
  row.n = n;
  row.eps = densecut::ToString(eps);
  row.seed = seed;
  row.problem = problem;
  const densecut::Graph g = densecut::GenDense(n, delta, densecut::DeriveSeed(seed, 1)).graph;
  const densecut::VertexCosts c = densecut::GenCosts(n, c0, densecut::DeriveSeed(seed, 2));
  const densecut::CmcConfig cfg = opts.Build(n);
  const bool exact_ok = n <= densecut::kOracleMaxVertices;
  const auto t0 = std::chrono::steady_clock::now();
  Rational approx;
  std::optional<Rational> exact;
  if (problem == "cmc") {
    densecut::CmcInstance inst{g, c, Rational(static_cast<long>(c.total() / 3)), Rational(1, 3)};
    try {
      densecut::CmcResult r = densecut::ConstrainedMinCut(inst, eps, cfg, densecut::DeriveSeed(seed, 3));
      approx = r.cut_size;
      row.feasible = inst.Feasible(r.cut);
      row.approx_value = densecut::ToString(approx);
      const auto j = densecut::CmcReportToJson(r.report);
      row.truncated = j.value("truncated", false);
    } catch (const densecut::Infeasible&) {
      row.approx_value = "";
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (timing) row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (exact_ok) {
      if (auto opt = densecut::BruteForceCmc(inst)) exact = Rational(static_cast<long>(opt->cut_size));
    }
  } else {
    const densecut::ObjectiveKind kind = ParseProblem(problem);
    densecut::RatioResult r;
    if (kind == densecut::ObjectiveKind::kQuotientCut) {
      r = densecut::MinQuotientCut(g, c, eps, cfg, densecut::DeriveSeed(seed, 3));
    } else if (kind == densecut::ObjectiveKind::kProductSparsestCut) {
      r = densecut::ProductSparsestCut(g, c, eps, cfg, densecut::DeriveSeed(seed, 3));
    } else {
      throw UsageError("compare and bench support cmc, mqc and psc");
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (timing) row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    approx = r.value;
    row.approx_value = densecut::ToString(approx);
    row.feasible = true;
    if (exact_ok) exact = densecut::BruteForceRatio(kind, g, c).value;
  }
  if (exact) row.exact_value = densecut::ToString(*exact);
  if (!row.approx_value.empty()) row.ratio = FormatRatio(approx, exact);
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained min cut and ratio cut approximation on dense graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  std::string out_path;
  int gen_n = 20;
  std::string gen_delta = "1/2";
  std::string gen_c0;
  std::string gen_rho;
  std::string gen_zeta;
  std::uint64_t gen_seed = 1;
  auto* gen_dense = gen->add_subcommand("dense", "G(n, p) with min-degree repair");
  auto* gen_planted = gen->add_subcommand("planted", "two dense sides with a sparse crossing");
  auto* gen_augment = gen->add_subcommand("augment", "add a disjoint clique to a separator instance");
  std::string planted_fraction = "1/2";
  long long planted_cross = 0;
  long long planted_slack = -1;
  std::string augment_input;
  long long augment_t = 1;
  std::string augment_zeta = "1/2";
  for (auto* sub : {gen_dense, gen_planted}) {
    sub->add_option("--n", gen_n, "vertices")->required();
    sub->add_option("--delta", gen_delta, "target min-degree fraction");
    sub->add_option("--seed", gen_seed, "seed");
    sub->add_option("--c0", gen_c0, "emit costs in [ceil(c0 n), n]");
    sub->add_option("--rho", gen_rho, "rho to store");
    sub->add_option("--zeta", gen_zeta, "zeta to store");
    sub->add_option("-o,--out", out_path, "output file (default stdout)");
  }
  gen_planted->add_option("--rho-fraction", planted_fraction, "size of the planted side / n");
  gen_planted->add_option("--cross", planted_cross, "crossing edges")->required();
  gen_planted->add_option("--slack", planted_slack, "forced crossings allowed (default n)");
  gen_augment->add_option("instance", augment_input, "instance file")->required();
  gen_augment->add_option("--t", augment_t, "target size t")->required();
  gen_augment->add_option("--zeta", augment_zeta, "zeta");
  gen_augment->add_option("-o,--out", out_path, "output file (default stdout)");

  // solve-*
  std::string instance_path;
  std::string eps_text = "1/2";
  std::uint64_t seed = 0;
  std::string rho_text;
  std::string zeta_text;
  SolverOptions solver;
  auto* solve_cmc = app.add_subcommand("solve-cmc", "constrained min cut");
  auto* solve_mqc = app.add_subcommand("solve-mqc", "min quotient cut");
  auto* solve_psc = app.add_subcommand("solve-psc", "product sparsest cut");
  for (auto* sub : {solve_cmc, solve_mqc, solve_psc}) {
    sub->add_option("instance", instance_path, "instance file")->required();
    sub->add_option("--eps", eps_text, "accuracy");
    sub->add_option("--seed", seed, "seed");
    solver.Register(sub);
  }
  solve_cmc->add_option("--rho", rho_text, "override rho");
  solve_cmc->add_option("--zeta", zeta_text, "override zeta");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact answers by enumeration (n <= 24)");
  std::string oracle_problem = "cmc";
  oracle->add_option("instance", instance_path, "instance file")->required();
  oracle->add_option("--problem", oracle_problem, "cmc|usc|h|phi|nc|mqc|psc");
  oracle->add_option("--rho", rho_text, "override rho");
  oracle->add_option("--zeta", zeta_text, "override zeta");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "weak regularity cut decomposition");
  bool decompose_det = false;
  int decompose_width_cap = 0;
  decompose->add_option("instance", instance_path, "instance file")->required();
  decompose->add_option("--eps", eps_text, "accuracy");
  decompose->add_option("--seed", seed, "seed");
  decompose->add_option("--width-cap", decompose_width_cap, "width cap (0 = ceil(27/eps^2))");
  decompose->add_flag("--deterministic", decompose_det, "deterministic mode");

  // expander
  auto* expander = app.add_subcommand("expander", "Margulis expander with spectral certificate");
  int expander_m = 10;
  int expander_pad = 0;
  bool expander_certify = false;
  expander->add_option("--m", expander_m, "side length")->required();
  expander->add_option("--pad", expander_pad, "project onto this many labels");
  expander->add_flag("--certify", expander_certify, "print the residual and iteration count");

  // compare / bench
  auto* compare = app.add_subcommand("compare", "approximate vs exact on generated instances, CSV");
  auto* bench = app.add_subcommand("bench", "sweep an (n, eps, seed) grid, CSV");
  std::string problem = "cmc";
  int compare_n = 10;
  int trials = 10;
  std::string bench_ns = "8,10,12";
  std::string bench_eps = "1/2";
  int bench_seeds = 3;
  std::string delta_text = "1/2";
  std::string c0_text = "1/2";
  bool timing = false;
  SolverOptions grid_solver;
  grid_solver.exact_threshold = 0;
  for (auto* sub : {compare, bench}) {
    sub->add_option("--problem", problem, "cmc|mqc|psc");
    sub->add_option("--seed", seed, "base seed");
    sub->add_option("--delta", delta_text, "generator min-degree fraction");
    sub->add_option("--c0", c0_text, "generator cost floor fraction");
    sub->add_flag("--timing", timing, "fill runtime_ms (otherwise 0)");
    sub->add_option("-o,--out", out_path, "CSV file (default stdout)");
    grid_solver.Register(sub);
  }
  compare->add_option("--n", compare_n, "vertices");
  compare->add_option("--trials", trials, "instances");
  compare->add_option("--eps", eps_text, "accuracy");
  bench->add_option("--ns", bench_ns, "comma-separated n values");
  bench->add_option("--eps-list", bench_eps, "comma-separated eps values");
  bench->add_option("--seeds", bench_seeds, "seeds per grid point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail(kExitUsage, "UsageError", e.what());
  }

  try {
    if (gen->parsed()) {
      densecut::InstanceFile inst;
      Json extra;
      if (gen_augment->parsed()) {
        const densecut::InstanceFile base = densecut::LoadInstance(augment_input);
        const Rational zeta = ParseArg(augment_zeta, "zeta");
        inst.graph = densecut::CliqueAugment(base.graph, augment_t, zeta);
        inst.costs = densecut::VertexCosts::Uniform(inst.graph.num_vertices(), 1);
        inst.rho = Rational(static_cast<long>(augment_t));
        inst.zeta = zeta;
        extra["clique_size"] = densecut::AugmentCliqueSize(base.graph.num_vertices(), augment_t, zeta);
      } else {
        const Rational delta = ParseArg(gen_delta, "delta");
        if (gen_planted->parsed()) {
          auto p = densecut::GenPlanted(gen_n, ParseArg(planted_fraction, "rho-fraction"), planted_cross, delta,
                                        gen_seed, planted_slack);
          inst.graph = std::move(p.graph);
          extra["planted"] = p.plant.Members();
          extra["certificate"] = {{"min_degree", p.cert.density.min_degree},
                                  {"required_min_degree", p.cert.density.required_min_degree},
                                  {"crossing_edges", p.cert.crossing_edges},
                                  {"cross_budget", p.cert.cross_budget},
                                  {"forced_crossings", p.cert.forced_crossings},
                                  {"ok", p.cert.ok}};
        } else {
          auto d = densecut::GenDense(gen_n, delta, gen_seed);
          inst.graph = std::move(d.graph);
          extra["certificate"] = {{"min_degree", d.cert.min_degree},
                                  {"required_min_degree", d.cert.required_min_degree},
                                  {"repair_edges", d.cert.repair_edges},
                                  {"ok", d.cert.ok}};
        }
        if (!gen_c0.empty()) {
          inst.costs = densecut::GenCosts(gen_n, ParseArg(gen_c0, "c0"), densecut::DeriveSeed(gen_seed, 7));
        }
        if (!gen_rho.empty()) inst.rho = ParseArg(gen_rho, "rho");
        if (!gen_zeta.empty()) inst.zeta = ParseArg(gen_zeta, "zeta");
      }
      Json j = densecut::InstanceToJson(inst);
      for (auto& [key, value] : extra.items()) j[key] = value;
      Emit(j, out_path);
      return kExitOk;
    }

    if (solve_cmc->parsed()) {
      densecut::InstanceFile file = densecut::LoadInstance(instance_path);
      const int n = file.graph.num_vertices();
      if (!rho_text.empty()) file.rho = ParseArg(rho_text, "rho");
      if (!zeta_text.empty()) file.zeta = ParseArg(zeta_text, "zeta");
      if (!file.rho || !file.zeta) throw UsageError("solve-cmc needs rho and zeta (in the file or as options)");
      densecut::CmcInstance inst{file.graph, CostsOrUniform(file), *file.rho, *file.zeta};
      const Rational eps = ParseArg(eps_text, "eps");
      densecut::CmcResult r = densecut::ConstrainedMinCut(inst, eps, solver.Build(n), seed);
      Json j;
      j["cut"] = densecut::CutToJson(r.cut);
      j["cut_size"] = r.cut_size;
      j["cost"] = r.cost;
      j["window"] = {densecut::ToString(inst.CostLo()), densecut::ToString(inst.CostHi())};
      j["feasible"] = inst.Feasible(r.cut);
      j["config"] = solver.Describe();
      j["config"]["eps"] = eps_text;
      j["config"]["seed"] = seed;
      j["reports"] = densecut::CmcReportToJson(r.report);
      Emit(j, "");
      return kExitOk;
    }

    if (solve_mqc->parsed() || solve_psc->parsed()) {
      const densecut::InstanceFile file = densecut::LoadInstance(instance_path);
      const densecut::VertexCosts c = CostsOrUniform(file);
      const Rational eps = ParseArg(eps_text, "eps");
      const auto cfg = solver.Build(file.graph.num_vertices());
      const auto kind = solve_mqc->parsed() ? densecut::ObjectiveKind::kQuotientCut
                                            : densecut::ObjectiveKind::kProductSparsestCut;
      const densecut::RatioResult r = kind == densecut::ObjectiveKind::kQuotientCut
                                          ? densecut::MinQuotientCut(file.graph, c, eps, cfg, seed)
                                          : densecut::ProductSparsestCut(file.graph, c, eps, cfg, seed);
      Json j = densecut::RatioResultToJson(kind, r);
      j["feasible"] = true;
      j["config"] = solver.Describe();
      j["config"]["eps"] = eps_text;
      j["config"]["seed"] = seed;
      Emit(j, "");
      return kExitOk;
    }

    if (oracle->parsed()) {
      densecut::InstanceFile file = densecut::LoadInstance(instance_path);
      if (oracle_problem == "cmc") {
        if (!rho_text.empty()) file.rho = ParseArg(rho_text, "rho");
        if (!zeta_text.empty()) file.zeta = ParseArg(zeta_text, "zeta");
        if (!file.rho || !file.zeta) throw UsageError("oracle cmc needs rho and zeta");
        densecut::CmcInstance inst{file.graph, CostsOrUniform(file), *file.rho, *file.zeta};
        auto exact = densecut::BruteForceCmc(inst);
        if (!exact) return Fail(kExitInfeasible, "Infeasible", "no cut has cost in the window");
        Emit(Json{{"problem", "cmc"}, {"cut", densecut::CutToJson(exact->cut)}, {"cut_size", exact->cut_size}}, "");
        return kExitOk;
      }
      const auto kind = ParseProblem(oracle_problem);
      const auto r = densecut::BruteForceRatio(kind, file.graph, CostsOrUniform(file));
      Emit(Json{{"problem", densecut::ObjectiveName(kind)},
                {"cut", densecut::CutToJson(r.cut)},
                {"value", densecut::ToString(r.value)}},
           "");
      return kExitOk;
    }

    if (decompose->parsed()) {
      const densecut::InstanceFile file = densecut::LoadInstance(instance_path);
      densecut::DecomposeOptions options;
      options.width_cap = decompose_width_cap;
      const auto d = densecut::WeakRegularityDecompose(
          file.graph, ParseArg(eps_text, "eps"),
          decompose_det ? densecut::DecompositionMode::kDeterministic : densecut::DecompositionMode::kRandomized,
          seed, options);
      Emit(densecut::DecompositionToJson(d), "");
      return kExitOk;
    }

    if (expander->parsed()) {
      densecut::ExpanderGraph e = densecut::MargulisExpander(expander_m);
      if (expander_pad > 0) {
        if (expander_pad > e.n) throw UsageError("--pad must not exceed m^2");
        e = densecut::PadToN(e, expander_pad);
      }
      Json j{{"n", e.n}, {"d", e.d}, {"lambda2", e.lambda2()}};
      if (expander_pad > 0) {
        j["target_n"] = e.target_n;
        j["distortion"] = e.distortion;
      }
      if (expander_certify) {
        j["rayleigh"] = e.spectrum.rayleigh;
        j["residual"] = e.spectrum.residual;
        j["iterations"] = e.spectrum.iterations;
        j["converged"] = e.spectrum.converged;
      }
      Emit(j, "");
      return kExitOk;
    }

    if (compare->parsed() || bench->parsed()) {
      const Rational delta = ParseArg(delta_text, "delta");
      const Rational c0 = ParseArg(c0_text, "c0");
      struct Job {
        std::string id;
        int n;
        Rational eps;
        std::uint64_t seed;
      };
      std::vector<Job> jobs;
      char id[64];
      if (compare->parsed()) {
        const Rational eps = ParseArg(eps_text, "eps");
        for (int t = 0; t < trials; ++t) {
          std::snprintf(id, sizeof id, "%s-n%03d-%05d", problem.c_str(), compare_n, t);
          jobs.push_back({id, compare_n, eps, densecut::DeriveSeed(seed, static_cast<std::uint64_t>(t))});
        }
      } else {
        int counter = 0;
        for (const std::string& ns : SplitList(bench_ns)) {
          int n = 0;
          try {
            n = std::stoi(ns);
          } catch (const std::exception&) {
            throw UsageError("--ns expects integers");
          }
          for (const std::string& es : SplitList(bench_eps)) {
            const Rational eps = ParseArg(es, "eps-list");
            for (int s = 0; s < bench_seeds; ++s) {
              std::snprintf(id, sizeof id, "%s-n%03d-%05d", problem.c_str(), n, counter++);
              jobs.push_back({id, n, eps, densecut::DeriveSeed(seed, static_cast<std::uint64_t>(s))});
            }
          }
        }
      }
      std::vector<CsvRow> rows(jobs.size());
      ParallelFor(static_cast<int>(jobs.size()), [&](int i) {
        rows[i] = RunTrial(jobs[i].id, problem, jobs[i].n, jobs[i].eps, delta, c0, jobs[i].seed, grid_solver, timing);
      });
      if (out_path.empty() || out_path == "-") {
        WriteCsv(std::move(rows), std::cout);
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        WriteCsv(std::move(rows), f);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    return Fail(kExitUsage, "UsageError", e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(kExitUsage, "InvalidArgument", e.what());
  } catch (const densecut::TooLarge& e) {
    return Fail(kExitUsage, e.code(), e.what());
  } catch (const densecut::WidthExceeded& e) {
    return Fail(kExitUsage, e.code(), e.what());
  } catch (const densecut::WalkBudgetExceeded& e) {
    return Fail(kExitUsage, e.code(), e.what());
  } catch (const densecut::DegenerateCut& e) {
    return Fail(kExitUsage, e.code(), e.what());
  } catch (const densecut::Error& e) {
    // Infeasible, NoFeasibleCut, NoFeasibleProfile, InfeasiblePlant, ...
    return Fail(kExitInfeasible, e.code(), e.what());
  } catch (const std::exception& e) {
    return Fail(kExitInfeasible, "InternalError", e.what());
  }
  return kExitOk;
}
