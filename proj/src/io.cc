#include "densecut/io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace densecut {

using Json = nlohmann::ordered_json;

namespace {

std::string CertificationName(Certification c) {
  return c == Certification::kExact ? "exact" : "lower_bound";
}

std::string MpzString(const mpz_class& z) { return z.get_str(); }

}  // namespace

Rational RationalFromJson(const Json& value) {
  if (value.is_number_integer()) return MakeRational(value.get<std::int64_t>());
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_float()) return ParseRational(value.dump());
  throw std::invalid_argument("expected a rational, got " + value.dump());
}

InstanceFile ParseInstanceJson(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw std::invalid_argument("instance JSON needs an integer \"n\"");
  }
  const std::int64_t n = j["n"].get<std::int64_t>();
  if (n < 1 || n > (1 << 20)) throw std::invalid_argument("instance n out of range");
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    for (const Json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw std::invalid_argument("each edge must be [u, v], got " + e.dump());
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  InstanceFile out{Graph(static_cast<int>(n), edges), std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("costs")) {
    if (!j["costs"].is_array() || static_cast<std::int64_t>(j["costs"].size()) != n) {
      throw std::invalid_argument("\"costs\" must be an array of length n");
    }
    std::vector<std::int64_t> c;
    for (const Json& x : j["costs"]) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
        throw std::invalid_argument("costs must be nonnegative integers");
      }
      c.push_back(x.get<std::int64_t>());
    }
    out.costs = VertexCosts(std::move(c));
  }
  if (j.contains("rho")) out.rho = RationalFromJson(j["rho"]);
  if (j.contains("zeta")) out.zeta = RationalFromJson(j["zeta"]);
  return out;
}

InstanceFile ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::int64_t n = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw std::invalid_argument("edge list needs an \"n m\" header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (std::int64_t i = 0; i < m; ++i) {
    Vertex u = 0;
    Vertex v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list ended after " + std::to_string(i) + " edges");
    edges.emplace_back(u, v);
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("edge list has trailing content");
  return InstanceFile{Graph(static_cast<int>(n), edges), std::nullopt, std::nullopt, std::nullopt};
}

InstanceFile ParseInstance(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? ParseInstanceJson(text) : ParseEdgeList(text);
  }
  throw std::invalid_argument("empty instance");
}

InstanceFile LoadInstance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return ParseInstance(buf.str());
}

Json InstanceToJson(const InstanceFile& inst) {
  Json j;
  j["n"] = inst.graph.num_vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : inst.graph.Edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (inst.costs) j["costs"] = inst.costs->values();
  if (inst.rho) {
    if (inst.rho->get_den() == 1) {
      j["rho"] = inst.rho->get_num().get_si();
    } else {
      j["rho"] = ToString(*inst.rho);
    }
  }
  if (inst.zeta) j["zeta"] = ToString(*inst.zeta);
  return j;
}

Json CutToJson(const Cut& cut) { return cut.Members(); }

Cut CutFromJson(int n, const Json& value) {
  if (!value.is_array()) throw std::invalid_argument("a cut is a list of vertices");
  std::vector<Vertex> members;
  for (const Json& v : value) {
    if (!v.is_number_integer()) throw std::invalid_argument("cut members must be integers");
    members.push_back(v.get<Vertex>());
  }
  return Cut::FromMembers(n, members);
}

Json DecompositionToJson(const CutDecomposition& d) {
  Json j;
  j["n"] = d.n;
  j["eps"] = ToString(d.eps);
  Json terms = Json::array();
  for (const CutTerm& t : d.terms) {
    terms.push_back({{"d", ToString(t.d)}, {"S", t.rows.Members()}, {"T", t.cols.Members()}});
  }
  j["terms"] = std::move(terms);
  j["width"] = d.width();
  j["error_bound"] = ToString(d.error_bound);
  j["certified"] = CertificationName(d.certified);
  j["frobenius_sq"] = ToString(d.frobenius_sq);
  j["meets_error_target"] = d.MeetsErrorTarget();
  j["meets_coefficient_bound"] = d.MeetsCoefficientBound();
  return j;
}

Json LargeReportToJson(const LargeReport& r) {
  Json j;
  j["eps0"] = ToString(r.eps0);
  j["decomposition_eps"] = ToString(r.decomposition_eps);
  j["kappa"] = ToString(r.kappa);
  j["nu"] = ToString(r.nu);
  j["repeats_planned"] = r.repeats_planned;
  j["repeats_run"] = r.repeats_run;
  j["widths"] = r.widths;
  Json errs = Json::array();
  for (const Rational& e : r.error_bounds) errs.push_back(ToString(e));
  j["error_bounds"] = std::move(errs);
  j["certified"] = CertificationName(r.certified);
  j["cells"] = r.cells;
  j["profiles_total"] = MpzString(r.profiles_total);
  j["profiles_evaluated"] = r.profiles_evaluated;
  j["profiles_pruned_by_size"] = MpzString(r.profiles_pruned_by_size);
  j["lp_feasible"] = r.lp_feasible;
  j["unsatisfiable"] = r.unsatisfiable;
  j["truncated"] = r.truncated;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

Json SmallReportToJson(const SmallReport& r) {
  Json j;
  j["alpha"] = ToString(r.alpha);
  j["k"] = ToString(r.k);
  j["sample_length"] = r.sample_length;
  j["samples"] = r.samples;
  j["distinct_max"] = r.distinct_max;
  j["partitions_evaluated"] = r.partitions_evaluated;
  j["truncated"] = r.truncated;
  j["dp_infeasible"] = r.dp_infeasible;
  j["out_of_window"] = r.out_of_window;
  j["branch_counts"] = {r.branch_counts[0], r.branch_counts[1], r.branch_counts[2]};
  return j;
}

Json CmcReportToJson(const CmcReport& r) {
  Json j;
  j["eps"] = ToString(r.eps);
  j["path"] = r.path;
  j["unbalanced"] = r.unbalanced;
  j["alpha"] = ToString(r.alpha);
  j["warnings"] = r.warnings;
  if (r.large) {
    Json l = LargeReportToJson(*r.large);
    l["found"] = r.large_found;
    if (r.large_found) l["cut_size"] = r.large_cut_size;
    j["large"] = std::move(l);
  }
  if (!r.large_error.empty()) j["large_error"] = r.large_error;
  if (r.small) {
    Json s = SmallReportToJson(*r.small);
    s["found"] = r.small_found;
    if (r.small_found) s["cut_size"] = r.small_cut_size;
    j["small"] = std::move(s);
  }
  if (!r.small_error.empty()) j["small_error"] = r.small_error;
  bool truncated = false;
  if (r.large) truncated = truncated || r.large->truncated;
  if (r.small) truncated = truncated || r.small->truncated;
  j["truncated"] = truncated;
  return j;
}

Json RatioResultToJson(ObjectiveKind kind, const RatioResult& r) {
  Json j;
  j["problem"] = ObjectiveName(kind);
  j["cut"] = CutToJson(r.cut);
  j["objective"] = ToString(r.value);
  j["from_single_vertex"] = r.from_single_vertex;
  if (r.schedule) {
    j["zeta"] = ToString(r.schedule->zeta);
    j["clamped_last"] = r.schedule->clamped_last;
  } else {
    j["schedule_note"] = r.schedule_note;
  }
  Json rungs = Json::array();
  for (const RungRecord& rung : r.rungs) {
    Json row;
    row["rho"] = ToString(rung.rho);
    row["attempted"] = rung.attempted;
    row["feasible"] = rung.feasible;
    if (rung.feasible) {
      row["cut_size"] = rung.cut_size;
      row["objective"] = ToString(*rung.objective);
      row["path"] = rung.path;
    }
    if (!rung.note.empty()) row["note"] = rung.note;
    rungs.push_back(std::move(row));
  }
  j["rungs"] = std::move(rungs);
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace densecut
