#include "densecut/graph.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "densecut/errors.h"

namespace densecut {

Cut Cut::FromMembers(int n, std::span<const Vertex> members) {
  Cut s(n);
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, n)");
    s.Insert(v);
  }
  return s;
}

Cut Cut::FromMask(int n, std::uint64_t mask) {
  Cut s(n);
  if (n > 0) s.words_[0] = n >= 64 ? mask : (mask & ((1ULL << n) - 1));
  return s;
}

Cut Cut::Full(int n) { return Cut(n).Complement(); }

int Cut::Count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::vector<Vertex> Cut::Members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Cut Cut::Complement() const {
  Cut out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (n_ % 64 != 0 && !out.words_.empty()) out.words_.back() &= (1ULL << (n_ % 64)) - 1;
  return out;
}

Cut Cut::operator&(const Cut& other) const {
  Cut out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

Cut Cut::operator|(const Cut& other) const {
  Cut out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

Cut Cut::Minus(const Cut& other) const {
  Cut out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~other.words_[i];
  return out;
}

bool LexLess(const Cut& a, const Cut& b) {
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      std::uint64_t lowest = diff & (~diff + 1);
      return (b.words_[i] & lowest) != 0;
    }
  }
  return false;
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(n), stride_((static_cast<std::size_t>(n) + 63) / 64), adjacency_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * stride_, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0, n)");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (Adjacent(u, v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    rows_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= 1ULL << (v & 63);
    rows_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= 1ULL << (u & 63);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++m_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::MinDegree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::Edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::NeighborsIn(Vertex v, const Cut& s) const {
  auto row = Row(v);
  const auto& words = s.words();
  int total = 0;
  for (std::size_t i = 0; i < stride_; ++i) total += std::popcount(row[i] & words[i]);
  return total;
}

VertexCosts::VertexCosts(std::vector<std::int64_t> costs) : c_(std::move(costs)) {
  for (std::int64_t value : c_) {
    if (value < 0) throw std::invalid_argument("vertex costs must be nonnegative");
    total_ += value;
  }
}

VertexCosts VertexCosts::Uniform(int n, std::int64_t value) {
  return VertexCosts(std::vector<std::int64_t>(n, value));
}

VertexCosts VertexCosts::FromDegrees(const Graph& g) {
  std::vector<std::int64_t> c(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) c[v] = g.degree(v);
  return VertexCosts(std::move(c));
}

std::int64_t VertexCosts::Min() const {
  return c_.empty() ? 0 : *std::min_element(c_.begin(), c_.end());
}

std::int64_t VertexCosts::Max() const {
  return c_.empty() ? 0 : *std::max_element(c_.begin(), c_.end());
}

bool VertexCosts::WithinProblemBounds() const {
  const auto n = static_cast<std::int64_t>(c_.size());
  return std::all_of(c_.begin(), c_.end(), [n](std::int64_t x) { return x >= 0 && x <= n; });
}

std::int64_t CutSize(const Graph& g, const Cut& s) {
  const Cut outside = s.Complement();
  std::int64_t total = 0;
  for (Vertex v : s.Members()) total += g.NeighborsIn(v, outside);
  return total;
}

std::int64_t Volume(const Graph& g, const Cut& s) {
  std::int64_t total = 0;
  for (Vertex v : s.Members()) total += g.degree(v);
  return total;
}

std::int64_t Cost(const VertexCosts& c, const Cut& s) {
  std::int64_t total = 0;
  for (Vertex v : s.Members()) total += c[v];
  return total;
}

std::int64_t InternalEdges(const Graph& g, const Cut& s) {
  std::int64_t twice = 0;
  for (Vertex v : s.Members()) twice += g.NeighborsIn(v, s);
  return twice / 2;
}

DensityParams ComputeDensityParams(const Graph& g, const VertexCosts& c) {
  const int n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("density parameters need n >= 1");
  return DensityParams{MakeRational(g.MinDegree(), n), MakeRational(c.size() == 0 ? 0 : c.Min(), n)};
}

std::string_view ObjectiveName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kUniformSparsestCut: return "usc";
    case ObjectiveKind::kEdgeExpansion: return "h";
    case ObjectiveKind::kConductance: return "phi";
    case ObjectiveKind::kNormalizedCut: return "nc";
    case ObjectiveKind::kQuotientCut: return "mqc";
    case ObjectiveKind::kProductSparsestCut: return "psc";
  }
  return "?";
}

ObjectiveKind ParseObjectiveKind(std::string_view name) {
  for (auto kind : {ObjectiveKind::kUniformSparsestCut, ObjectiveKind::kEdgeExpansion,
                    ObjectiveKind::kConductance, ObjectiveKind::kNormalizedCut,
                    ObjectiveKind::kQuotientCut, ObjectiveKind::kProductSparsestCut}) {
    if (ObjectiveName(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
}

bool UsesCosts(ObjectiveKind kind) {
  return kind == ObjectiveKind::kQuotientCut || kind == ObjectiveKind::kProductSparsestCut;
}

std::pair<std::int64_t, std::int64_t> ObjectiveFraction(ObjectiveKind kind, const Graph& g,
                                                        const VertexCosts& c, const Cut& s) {
  const std::int64_t cut = CutSize(g, s);
  const std::int64_t size_in = s.Count();
  const std::int64_t size_out = g.num_vertices() - size_in;
  switch (kind) {
    case ObjectiveKind::kUniformSparsestCut:
      return {cut, size_in * size_out};
    case ObjectiveKind::kEdgeExpansion:
      return {cut, std::min(size_in, size_out)};
    case ObjectiveKind::kConductance: {
      const std::int64_t vol = Volume(g, s);
      return {cut, std::min(vol, 2 * g.num_edges() - vol)};
    }
    case ObjectiveKind::kNormalizedCut: {
      const std::int64_t vol = Volume(g, s);
      return {cut, vol * (2 * g.num_edges() - vol)};
    }
    case ObjectiveKind::kQuotientCut: {
      const std::int64_t cost = Cost(c, s);
      return {cut, std::min(cost, c.total() - cost)};
    }
    case ObjectiveKind::kProductSparsestCut: {
      const std::int64_t cost = Cost(c, s);
      return {cut, cost * (c.total() - cost)};
    }
  }
  return {0, 0};
}

Rational Objective(ObjectiveKind kind, const Graph& g, const VertexCosts& c, const Cut& s) {
  auto [num, den] = ObjectiveFraction(kind, g, c, s);
  if (den == 0) {
    throw DegenerateCut(std::string(ObjectiveName(kind)) + " has a zero denominator on this cut");
  }
  return MakeRational(num, den);
}

}  // namespace densecut
