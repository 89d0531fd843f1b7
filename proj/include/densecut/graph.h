#ifndef DENSECUT_GRAPH_H_
#define DENSECUT_GRAPH_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "densecut/rational.h"

namespace densecut {

using Vertex = int;

// A vertex subset of {0, ..., n-1} stored as a growable bitmask. Used both as
// the side L of a cut and as a generic vertex set.
class Cut {
 public:
  Cut() = default;
  explicit Cut(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static Cut FromMembers(int n, std::span<const Vertex> members);
  static Cut FromMask(int n, std::uint64_t mask);
  static Cut Full(int n);

  int universe() const { return n_; }
  bool Contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
  void Insert(Vertex v) { words_[v >> 6] |= 1ULL << (v & 63); }
  void Erase(Vertex v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }
  void Set(Vertex v, bool in) { in ? Insert(v) : Erase(v); }

  int Count() const;
  bool Empty() const { return Count() == 0; }
  std::vector<Vertex> Members() const;
  Cut Complement() const;

  Cut operator&(const Cut& other) const;
  Cut operator|(const Cut& other) const;
  Cut Minus(const Cut& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Cut& a, const Cut& b) = default;

  // Lexicographic order on the bit string b_0 b_1 ... b_{n-1}: at the first
  // vertex where the two sets differ, the set not containing it is smaller.
  friend bool LexLess(const Cut& a, const Cut& b);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Undirected simple graph with sorted neighbor lists, a degree table and a
// dense adjacency bit matrix for O(1) adjacency tests.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on self-loops, duplicate edges or
  // out-of-range endpoints.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return n_; }
  std::int64_t num_edges() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool Adjacent(Vertex u, Vertex v) const {
    return (rows_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1ULL;
  }
  // Bit row of u in the adjacency matrix (stride() words).
  std::span<const std::uint64_t> Row(Vertex u) const {
    return {rows_.data() + static_cast<std::size_t>(u) * stride_, stride_};
  }
  std::size_t stride() const { return stride_; }
  int MinDegree() const;
  std::vector<std::pair<Vertex, Vertex>> Edges() const;

  // |N(v) ∩ s|.
  int NeighborsIn(Vertex v, const Cut& s) const;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> rows_;
};

// Nonnegative integer vertex costs with cached total.
class VertexCosts {
 public:
  VertexCosts() = default;
  explicit VertexCosts(std::vector<std::int64_t> costs);

  // Costs c_v = n for every vertex (cardinality constraints).
  static VertexCosts Uniform(int n, std::int64_t value);
  // Costs c_v = d_v (volume constraints).
  static VertexCosts FromDegrees(const Graph& g);

  int size() const { return static_cast<int>(c_.size()); }
  std::int64_t operator[](Vertex v) const { return c_[v]; }
  std::int64_t total() const { return total_; }
  std::int64_t Min() const;
  std::int64_t Max() const;
  const std::vector<std::int64_t>& values() const { return c_; }

  // Whether 0 <= c_v <= n holds for every vertex.
  bool WithinProblemBounds() const;

 private:
  std::vector<std::int64_t> c_;
  std::int64_t total_ = 0;
};

struct DensityParams {
  Rational delta;  // min degree / n
  Rational c0;     // min cost / n
};

std::int64_t CutSize(const Graph& g, const Cut& s);
std::int64_t Volume(const Graph& g, const Cut& s);
std::int64_t Cost(const VertexCosts& c, const Cut& s);
// Number of edges with both endpoints in s.
std::int64_t InternalEdges(const Graph& g, const Cut& s);
DensityParams ComputeDensityParams(const Graph& g, const VertexCosts& c);

enum class ObjectiveKind {
  kUniformSparsestCut,   // Phi(S) = |E(S,S')| / (|S| |S'|)
  kEdgeExpansion,        // h(S) = |E(S,S')| / min(|S|, |S'|)
  kConductance,          // phi(S) = |E(S,S')| / min(vol S, vol S')
  kNormalizedCut,        // NC(S) = |E(S,S')| / (vol S vol S')
  kQuotientCut,          // q(S) = |E(S,S')| / min(c(S), c(S'))
  kProductSparsestCut,   // Phi_x(S) = |E(S,S')| / (c(S) c(S'))
};

// Short CLI names: usc, h, phi, nc, mqc, psc.
std::string_view ObjectiveName(ObjectiveKind kind);
ObjectiveKind ParseObjectiveKind(std::string_view name);
bool UsesCosts(ObjectiveKind kind);

// Exact numerator and denominator of the objective; denominator may be 0.
std::pair<std::int64_t, std::int64_t> ObjectiveFraction(ObjectiveKind kind, const Graph& g,
                                                        const VertexCosts& c, const Cut& s);

// Evaluates the objective exactly. Throws DegenerateCut if the denominator
// is zero. `c` is ignored for the unweighted kinds.
Rational Objective(ObjectiveKind kind, const Graph& g, const VertexCosts& c, const Cut& s);

}  // namespace densecut

#endif  // DENSECUT_GRAPH_H_
