#ifndef DENSECUT_DERAND_H_
#define DENSECUT_DERAND_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "densecut/cmc_small.h"
#include "densecut/graph.h"

namespace densecut {

struct SpectralCertificate {
  double lambda2 = 1.0;   // rayleigh + residual: upper end of the bracket
  double rayleigh = 1.0;  // Ritz value of the top non-trivial direction
  double residual = 0.0;  // ||M x - rayleigh x|| for unit x
  int iterations = 0;
  bool converged = false;
};

// d-regular graph given by its rotation map: port p of v leads to
// Neighbor(v, p), arriving there on port BackPort(v, p).
struct ExpanderGraph {
  int n = 0;
  int d = 0;
  std::vector<Vertex> next;     // n * d
  std::vector<int> back_port;   // n * d
  // Walk states are reported as label[v]; identity unless padded.
  std::vector<Vertex> label;
  int target_n = 0;
  double distortion = 0.0;
  SpectralCertificate spectrum;

  Vertex Neighbor(Vertex v, int p) const { return next[static_cast<std::size_t>(v) * d + p]; }
  int BackPort(Vertex v, int p) const { return back_port[static_cast<std::size_t>(v) * d + p]; }
  double lambda2() const { return spectrum.lambda2; }
};

// Z_m x Z_m with (x, y) -> (x +- 2y, y), (x +- (2y+1), y), (x, y +- 2x),
// (x, y +- (2x+1)). Repeated neighbors keep one edge and the spare ports
// become self-loops, so every vertex keeps degree 8.
ExpanderGraph MargulisExpander(int m);

// Second-largest eigenvalue of the normalized adjacency matrix, by block
// power iteration on (M + I)/2 orthogonal to the constant vector.
SpectralCertificate CertifyLambda2(const ExpanderGraph& e, double tolerance = 1e-10,
                                   int max_iterations = 20000);

// ceil(big/n)/floor(big/n) - 1.
double PadDistortion(int big, int n);

// Labels become v mod n. Requires e.n >= n.
ExpanderGraph PadToN(const ExpanderGraph& e, int n);

using WalkVisitor = std::function<void(std::span<const Vertex>)>;

// Every start vertex times every port sequence of length t, in lexicographic
// order. Throws WalkBudgetExceeded when n * d^t exceeds cap.
std::int64_t EnumerateWalks(const ExpanderGraph& e, int t, std::int64_t cap, const WalkVisitor& visit);

// `count` walks with uniform start and uniform ports.
void SeededWalks(const ExpanderGraph& e, std::int64_t t, std::int64_t count, std::uint64_t seed,
                 const WalkVisitor& visit);

// Walk visits as classification samples.
SampleSet WalkToSample(int n, std::span<const Vertex> walk);
std::vector<SampleSet> WalkSampleSets(const ExpanderGraph& e, int t, std::int64_t cap);
std::vector<SampleSet> WalkSampleSets(const ExpanderGraph& e, std::int64_t t, std::int64_t count,
                                      std::uint64_t seed);

// 2 (1 + u gap/10) * norm * exp(-gap u^2 t / 20), gap = 1 - lambda2.
double GillmanBound(double u, double gap, std::int64_t t, double norm);
// ||1/sqrt(pi)||_2 for the uniform stationary distribution on n vertices.
inline double UniformInverseRootNorm(int n) { return static_cast<double>(n); }

}  // namespace densecut

#endif  // DENSECUT_DERAND_H_
