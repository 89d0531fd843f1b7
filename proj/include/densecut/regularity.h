#ifndef DENSECUT_REGULARITY_H_
#define DENSECUT_REGULARITY_H_

#include <cstdint>
#include <vector>

#include "densecut/graph.h"
#include "densecut/rational.h"

namespace densecut {

// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  static RationalMatrix Adjacency(const Graph& g);

  int size() const { return n_; }
  Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  // Sum of entries over rows × cols.
  Rational BlockSum(const Cut& rows, const Cut& cols) const;
  Rational FrobeniusSquared() const;
  // this -= d * chi_rows chi_cols^T
  void SubtractBlock(const Rational& d, const Cut& rows, const Cut& cols);

 private:
  int n_ = 0;
  std::vector<Rational> entries_;
};

inline constexpr int kExhaustiveThreshold = 18;

// A pair (S, T) together with the signed block sum and its magnitude.
struct CutNormWitness {
  Rational value;       // |signed_sum|
  Rational signed_sum;  // sum_{i in S, j in T} m_ij
  Cut rows;
  Cut cols;
};

// Exact cut norm: Gray-code walk over all row subsets S; for each S the best
// T takes the columns whose partial sums share the sign being maximized.
// O(2^n n). Throws TooLarge when n > threshold.
CutNormWitness CutNormExact(const RationalMatrix& m, int threshold = kExhaustiveThreshold);

// Certified lower bound by alternating row/column improvement from `restarts`
// random starting column sets (plus the all-columns start), both signs.
CutNormWitness CutNormLowerBound(const RationalMatrix& m, int restarts, std::uint64_t seed);

enum class DecompositionMode { kRandomized, kDeterministic };
enum class Certification { kExact, kLowerBound };

struct CutTerm {
  Rational d;
  Cut rows;  // S_t
  Cut cols;  // T_t
};

struct DecomposeOptions {
  int width_cap = 0;  // 0 selects ceil(27 / eps^2)
  int exhaustive_threshold = kExhaustiveThreshold;
  int effort = 16;  // local-search restarts above the threshold
};

struct CutDecomposition {
  int n = 0;
  Rational eps;
  std::vector<CutTerm> terms;
  // Cut norm of the residual: exact, or a local-search lower bound.
  Rational error_bound;
  Certification certified = Certification::kExact;
  Rational frobenius_sq;           // ||A||_F^2
  std::vector<Rational> residual_frobenius_sq;  // ||W||_F^2 before each term and at the end

  int width() const { return static_cast<int>(terms.size()); }
  Rational CoefficientLengthSquared() const;
  // Whether error_bound^2 <= eps^2 n^2 ||A||_F^2.
  bool MeetsErrorTarget() const;
  // Whether sum d_t^2 <= 27 ||A||_F^2 / n^2.
  bool MeetsCoefficientBound() const;
  // Sum of the emitted rank-one terms.
  RationalMatrix Approximation() const;
};

int DefaultWidthCap(const Rational& eps);

// Frieze–Kannan style greedy decomposition: while the residual W has a pair
// (S, T) with |W(S,T)| > eps n ||A||_F, append d = W(S,T)/(|S||T|) on S × T.
// Throws WidthExceeded if the cap is reached first.
CutDecomposition WeakRegularityDecompose(const RationalMatrix& a, const Rational& eps,
                                         DecompositionMode mode, std::uint64_t seed,
                                         const DecomposeOptions& options = {});
CutDecomposition WeakRegularityDecompose(const Graph& g, const Rational& eps,
                                         DecompositionMode mode, std::uint64_t seed,
                                         const DecomposeOptions& options = {});

// Vertices grouped by x_v = (1[v in S_1], 1[v in T_1], ..., 1[v in T_w]).
struct SignatureCell {
  std::vector<bool> signature;
  std::vector<Vertex> members;  // ascending
};

// Nonempty cells ordered by signature.
std::vector<SignatureCell> BasePartition(const CutDecomposition& d);

struct Cell {
  std::vector<bool> signature;
  std::int64_t bucket = 0;  // m with kappa*m <= c_v < kappa*(m+1)
  Rational delta;           // kappa * m
  std::vector<Vertex> members;
};

struct CellPartition {
  std::vector<Cell> cells;
  Rational kappa;
};

// Intersects each signature cell with the cost buckets floor(c_v / kappa);
// empty cells are dropped. Requires kappa > 0.
CellPartition RefineByCost(const std::vector<SignatureCell>& cells, const VertexCosts& c,
                           const Rational& kappa);

}  // namespace densecut

#endif  // DENSECUT_REGULARITY_H_
