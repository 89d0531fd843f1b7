#include "densecut/regularity.h"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "densecut/errors.h"
#include "densecut/rng.h"

namespace densecut {

RationalMatrix RationalMatrix::Adjacency(const Graph& g) {
  RationalMatrix m(g.num_vertices());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) m.at(u, v) = 1;
  }
  return m;
}

Rational RationalMatrix::BlockSum(const Cut& rows, const Cut& cols) const {
  Rational total = 0;
  const auto col_list = cols.Members();
  for (Vertex i : rows.Members()) {
    for (Vertex j : col_list) total += at(i, j);
  }
  return total;
}

Rational RationalMatrix::FrobeniusSquared() const {
  Rational total = 0;
  for (const Rational& x : entries_) total += x * x;
  return total;
}

void RationalMatrix::SubtractBlock(const Rational& d, const Cut& rows, const Cut& cols) {
  const auto col_list = cols.Members();
  for (Vertex i : rows.Members()) {
    for (Vertex j : col_list) at(i, j) -= d;
  }
}

namespace {

// The matrix scaled by the lcm of its denominators, as integers.
struct ScaledMatrix {
  int n = 0;
  mpz_class scale;
  std::vector<mpz_class> big;
  std::vector<std::int64_t> small;  // filled when every block sum fits
  bool use_small = false;
};

ScaledMatrix Scale(const RationalMatrix& m) {
  ScaledMatrix s;
  s.n = m.size();
  s.scale = 1;
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      mpz_lcm(s.scale.get_mpz_t(), s.scale.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    }
  }
  s.big.resize(static_cast<std::size_t>(s.n) * s.n);
  mpz_class max_abs = 0;
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      const Rational& x = m.at(i, j);
      mpz_class v = x.get_num() * (s.scale / x.get_den());
      if (abs(v) > max_abs) max_abs = abs(v);
      s.big[static_cast<std::size_t>(i) * s.n + j] = std::move(v);
    }
  }
  mpz_class worst = max_abs * s.n * s.n;
  if (worst < (mpz_class(1) << 62)) {
    s.use_small = true;
    s.small.reserve(s.big.size());
    for (const auto& v : s.big) s.small.push_back(v.get_si());
  }
  return s;
}

template <typename T>
T FromInt(long x) {
  return T(x);
}

template <typename T>
mpz_class ToMpz(const T& x) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    return mpz_class(static_cast<long>(x));
  } else {
    return x;
  }
}

struct RawWitness {
  mpz_class signed_sum;  // scaled
  std::vector<char> rows;
  std::vector<char> cols;
};

// Columns whose sums over `rows` are strictly positive (sign > 0) or
// strictly negative (sign < 0).
template <typename T>
std::vector<char> BestColumns(int n, const std::vector<T>& a, const std::vector<char>& rows, int sign,
                              T* total) {
  std::vector<T> col(n, FromInt<T>(0));
  for (int i = 0; i < n; ++i) {
    if (!rows[i]) continue;
    for (int j = 0; j < n; ++j) col[j] += a[static_cast<std::size_t>(i) * n + j];
  }
  std::vector<char> pick(n, 0);
  *total = FromInt<T>(0);
  for (int j = 0; j < n; ++j) {
    if ((sign > 0 && col[j] > 0) || (sign < 0 && col[j] < 0)) {
      pick[j] = 1;
      *total += col[j];
    }
  }
  return pick;
}

template <typename T>
RawWitness Exhaustive(int n, const std::vector<T>& a) {
  std::vector<T> col(n, FromInt<T>(0));
  T best = FromInt<T>(0);
  std::uint64_t best_rows = 0;
  int best_sign = 1;
  std::uint64_t gray = 0;
  T pos = FromInt<T>(0);
  T neg = FromInt<T>(0);
  const std::uint64_t limit = n == 0 ? 1 : (1ULL << n);
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int r = std::countr_zero(step);
    gray ^= 1ULL << r;
    const T* row = &a[static_cast<std::size_t>(r) * n];
    if ((gray >> r) & 1ULL) {
      for (int j = 0; j < n; ++j) col[j] += row[j];
    } else {
      for (int j = 0; j < n; ++j) col[j] -= row[j];
    }
    pos = 0;
    neg = 0;
    for (int j = 0; j < n; ++j) {
      if (col[j] > 0) {
        pos += col[j];
      } else {
        neg -= col[j];
      }
    }
    if (pos > best) {
      best = pos;
      best_rows = gray;
      best_sign = 1;
    }
    if (neg > best) {
      best = neg;
      best_rows = gray;
      best_sign = -1;
    }
  }
  RawWitness w;
  w.rows.assign(n, 0);
  for (int i = 0; i < n; ++i) w.rows[i] = static_cast<char>((best_rows >> i) & 1ULL);
  T total;
  w.cols = BestColumns(n, a, w.rows, best_sign, &total);
  if (total == 0) {
    w.rows.assign(n, 0);
    w.cols.assign(n, 0);
  }
  w.signed_sum = ToMpz(total);
  return w;
}

// Alternating improvement from one starting column set for one sign.
template <typename T>
void Climb(int n, const std::vector<T>& a, std::vector<char> cols, int sign, RawWitness* best,
           mpz_class* best_abs) {
  std::vector<char> rows(n, 0);
  T current = FromInt<T>(0);
  bool first = true;
  for (int round = 0; round < 4 * n + 8; ++round) {
    // Rows given columns.
    std::vector<T> row_sum(n, FromInt<T>(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (cols[j]) row_sum[i] += a[static_cast<std::size_t>(i) * n + j];
      }
    }
    T value = FromInt<T>(0);
    for (int i = 0; i < n; ++i) {
      rows[i] = (sign > 0 && row_sum[i] > 0) || (sign < 0 && row_sum[i] < 0);
      if (rows[i]) value += row_sum[i];
    }
    T col_value;
    cols = BestColumns(n, a, rows, sign, &col_value);
    const T magnitude = sign > 0 ? col_value : T(-col_value);
    if (!first && !(magnitude > current)) break;
    current = magnitude;
    first = false;
  }
  mpz_class abs_value = ToMpz(current);
  if (abs_value > *best_abs) {
    *best_abs = abs_value;
    T check;
    best->rows = rows;
    best->cols = BestColumns(n, a, rows, sign, &check);
    best->signed_sum = ToMpz(check);
  }
}

template <typename T>
RawWitness LocalSearch(int n, const std::vector<T>& a, int restarts, std::uint64_t seed) {
  RawWitness best;
  best.rows.assign(n, 0);
  best.cols.assign(n, 0);
  best.signed_sum = 0;
  mpz_class best_abs = 0;
  Rng rng(seed);
  for (int start = 0; start <= restarts; ++start) {
    std::vector<char> cols(n, 1);
    if (start > 0) {
      for (int j = 0; j < n; ++j) cols[j] = static_cast<char>(rng.Below(2));
    }
    Climb(n, a, cols, 1, &best, &best_abs);
    Climb(n, a, cols, -1, &best, &best_abs);
  }
  return best;
}

CutNormWitness Finish(const ScaledMatrix& s, const RawWitness& raw) {
  CutNormWitness w;
  w.signed_sum = Rational(raw.signed_sum, s.scale);
  w.signed_sum.canonicalize();
  w.value = abs(w.signed_sum);
  w.rows = Cut(s.n);
  w.cols = Cut(s.n);
  for (int i = 0; i < s.n; ++i) {
    if (raw.rows[i]) w.rows.Insert(i);
    if (raw.cols[i]) w.cols.Insert(i);
  }
  return w;
}

}  // namespace

CutNormWitness CutNormExact(const RationalMatrix& m, int threshold) {
  if (m.size() > threshold || m.size() > 62) {
    throw TooLarge("exact cut norm limited to n <= " + std::to_string(threshold) + ", got " +
                   std::to_string(m.size()));
  }
  ScaledMatrix s = Scale(m);
  RawWitness raw = s.use_small ? Exhaustive(s.n, s.small) : Exhaustive(s.n, s.big);
  return Finish(s, raw);
}

CutNormWitness CutNormLowerBound(const RationalMatrix& m, int restarts, std::uint64_t seed) {
  ScaledMatrix s = Scale(m);
  RawWitness raw = s.use_small ? LocalSearch(s.n, s.small, restarts, seed)
                               : LocalSearch(s.n, s.big, restarts, seed);
  return Finish(s, raw);
}

Rational CutDecomposition::CoefficientLengthSquared() const {
  Rational total = 0;
  for (const auto& t : terms) total += t.d * t.d;
  return total;
}

bool CutDecomposition::MeetsErrorTarget() const {
  return error_bound * error_bound <= eps * eps * n * n * frobenius_sq;
}

bool CutDecomposition::MeetsCoefficientBound() const {
  if (n == 0) return terms.empty();
  return CoefficientLengthSquared() * n * n <= 27 * frobenius_sq;
}

RationalMatrix CutDecomposition::Approximation() const {
  RationalMatrix m(n);
  for (const auto& t : terms) m.SubtractBlock(-t.d, t.rows, t.cols);
  return m;
}

int DefaultWidthCap(const Rational& eps) {
  return static_cast<int>(CeilToInt(Rational(27) / (eps * eps)));
}

CutDecomposition WeakRegularityDecompose(const RationalMatrix& a, const Rational& eps,
                                         DecompositionMode mode, std::uint64_t seed,
                                         const DecomposeOptions& options) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("decomposition eps must lie in (0, 1)");
  const int n = a.size();
  const int cap = options.width_cap > 0 ? options.width_cap : DefaultWidthCap(eps);
  const bool exact = n <= options.exhaustive_threshold;

  CutDecomposition d;
  d.n = n;
  d.eps = eps;
  d.certified = exact ? Certification::kExact : Certification::kLowerBound;
  d.frobenius_sq = a.FrobeniusSquared();
  const Rational target_sq = eps * eps * n * n * d.frobenius_sq;

  RationalMatrix w = a;
  for (int iteration = 0;; ++iteration) {
    d.residual_frobenius_sq.push_back(w.FrobeniusSquared());
    const std::uint64_t search_seed = mode == DecompositionMode::kDeterministic
                                          ? DeriveSeed(0, iteration)
                                          : DeriveSeed(seed, iteration);
    CutNormWitness witness = exact ? CutNormExact(w, options.exhaustive_threshold)
                                   : CutNormLowerBound(w, options.effort, search_seed);
    if (witness.value * witness.value <= target_sq) {
      d.error_bound = witness.value;
      return d;
    }
    if (d.width() >= cap) {
      throw WidthExceeded("width cap " + std::to_string(cap) + " reached with residual cut norm " +
                          ToString(witness.value));
    }
    CutTerm term;
    term.d = witness.signed_sum / (witness.rows.Count() * witness.cols.Count());
    term.rows = witness.rows;
    term.cols = witness.cols;
    w.SubtractBlock(term.d, term.rows, term.cols);
    d.terms.push_back(std::move(term));
  }
}

CutDecomposition WeakRegularityDecompose(const Graph& g, const Rational& eps, DecompositionMode mode,
                                         std::uint64_t seed, const DecomposeOptions& options) {
  return WeakRegularityDecompose(RationalMatrix::Adjacency(g), eps, mode, seed, options);
}

std::vector<SignatureCell> BasePartition(const CutDecomposition& d) {
  std::map<std::vector<bool>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < d.n; ++v) {
    std::vector<bool> sig;
    sig.reserve(2 * d.terms.size());
    for (const auto& t : d.terms) {
      sig.push_back(t.rows.Contains(v));
      sig.push_back(t.cols.Contains(v));
    }
    groups[std::move(sig)].push_back(v);
  }
  std::vector<SignatureCell> cells;
  cells.reserve(groups.size());
  for (auto& [sig, members] : groups) cells.push_back({sig, std::move(members)});
  return cells;
}

CellPartition RefineByCost(const std::vector<SignatureCell>& cells, const VertexCosts& c,
                           const Rational& kappa) {
  if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
  CellPartition out;
  out.kappa = kappa;
  for (const auto& cell : cells) {
    std::map<std::int64_t, std::vector<Vertex>> buckets;
    for (Vertex v : cell.members) buckets[FloorToInt(Rational(c[v]) / kappa)].push_back(v);
    for (auto& [m, members] : buckets) {
      Cell refined;
      refined.signature = cell.signature;
      refined.bucket = m;
      refined.delta = kappa * m;
      refined.members = std::move(members);
      out.cells.push_back(std::move(refined));
    }
  }
  return out;
}

}  // namespace densecut
