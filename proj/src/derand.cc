#include "densecut/derand.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "densecut/errors.h"
#include "densecut/rng.h"

namespace densecut {

namespace {

constexpr int kMargulisDegree = 8;

int Mod(std::int64_t a, int m) {
  const std::int64_t r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// y = M x with M the normalized adjacency.
void ApplyWalk(const ExpanderGraph& e, const Eigen::MatrixXd& x, Eigen::MatrixXd& y) {
  y.setZero(x.rows(), x.cols());
  const double inv_d = 1.0 / e.d;
  for (Vertex v = 0; v < e.n; ++v) {
    for (int p = 0; p < e.d; ++p) y.row(v) += x.row(e.Neighbor(v, p));
    y.row(v) *= inv_d;
  }
}

void RemoveMean(Eigen::MatrixXd& x) {
  const Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
}

void Orthonormalize(Eigen::MatrixXd& x) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  x = qr.householderQ() * Eigen::MatrixXd::Identity(x.rows(), x.cols());
}

}  // namespace

ExpanderGraph MargulisExpander(int m) {
  if (m < 2) throw std::invalid_argument("margulis expander needs m >= 2");
  ExpanderGraph e;
  e.n = m * m;
  e.d = kMargulisDegree;
  e.next.assign(static_cast<std::size_t>(e.n) * e.d, -1);
  e.back_port.assign(static_cast<std::size_t>(e.n) * e.d, -1);

  auto id = [m](int x, int y) { return static_cast<Vertex>(x * m + y); };
  // Distinct neighbors first (in generator order), then self-loops.
  std::vector<std::vector<Vertex>> nbrs(e.n);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const Vertex v = id(x, y);
      const Vertex images[kMargulisDegree] = {
          id(Mod(x + 2 * y, m), y),     id(Mod(x - 2 * y, m), y),
          id(Mod(x + 2 * y + 1, m), y), id(Mod(x - 2 * y - 1, m), y),
          id(x, Mod(y + 2 * x, m)),     id(x, Mod(y - 2 * x, m)),
          id(x, Mod(y + 2 * x + 1, m)), id(x, Mod(y - 2 * x - 1, m)),
      };
      for (Vertex w : images) {
        if (w != v && std::find(nbrs[v].begin(), nbrs[v].end(), w) == nbrs[v].end()) nbrs[v].push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < e.n; ++v) {
    for (int p = 0; p < e.d; ++p) {
      const std::size_t slot = static_cast<std::size_t>(v) * e.d + p;
      if (p < static_cast<int>(nbrs[v].size())) {
        const Vertex w = nbrs[v][p];
        const auto it = std::find(nbrs[w].begin(), nbrs[w].end(), v);
        if (it == nbrs[w].end()) throw std::logic_error("margulis neighbor relation is not symmetric");
        e.next[slot] = w;
        e.back_port[slot] = static_cast<int>(it - nbrs[w].begin());
      } else {
        e.next[slot] = v;
        e.back_port[slot] = p;
      }
    }
  }
  e.label.resize(e.n);
  for (Vertex v = 0; v < e.n; ++v) e.label[v] = v;
  e.target_n = e.n;
  e.spectrum = CertifyLambda2(e);
  return e;
}

SpectralCertificate CertifyLambda2(const ExpanderGraph& e, double tolerance, int max_iterations) {
  SpectralCertificate cert;
  if (e.n < 2) return cert;
  const int block = std::min(12, e.n - 1);
  Rng rng(0x6c616d6264613221ULL);
  Eigen::MatrixXd x(e.n, block);
  for (int i = 0; i < e.n; ++i) {
    for (int j = 0; j < block; ++j) x(i, j) = rng.Uniform01() - 0.5;
  }
  RemoveMean(x);
  Orthonormalize(x);
  Eigen::MatrixXd y;
  for (int it = 1; it <= max_iterations; ++it) {
    ApplyWalk(e, x, y);
    x = 0.5 * (x + y);  // (M + I)/2 keeps the spectrum in [0, 1]
    RemoveMean(x);
    Orthonormalize(x);
    if (it % 10 != 0 && it != max_iterations) continue;

    ApplyWalk(e, x, y);
    const Eigen::MatrixXd h = x.transpose() * y;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (h + h.transpose()));
    x = x * es.eigenvectors().rowwise().reverse().eval();
    Eigen::VectorXd top = x.col(0);
    top -= Eigen::VectorXd::Constant(e.n, top.mean());
    top.normalize();
    Eigen::MatrixXd mt;
    ApplyWalk(e, top, mt);
    const double theta = top.dot(mt.col(0));
    cert.rayleigh = theta;
    cert.residual = (mt.col(0) - theta * top).norm();
    cert.iterations = it;
    if (cert.residual <= tolerance * std::max(1.0, std::abs(theta))) {
      cert.converged = true;
      break;
    }
  }
  cert.lambda2 = cert.rayleigh + cert.residual;
  return cert;
}

double PadDistortion(int big, int n) {
  if (n < 1 || big < n) throw std::invalid_argument("padding needs 1 <= n <= e.n");
  const int hi = (big + n - 1) / n;
  const int lo = big / n;
  return static_cast<double>(hi) / lo - 1.0;
}

ExpanderGraph PadToN(const ExpanderGraph& e, int n) {
  ExpanderGraph out = e;
  out.distortion = PadDistortion(e.n, n);
  out.target_n = n;
  for (Vertex v = 0; v < e.n; ++v) out.label[v] = v % n;
  return out;
}

std::int64_t EnumerateWalks(const ExpanderGraph& e, int t, std::int64_t cap, const WalkVisitor& visit) {
  if (t < 1) throw std::invalid_argument("walk length must be >= 1");
  std::int64_t total = e.n;
  for (int i = 0; i < t; ++i) {
    if (total > cap / e.d) {
      throw WalkBudgetExceeded("enumerating n * d^t walks with t = " + std::to_string(t) + " exceeds the cap " +
                               std::to_string(cap));
    }
    total *= e.d;
  }
  if (total > cap) throw WalkBudgetExceeded("walk count exceeds the cap " + std::to_string(cap));
  std::vector<int> ports(t, 0);
  std::vector<Vertex> path(t);
  std::int64_t count = 0;
  for (Vertex start = 0; start < e.n; ++start) {
    std::fill(ports.begin(), ports.end(), 0);
    for (;;) {
      Vertex v = start;
      for (int i = 0; i < t; ++i) {
        v = e.Neighbor(v, ports[i]);
        path[i] = e.label[v];
      }
      visit(path);
      ++count;
      int i = t - 1;
      while (i >= 0 && ++ports[i] == e.d) ports[i--] = 0;
      if (i < 0) break;
    }
  }
  return count;
}

void SeededWalks(const ExpanderGraph& e, std::int64_t t, std::int64_t count, std::uint64_t seed,
                 const WalkVisitor& visit) {
  if (t < 1) throw std::invalid_argument("walk length must be >= 1");
  Rng rng(seed);
  std::vector<Vertex> path(t);
  for (std::int64_t w = 0; w < count; ++w) {
    Vertex v = static_cast<Vertex>(rng.Below(e.n));
    for (std::int64_t i = 0; i < t; ++i) {
      v = e.Neighbor(v, static_cast<int>(rng.Below(e.d)));
      path[i] = e.label[v];
    }
    visit(path);
  }
}

SampleSet WalkToSample(int n, std::span<const Vertex> walk) {
  SampleSet s;
  s.n = n;
  s.occurrences.assign(walk.begin(), walk.end());
  return s;
}

std::vector<SampleSet> WalkSampleSets(const ExpanderGraph& e, int t, std::int64_t cap) {
  std::vector<SampleSet> out;
  EnumerateWalks(e, t, cap, [&](std::span<const Vertex> w) { out.push_back(WalkToSample(e.target_n, w)); });
  return out;
}

std::vector<SampleSet> WalkSampleSets(const ExpanderGraph& e, std::int64_t t, std::int64_t count,
                                      std::uint64_t seed) {
  std::vector<SampleSet> out;
  out.reserve(count);
  SeededWalks(e, t, count, seed, [&](std::span<const Vertex> w) { out.push_back(WalkToSample(e.target_n, w)); });
  return out;
}

double GillmanBound(double u, double gap, std::int64_t t, double norm) {
  return 2.0 * (1.0 + u * gap / 10.0) * norm * std::exp(-gap * u * u * static_cast<double>(t) / 20.0);
}

}  // namespace densecut
