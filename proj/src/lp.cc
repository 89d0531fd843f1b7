#include "densecut/lp.h"

#include <sstream>
#include <stdexcept>

namespace densecut {

CellLp BuildCellLp(const CellPartition& p, const std::vector<Rational>& fbar,
                   const std::vector<Rational>& gbar, const Rational& nu, const Rational& rho,
                   const Rational& zeta) {
  if (fbar.size() != gbar.size()) throw std::invalid_argument("fbar and gbar lengths differ");
  const int w = static_cast<int>(fbar.size());
  CellLp lp;
  lp.num_vars = static_cast<int>(p.cells.size());
  for (const auto& cell : p.cells) {
    if (static_cast<int>(cell.signature.size()) != 2 * w) {
      throw std::invalid_argument("cell signature does not match profile width");
    }
    lp.upper.push_back(Rational(static_cast<long>(cell.members.size())));
  }
  for (int t = 0; t < w; ++t) {
    LinearRow f;
    f.label = "f" + std::to_string(t + 1);
    f.coeffs.assign(lp.num_vars, 0);
    LinearRow g;
    g.label = "g" + std::to_string(t + 1);
    g.coeffs.assign(lp.num_vars, 0);
    Rational t_size = 0;
    for (int i = 0; i < lp.num_vars; ++i) {
      if (p.cells[i].signature[2 * t]) f.coeffs[i] = 1;
      if (p.cells[i].signature[2 * t + 1]) {
        g.coeffs[i] = 1;
        t_size += lp.upper[i];
      }
    }
    f.lo = fbar[t];
    f.hi = fbar[t] + nu;
    // gbar <= |T| - sum x <= gbar + nu  <=>  |T| - gbar - nu <= sum x <= |T| - gbar
    g.lo = t_size - gbar[t] - nu;
    g.hi = t_size - gbar[t];
    lp.rows.push_back(std::move(f));
    lp.rows.push_back(std::move(g));
  }
  LinearRow lower;
  lower.label = "cost_lo";
  lower.has_hi = false;
  lower.lo = rho * (1 - zeta);
  LinearRow upper;
  upper.label = "cost_hi";
  upper.has_lo = false;
  upper.hi = rho * (1 + zeta);
  for (const auto& cell : p.cells) {
    lower.coeffs.push_back(cell.delta + p.kappa);
    upper.coeffs.push_back(cell.delta);
  }
  lp.rows.push_back(std::move(lower));
  lp.rows.push_back(std::move(upper));
  return lp;
}

namespace {

// Dense tableau for  A x + s = b  (rows already sign-normalized so b >= 0),
// with artificials on rows whose slack enters negatively.
class Phase1 {
 public:
  Phase1(int num_vars, const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b)
      : nv_(num_vars), m_(static_cast<int>(a.size())) {
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i) {
      if (b[i] < 0) art_rows.push_back(i);
    }
    num_cols_ = nv_ + m_ + static_cast<int>(art_rows.size());
    rhs_col_ = num_cols_;
    tab_.assign(m_, std::vector<Rational>(num_cols_ + 1));
    basis_.assign(m_, -1);
    std::vector<int> art_of_row(m_, -1);
    for (std::size_t k = 0; k < art_rows.size(); ++k) art_of_row[art_rows[k]] = nv_ + m_ + static_cast<int>(k);
    for (int i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (int j = 0; j < nv_; ++j) tab_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
      tab_[i][nv_ + i] = flip ? -1 : 1;
      tab_[i][rhs_col_] = flip ? Rational(-b[i]) : b[i];
      if (flip) {
        tab_[i][art_of_row[i]] = 1;
        basis_[i] = art_of_row[i];
      } else {
        basis_[i] = nv_ + i;
      }
    }
    // Reduced costs of the phase-1 objective sum of artificials.
    cost_.assign(num_cols_ + 1, 0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= nv_ + m_) {
        for (int j = 0; j <= num_cols_; ++j) cost_[j] -= tab_[i][j];
      }
    }
    for (int j = nv_ + m_; j < num_cols_; ++j) cost_[j] += 1;
  }

  // Returns whether the artificial objective reaches zero.
  bool Run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = tab_[i][rhs_col_] / tab_[i][enter];
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      // Unbounded phase-1 is impossible (objective bounded below by 0).
      if (leave < 0) break;
      Pivot(leave, enter);
    }
    // cost_[rhs] holds minus the objective value.
    return cost_[rhs_col_] == 0;
  }

  std::vector<Rational> Solution() const {
    std::vector<Rational> x(nv_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < nv_) x[basis_[i]] = tab_[i][rhs_col_];
    }
    return x;
  }

 private:
  void Pivot(int r, int c) {
    const Rational inv = 1 / tab_[r][c];
    for (int j = 0; j <= num_cols_; ++j) {
      if (tab_[r][j] != 0) tab_[r][j] *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (int j = 0; j <= num_cols_; ++j) {
        if (tab_[r][j] != 0) row[j] -= factor * tab_[r][j];
      }
    };
    for (int i = 0; i < m_; ++i) {
      if (i != r) eliminate(tab_[i]);
    }
    eliminate(cost_);
    basis_[r] = c;
  }

  int nv_;
  int m_;
  int num_cols_ = 0;
  int rhs_col_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> cost_;
  std::vector<int> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> LpFeasible(const CellLp& lp) {
  const int nv = lp.num_vars;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int j = 0; j < nv; ++j) {
    if (lp.upper[j] < 0) return std::nullopt;
    std::vector<Rational> row(nv);
    row[j] = 1;
    a.push_back(std::move(row));
    b.push_back(lp.upper[j]);
  }
  for (const auto& row : lp.rows) {
    if (row.has_lo && row.has_hi && row.lo > row.hi) return std::nullopt;
    if (row.has_hi) {
      a.push_back(row.coeffs);
      b.push_back(row.hi);
    }
    if (row.has_lo) {
      std::vector<Rational> neg(nv);
      for (int j = 0; j < nv; ++j) neg[j] = -row.coeffs[j];
      a.push_back(std::move(neg));
      b.push_back(-row.lo);
    }
  }
  Phase1 simplex(nv, a, b);
  if (!simplex.Run()) return std::nullopt;
  return simplex.Solution();
}

bool SatisfiesAll(const CellLp& lp, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lp.num_vars) return false;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (x[j] < 0 || x[j] > lp.upper[j]) return false;
  }
  for (const auto& row : lp.rows) {
    Rational total = 0;
    for (int j = 0; j < lp.num_vars; ++j) total += row.coeffs[j] * x[j];
    if (row.has_lo && total < row.lo) return false;
    if (row.has_hi && total > row.hi) return false;
  }
  return true;
}

std::string DebugString(const CellLp& lp) {
  std::ostringstream out;
  out << "vars " << lp.num_vars << "\n";
  for (int j = 0; j < lp.num_vars; ++j) out << "  0 <= x" << j << " <= " << ToString(lp.upper[j]) << "\n";
  for (const auto& row : lp.rows) {
    out << "  " << row.label << ": ";
    if (row.has_lo) out << ToString(row.lo) << " <= ";
    bool first = true;
    for (int j = 0; j < lp.num_vars; ++j) {
      if (row.coeffs[j] == 0) continue;
      out << (first ? "" : " + ") << ToString(row.coeffs[j]) << "*x" << j;
      first = false;
    }
    if (first) out << "0";
    if (row.has_hi) out << " <= " << ToString(row.hi);
    out << "\n";
  }
  return out.str();
}

}  // namespace densecut
