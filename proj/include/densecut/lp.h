#ifndef DENSECUT_LP_H_
#define DENSECUT_LP_H_

#include <optional>
#include <string>
#include <vector>

#include "densecut/rational.h"
#include "densecut/regularity.h"

namespace densecut {

// lo <= sum_j coeffs[j] x_j <= hi; either side may be absent.
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational lo;
  Rational hi;
  bool has_lo = true;
  bool has_hi = true;
  std::string label;
};

// Feasibility problem over x_P in [0, upper_P].
struct CellLp {
  int num_vars = 0;
  std::vector<Rational> upper;
  std::vector<LinearRow> rows;
};

// One variable per cell. For t = 1..w:
//   fbar_t <= sum_{P in S_t} x_P <= fbar_t + nu
//   gbar_t <= sum_{P in T_t} (|P| - x_P) <= gbar_t + nu
// plus rho(1-zeta) <= sum (Delta_P + kappa) x_P and sum Delta_P x_P <= rho(1+zeta).
// The T_t rows are stored with the constant sum |P| moved into the bounds.
CellLp BuildCellLp(const CellPartition& p, const std::vector<Rational>& fbar,
                   const std::vector<Rational>& gbar, const Rational& nu, const Rational& rho,
                   const Rational& zeta);

// Exact phase-1 simplex, Bland's rule. Returns a basic feasible point or
// nullopt when the constraints are infeasible.
std::optional<std::vector<Rational>> LpFeasible(const CellLp& lp);

// Whether x satisfies every bound and row exactly.
bool SatisfiesAll(const CellLp& lp, const std::vector<Rational>& x);

std::string DebugString(const CellLp& lp);

}  // namespace densecut

#endif  // DENSECUT_LP_H_
