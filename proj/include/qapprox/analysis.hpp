#pragma once

// Moduli of continuity and smoothness on uniform grids, the rate constants
// delta_n and phi_n, a K-functional estimate, and numerical checkers for the
// pointwise rate, Lipschitz, maximal-function and local approximation bounds.
//
// All suprema are grid suprema.  Grids covering the operator's node range are
// refined to at least 20 points per modulus argument.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qapprox/operators.hpp"

namespace qapprox {

class GridSpec {
 public:
  GridSpec(double lo, double hi, int points);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  int points() const noexcept { return points_; }
  double spacing() const noexcept { return (hi_ - lo_) / (points_ - 1); }
  double at(int i) const noexcept;
  std::vector<double> values() const;

 private:
  double lo_;
  double hi_;
  int points_;
};

// Throws DomainError when the grid leaves the operator's guarded domain.
void require_within(const GridSpec& grid, const OperatorInstance& op);

// Grid over [0, max(grid.hi, node_bound)] with spacing at most
// min(grid.spacing(), resolution), capped at 40001 points.
GridSpec node_grid(const OperatorInstance& op, const GridSpec& grid,
                   double resolution);

struct BoundPoint {
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct BoundReport {
  std::string theorem;
  std::vector<BoundPoint> points;
  double sup_lhs = 0.0;
  double sup_rhs = 0.0;
  double sup_ratio = 0.0;
  double min_margin = 0.0;
  bool pass = false;
  // Additional named scalars for the summary record, in output order.
  std::vector<std::pair<std::string, double>> extras;

  // Fills the aggregate fields; pass iff min margin >= -1e-9 max(1, sup rhs).
  static BoundReport assemble(std::string theorem,
                              std::vector<BoundPoint> points,
                              std::vector<std::pair<std::string, double>> extras);

  double extra(const std::string& key) const;
  std::string summary_line() const;
  // Header "x,lhs,rhs,margin", one row per point, then "# summary: ...".
  void write_csv(std::ostream& out) const;
};

double modulus(const TargetFunction& f, double delta, const GridSpec& grid);

// sup over |x - y| <= delta of |f(x) - f(y)|/(1 + x^{2+lambda}).
double weighted_modulus(const TargetFunction& f, double delta, double lambda,
                        const GridSpec& grid);

// sup over h in (0, delta] (64 steps) and grid x of
// |f(x + 2h) - 2 f(x + h) + f(x)|.
double second_modulus(const TargetFunction& f, double delta,
                      const GridSpec& grid);

// sup over grid t != x of |f(t) - f(x)|/|t - x|^alpha.
double lipschitz_maximal(const TargetFunction& f, double x, double alpha,
                         const GridSpec& grid);

// sup x/(1+x^2) and sup 1/(1+x^2) over [0, inf).
inline constexpr double kE1WeightedNorm = 0.5;
inline constexpr double kE0WeightedNorm = 1.0;

struct RateConstant {
  double corrected = 0.0;  // grid sup of the exact moment expression
  double printed = 0.0;    // printed constant, for comparison
};

// corrected: sup of P_n((s-x)^2; x) over the grid.
RateConstant delta_n(const OperatorInstance& op, const GridSpec& grid);

// corrected: sup of P_n((s-x)^2; x) + shift(x)^2 over the grid.
RateConstant phi_n(const OperatorInstance& op, const GridSpec& grid);

// Upper estimate of K_2(f, delta) = inf_g ||f - g|| + delta ||g''|| over 16
// Gaussian mollifications of f with bandwidths log-spaced in
// [delta/32, 4 delta].  f must be evaluable up to 32 delta beyond the grid.
double k2_estimate(const TargetFunction& f, double delta, const GridSpec& grid);

// |P_n f - f| <= 2 omega(f, sqrt(delta_n)).
BoundReport check_rate_theorem(const OperatorInstance& op,
                               const TargetFunction& f, const GridSpec& grid);

// |P_n f - f| <= M (delta_n^{alpha/2} + d(x, F)^alpha), F = [f_lo, f_hi].
BoundReport check_lipschitz_theorem(const OperatorInstance& op,
                                    const TargetFunction& f, double f_lo,
                                    double f_hi, const GridSpec& grid);

// |P_n f - f| <= omega_alpha(f, x) delta_n^{alpha/2}.
BoundReport check_maximal_theorem(const OperatorInstance& op,
                                  const TargetFunction& f, double alpha,
                                  const GridSpec& grid);

struct LocalReport {
  BoundReport report;
  double k_hat = 0.0;           // least K making every point pass
  double phi = 0.0;             // corrected phi_n
  double phi_printed = 0.0;
  double omega2 = 0.0;          // omega_2(f, sqrt(phi_n))
  double omega2_printed = 0.0;  // omega_2(f, phi_n printed)
  double shift_term = 0.0;      // omega(f, sup shift)
};

// |P_n f - f| <= K omega_2(f, sqrt(phi_n)) + omega(f, sup_x shift(x)).
LocalReport check_local_theorem(const OperatorInstance& op,
                                const TargetFunction& f, const GridSpec& grid);

}  // namespace qapprox
