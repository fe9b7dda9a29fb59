#pragma once

// The Chlodowsky-type q-Favard-Szasz operator
//
//   P_n(f; x) = E_q(-y)/A(1) * sum_k c_k(y) f([k]_q b_n/[n]_q),  y = [n]_q x/b_n,
//
// its moments, the auxiliary (linear-reproducing) operator, and the classical
// q = 1 Szasz-Chlodowsky operator used as a limit reference.

#include "qapprox/appell.hpp"
#include "qapprox/target.hpp"

namespace qapprox {

struct TruncationPolicy {
  double tol = kDefaultTol;
  int k_max = kSeriesTermCap;
  int k_min = 16;

  void validate() const;
};

class OperatorInstance {
 public:
  static constexpr double kSafety = 0.95;

  OperatorInstance(int n, QValue q, double b_n, AppellFamily family);

  int n() const noexcept { return n_; }
  QValue q() const noexcept { return q_; }
  double b_n() const noexcept { return b_n_; }
  const AppellFamily& family() const noexcept { return family_; }
  const FamilyFunctionals& functionals() const noexcept { return functionals_; }

  // [n]_q
  double nq() const noexcept { return nq_; }
  // b_n/[n]_q, the node spacing scale.
  double step() const noexcept { return b_n_ / nq_; }
  double y(double x) const noexcept { return x / step(); }
  // [k]_q b_n/[n]_q
  double node(int k) const;
  // Every node lies below b_n/((1-q)[n]_q).
  double node_bound() const noexcept { return step() * q_.radius(); }
  // Largest admissible evaluation point, kSafety * node_bound().
  double x_max() const noexcept { return kSafety * node_bound(); }

  // Throws DomainError unless 0 <= x <= x_max.
  void check_domain(double x) const;

  // e_q(z)/e_q(y(x)): realizes the E_q(-y) e_q(z) factor of the moment
  // formulas.
  double exp_ratio(double z, double x) const;

  // Shift of the auxiliary operator, (D_qA(1)/A(1)) R(qy) b_n/[n]_q.
  double shift(double x) const;

 private:
  int n_;
  QValue q_;
  double b_n_;
  AppellFamily family_;
  FamilyFunctionals functionals_;
  double nq_;
};

double evaluate(const OperatorInstance& op, const TargetFunction& f, double x,
                const TruncationPolicy& trunc = {});

// Closed forms for P_n(e_i; x), i in {0,1,2}.  The second moment uses the
// series-verified identity
//   P_n(e_2; x) = q x^2 + x h + h^2 q R(q^2 y) D_q^2A(1)/A(1)
//               + h R(qy) (D_qA(1)/A(1)) (q(q+1) x + h),   h = b_n/[n]_q.
double moment_closed(const OperatorInstance& op, int i, double x);

// Direct truncated summation of the operator applied to e_i.
double moment_series(const OperatorInstance& op, int i, double x,
                     const TruncationPolicy& trunc = {});

// The printed closed forms, kept for the fidelity report.  Differs from
// moment_closed only for i = 2.
double moment_printed(const OperatorInstance& op, int i, double x);

// P_n((s - x)^2; x), simplified algebraically to avoid cancellation.
double central_moment2(const OperatorInstance& op, double x);

// The same quantity assembled from the printed moments.
double central_moment2_printed(const OperatorInstance& op, double x);

// P_n(f; x) - f(x + shift(x)) + f(x); reproduces linear functions at x.
double auxiliary_evaluate(const OperatorInstance& op, const TargetFunction& f,
                          double x, const TruncationPolicy& trunc = {});

// e^{-nx/b_n} sum_k (nx/b_n)^k/k! f(k b_n/n).
double classical_evaluate(int n, double b_n, const TargetFunction& f, double x,
                          const TruncationPolicy& trunc = {});

}  // namespace qapprox
