#pragma once

// Polynomial symbols A(u) = sum a_k u^k and the q-Appell weights
// c_k(y) = P_k(q;y)/[k]_q!, the Cauchy-product coefficients of A(u) e_q(yu).

#include <string>
#include <string_view>
#include <vector>

#include "qapprox/qcore.hpp"

namespace qapprox {

class AppellFamily {
 public:
  // Requires a nonempty list with a_0 > 0 and every a_k finite and >= 0.
  AppellFamily(std::vector<double> coeffs, std::string name);

  // "one" (A = 1), "affine" (1 + u), "quad" (1 + u + u^2/2), or an explicit
  // coefficient list "a0,a1,...".
  static AppellFamily parse(std::string_view spec);

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  const std::string& name() const noexcept { return name_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

 private:
  std::vector<double> coeffs_;
  std::string name_;
};

// c_k(y) = sum_{j <= min(k,K)} a_j y^{k-j}/[k-j]_q!.
double appell_weight(const AppellFamily& family, int k, double y, QValue q);

// The four scalars the moment formulas consume.
struct FamilyFunctionals {
  double a1 = 0.0;      // A(1)
  double dq_a1 = 0.0;   // (D_q A)(1)
  double dq_aq = 0.0;   // (D_q A)(q)
  double dq2_a1 = 0.0;  // (D_q^2 A)(1)
};

FamilyFunctionals family_functionals(const AppellFamily& family, QValue q);

// Streams c_0(y), c_1(y), ... in O(K) per step.  Values are reported
// multiplied by a common factor exp(log_scale()) that shrinks whenever the
// raw terms would overflow; advance() returns the factor applied to values
// already handed out (1.0 when nothing was rescaled) so callers can rescale
// their accumulators.
class AppellWeightStream {
 public:
  AppellWeightStream(const AppellFamily& family, double y, QValue q);

  double advance();

  int index() const noexcept { return index_; }
  // c_k(y), scaled.
  double weight() const noexcept { return weight_; }
  // y^k/[k]_q!, scaled.
  double base_term() const noexcept { return base_.back(); }
  // y^{k-K}/[k-K]_q!, scaled; zero while k < K.
  double lagged_base_term() const noexcept;
  // y/[k-K+1]_q: bounds every later ratio of consecutive base terms from
  // index k-K on.
  double lagged_ratio_bound() const noexcept;
  double log_scale() const noexcept { return log_scale_; }

 private:
  void refresh_weight();

  const std::vector<double>* coeffs_;
  double y_;
  double q_;
  int index_ = 0;
  double qint_ = 0.0;  // [index]_q
  std::vector<double> base_;  // last K+1 base terms, oldest first
  double weight_ = 0.0;
  double log_scale_ = 0.0;
};

// Truncated sum_k c_k(y) [k]_q^power, the brute-force side of the generating
// identities.  Stops by the same geometric tail rule as q_exp.
double appell_power_sum(const AppellFamily& family, double y, QValue q,
                        int power, double tol = kDefaultTol);

// Closed-form right-hand sides of the generating identities.
// sum c_k = A(1) e_q(y)
double weight_sum_closed(const AppellFamily& family, double y, QValue q);
// sum c_k [k] = A(1) y e_q(y) + e_q(qy) D_qA(1)
double first_sum_closed(const AppellFamily& family, double y, QValue q);
// sum c_k [k]^2 = q e_q(q^2 y) D_q^2A(1) + (q(q+1)y + 1) e_q(qy) D_qA(1)
//                 + (q y^2 + y) A(1) e_q(y)
double second_sum_closed(const AppellFamily& family, double y, QValue q);
// Printed variant: D_q^2A(1) e_q(qy) + y e_q(qy)[q D_qA(q) + D_qA(1)]
//                        + A(1) y^2 e_q(y).  Kept for the fidelity report.
double second_sum_printed(const AppellFamily& family, double y, QValue q);

}  // namespace qapprox
