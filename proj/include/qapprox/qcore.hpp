#pragma once

// q-calculus primitives: q-integers, q-factorials, q-binomials, the Jackson
// q-derivative and the two q-exponentials.  Everything is a pure function.

#include <functional>

#include "qapprox/errors.hpp"

namespace qapprox {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kSeriesTermCap = 10000;

// Deformation parameter, strictly inside (0,1).
class QValue {
 public:
  explicit QValue(double q);

  double value() const noexcept { return q_; }
  // Radius of convergence of the e_q series, 1/(1-q).
  double radius() const noexcept { return 1.0 / (1.0 - q_); }

 private:
  double q_;
};

// [r]_q = (1 - q^r)/(1 - q).
double q_integer(long r, QValue q);

// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
double q_factorial(int n, QValue q);

// [n]_q! / ([k]_q! [n-k]_q!); throws DomainError unless 0 <= k <= n.
double q_binomial(int n, int k, QValue q);

using RealFunction = std::function<double(double)>;

// (f(x) - f(qx)) / ((1-q) x); at x = 0 a central difference with step 1e-6
// stands in for f'(0).
double q_derivative(const RealFunction& f, double x, QValue q);

// e_q(x) = sum x^k/[k]_q!, defined for |x| < 1/(1-q).
double q_exp(double x, QValue q, double tol = kDefaultTol);

// log e_q(x) for 0 <= x < 1/(1-q).  Safe where e_q itself overflows.
double log_q_exp(double x, QValue q, double tol = kDefaultTol);

enum class SummationMethod { kSeries, kProduct };

struct EntireExpResult {
  double value = 0.0;
  int terms = 0;
  SummationMethod method = SummationMethod::kSeries;
};

// E_q(x) = sum q^{k(k-1)/2} x^k/[k]_q!, entire in x.  Falls back to the
// product prod_j (1 + (1-q) q^j x) when the alternating series would lose more
// than 1e-8 relative accuracy to cancellation.
EntireExpResult q_exp_entire_detailed(double x, QValue q,
                                      double tol = kDefaultTol);

inline double q_exp_entire(double x, QValue q, double tol = kDefaultTol) {
  return q_exp_entire_detailed(x, q, tol).value;
}

// Product form of E_q, truncated once the remaining factors are within tol
// of one.
double q_exp_entire_product(double x, QValue q, double tol = kDefaultTol);

}  // namespace qapprox
