#include "qapprox/qcore.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qapprox {

namespace {

constexpr double kZeroDerivativeStep = 1e-6;
constexpr double kCancellationLimit = 1e-13;
constexpr long kProductFactorCap = 10'000'000;
constexpr double kRescaleAbove = 1e250;

}  // namespace

QValue::QValue(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("q must lie strictly inside (0,1), got " +
                      std::to_string(q));
  }
}

double q_integer(long r, QValue q) {
  if (r < 0) throw DomainError("q_integer: r must be nonnegative");
  if (r == 0) return 0.0;
  // expm1 keeps full relative accuracy for q close to one.
  const double lq = std::log(q.value());
  return std::expm1(static_cast<double>(r) * lq) / std::expm1(lq);
}

double q_factorial(int n, QValue q) {
  if (n < 0) throw DomainError("q_factorial: n must be nonnegative");
  double product = 1.0;
  double qint = 0.0;
  for (int j = 1; j <= n; ++j) {
    qint = 1.0 + q.value() * qint;
    product *= qint;
  }
  if (!std::isfinite(product)) {
    throw DomainError("q_factorial overflow at n = " + std::to_string(n));
  }
  return product;
}

double q_binomial(int n, int k, QValue q) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("q_binomial requires 0 <= k <= n");
  }
  return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

double q_derivative(const RealFunction& f, double x, QValue q) {
  double num = 0.0;
  double den = 0.0;
  if (x == 0.0) {
    num = f(kZeroDerivativeStep) - f(-kZeroDerivativeStep);
    den = 2.0 * kZeroDerivativeStep;
  } else {
    num = f(x) - f(q.value() * x);
    den = (1.0 - q.value()) * x;
  }
  if (!std::isfinite(num)) {
    throw EvaluationError("q_derivative: function returned a non-finite value");
  }
  return num / den;
}

namespace {

void require_in_radius(double x, QValue q, const char* who) {
  if (!(std::abs(x) < q.radius())) {
    throw DomainError(std::string(who) + ": |x| must be below 1/(1-q)");
  }
}

// Sums e_q(x) as mantissa * exp(log_scale).  The term ratio x/[k+1] decreases
// monotonically in k towards (1-q)x, so once it drops below one the current
// ratio bounds every later one and term*r/(1-r) bounds the tail.
struct ScaledSum {
  double mantissa = 0.0;
  double log_scale = 0.0;
};

ScaledSum sum_q_exp(double x, QValue q, double tol, bool allow_rescale) {
  const double qv = q.value();
  double term = 1.0;
  double sum = 1.0;
  double log_scale = 0.0;
  double qint = 0.0;  // [k]_q
  for (int k = 1; k <= kSeriesTermCap; ++k) {
    qint = 1.0 + qv * qint;
    term *= x / qint;
    sum += term;
    if (allow_rescale && sum > kRescaleAbove) {
      sum /= kRescaleAbove;
      term /= kRescaleAbove;
      log_scale += std::log(kRescaleAbove);
    }
    const double ratio = std::abs(x) / (1.0 + qv * qint);
    if (ratio < 1.0 &&
        std::abs(term) * ratio / (1.0 - ratio) < tol * std::abs(sum)) {
      return {sum, log_scale};
    }
  }
  throw TruncationError("e_q series did not converge within the term cap");
}

}  // namespace

double q_exp(double x, QValue q, double tol) {
  require_in_radius(x, q, "q_exp");
  if (x == 0.0) return 1.0;
  return sum_q_exp(x, q, tol, false).mantissa;
}

double log_q_exp(double x, QValue q, double tol) {
  require_in_radius(x, q, "log_q_exp");
  if (x < 0.0) throw DomainError("log_q_exp: x must be nonnegative");
  if (x == 0.0) return 0.0;
  const ScaledSum s = sum_q_exp(x, q, tol, true);
  return std::log(s.mantissa) + s.log_scale;
}

double q_exp_entire_product(double x, QValue q, double tol) {
  const double qv = q.value();
  const double step = 1.0 - qv;
  double product = 1.0;
  double qj = 1.0;
  for (long j = 0; j < kProductFactorCap; ++j) {
    // Remaining log-mass is bounded by sum_{i>=j} (1-q) q^i |x| = q^j |x|.
    if (qj * std::abs(x) < tol) return product;
    product *= 1.0 + step * qj * x;
    qj *= qv;
  }
  throw TruncationError("E_q product did not converge within the factor cap");
}

EntireExpResult q_exp_entire_detailed(double x, QValue q, double tol) {
  if (x == 0.0) return {1.0, 1, SummationMethod::kSeries};
  const double qv = q.value();
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  double qint = 0.0;
  double qpow = 1.0;  // q^{k-1}
  int terms = 1;
  bool converged = false;
  for (int k = 1; k <= kSeriesTermCap; ++k) {
    qint = 1.0 + qv * qint;
    // t_k = t_{k-1} * q^{k-1} x / [k]_q
    term *= qpow * x / qint;
    qpow *= qv;
    sum += term;
    abs_sum += std::abs(term);
    ++terms;
    const double ratio = qpow * std::abs(x) / (1.0 + qv * qint);
    if (ratio < 1.0 && std::abs(term) < tol * std::max(1.0, std::abs(sum))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw TruncationError("E_q series did not converge within the term cap");
  }
  const double lost =
      abs_sum / std::max(std::abs(sum), std::numeric_limits<double>::min()) *
      std::numeric_limits<double>::epsilon();
  if (x < 0.0 && lost > kCancellationLimit) {
    return {q_exp_entire_product(x, q, tol), terms, SummationMethod::kProduct};
  }
  return {sum, terms, SummationMethod::kSeries};
}

}  // namespace qapprox
