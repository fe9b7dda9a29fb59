#include "qapprox/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qapprox {

namespace {

constexpr double kRescaleAbove = 1e250;

double checked(const TargetFunction& f, double s) {
  const double v = f(s);
  if (!std::isfinite(v)) {
    throw EvaluationError(f.name() + " is not finite at node " +
                          std::to_string(s));
  }
  return v;
}

// Bound on |f| over [0, hi] used to convert the weight tail into a value tail.
double magnitude_bound(const TargetFunction& f, double hi, double running) {
  const auto& meta = f.meta();
  if (meta.sup_bound) return *meta.sup_bound;
  if (meta.growth) {
    return meta.growth->alpha * std::exp(std::max(meta.growth->beta, 0.0) * hi);
  }
  return running;
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(tol > 0.0)) throw DomainError("truncation tol must be positive");
  if (k_min < 1 || k_max < 1 || k_min >= k_max) {
    throw DomainError("truncation policy needs 1 <= k_min < k_max");
  }
}

OperatorInstance::OperatorInstance(int n, QValue q, double b_n,
                                   AppellFamily family)
    : n_(n),
      q_(q),
      b_n_(b_n),
      family_(std::move(family)),
      functionals_(family_functionals(family_, q)),
      nq_(q_integer(n, q)) {
  if (n < 1) throw DomainError("operator order n must be positive");
  if (!(b_n > 0.0) || !std::isfinite(b_n)) {
    throw DomainError("b_n must be positive and finite");
  }
}

double OperatorInstance::node(int k) const { return q_integer(k, q_) * step(); }

void OperatorInstance::check_domain(double x) const {
  // A relative slack of a few ulps admits grids whose endpoint is x_max.
  if (!(x >= 0.0 && x <= x_max() * (1.0 + 1e-12))) {
    throw DomainError("x = " + std::to_string(x) +
                      " outside the guarded domain [0, " +
                      std::to_string(x_max()) + "]");
  }
}

double OperatorInstance::exp_ratio(double z, double x) const {
  return std::exp(log_q_exp(z, q_) - log_q_exp(y(x), q_));
}

double OperatorInstance::shift(double x) const {
  check_domain(x);
  const double qv = q_.value();
  return functionals_.dq_a1 / functionals_.a1 * exp_ratio(qv * y(x), x) *
         step();
}

double evaluate(const OperatorInstance& op, const TargetFunction& f, double x,
                const TruncationPolicy& trunc) {
  trunc.validate();
  op.check_domain(x);
  const double qv = op.q().value();
  const double h = op.step();
  const int lag = op.family().degree();
  AppellWeightStream stream(op.family(), op.y(x), op.q());

  double running_sup = std::abs(checked(f, op.node_bound()));
  double acc = 0.0;
  double base_sum = 0.0;
  const auto visit = [&](double node) {
    const double v = checked(f, node);
    running_sup = std::max(running_sup, std::abs(v));
    acc += stream.weight() * v;
    base_sum += stream.base_term();
  };

  visit(0.0);
  double qint = 0.0;
  for (int k = 1; k <= trunc.k_max; ++k) {
    const double factor = stream.advance();
    acc *= factor;
    base_sum *= factor;
    qint = 1.0 + qv * qint;
    visit(qint * h);
    if (k < trunc.k_min || k < lag) continue;
    const double r = stream.lagged_ratio_bound();
    if (r >= 1.0) continue;
    // Normalized weight tail: sum_{m>k} c_m / (A(1) e_q(y)) is at most
    // t_{k-K} r/(1-r) / sum t.
    const double tail = stream.lagged_base_term() * r / (1.0 - r) / base_sum;
    if (tail * magnitude_bound(f, op.node_bound(), running_sup) < trunc.tol) {
      return acc / (op.functionals().a1 * base_sum);
    }
  }
  throw TruncationError("operator series reached k_max = " +
                        std::to_string(trunc.k_max));
}

double moment_closed(const OperatorInstance& op, int i, double x) {
  op.check_domain(x);
  const double qv = op.q().value();
  const double h = op.step();
  const double y = op.y(x);
  const auto& fn = op.functionals();
  switch (i) {
    case 0:
      return 1.0;
    case 1:
      return x + fn.dq_a1 / fn.a1 * op.exp_ratio(qv * y, x) * h;
    case 2: {
      const double r1 = op.exp_ratio(qv * y, x);
      const double r2 = op.exp_ratio(qv * qv * y, x);
      return qv * x * x + x * h + h * h * qv * r2 * fn.dq2_a1 / fn.a1 +
             h * r1 * (fn.dq_a1 / fn.a1) * (qv * (qv + 1.0) * x + h);
    }
    default:
      throw DomainError("moment index must be 0, 1 or 2");
  }
}

double moment_series(const OperatorInstance& op, int i, double x,
                     const TruncationPolicy& trunc) {
  if (i < 0 || i > 2) throw DomainError("moment index must be 0, 1 or 2");
  return evaluate(op, TargetFunction::monomial(i), x, trunc);
}

double moment_printed(const OperatorInstance& op, int i, double x) {
  if (i != 2) return moment_closed(op, i, x);
  op.check_domain(x);
  const double qv = op.q().value();
  const double h = op.step();
  const auto& fn = op.functionals();
  const double r1 = op.exp_ratio(qv * op.y(x), x);
  return x * x + r1 * (qv * fn.dq_aq + fn.dq_a1) / fn.a1 * x * h +
         r1 * fn.dq2_a1 / fn.a1 * h * h;
}

double central_moment2(const OperatorInstance& op, double x) {
  op.check_domain(x);
  const double qv = op.q().value();
  const double h = op.step();
  const double y = op.y(x);
  const auto& fn = op.functionals();
  const double r2 = op.exp_ratio(qv * qv * y, x);
  const double s = op.shift(x);
  return (qv - 1.0) * x * x + x * h + qv * h * h * r2 * fn.dq2_a1 / fn.a1 +
         s * ((qv * qv + qv - 2.0) * x + h);
}

double central_moment2_printed(const OperatorInstance& op, double x) {
  return moment_printed(op, 2, x) - 2.0 * x * moment_printed(op, 1, x) + x * x;
}

double auxiliary_evaluate(const OperatorInstance& op, const TargetFunction& f,
                          double x, const TruncationPolicy& trunc) {
  const double value = evaluate(op, f, x, trunc);
  const double s = op.shift(x);
  return value - checked(f, x + s) + checked(f, x);
}

double classical_evaluate(int n, double b_n, const TargetFunction& f, double x,
                          const TruncationPolicy& trunc) {
  trunc.validate();
  if (n < 1) throw DomainError("classical operator needs n >= 1");
  if (!(b_n > 0.0)) throw DomainError("classical operator needs b_n > 0");
  if (!(x >= 0.0)) throw DomainError("classical operator needs x >= 0");
  const double lambda = n * x / b_n;
  const double h = b_n / n;
  double weight = 1.0;
  double weight_sum = 1.0;
  double acc = checked(f, 0.0);
  double running_sup = std::abs(acc);
  for (int k = 1; k <= trunc.k_max; ++k) {
    weight *= lambda / k;
    if (weight > kRescaleAbove) {
      weight /= kRescaleAbove;
      weight_sum /= kRescaleAbove;
      acc /= kRescaleAbove;
    }
    const double v = checked(f, k * h);
    running_sup = std::max(running_sup, std::abs(v));
    acc += weight * v;
    weight_sum += weight;
    if (k < trunc.k_min) continue;
    const double r = lambda / (k + 1);
    if (r >= 1.0) continue;
    const double tail = weight * r / (1.0 - r) / weight_sum;
    const double mag =
        f.meta().sup_bound ? *f.meta().sup_bound : running_sup;
    if (tail * mag < trunc.tol) return acc / weight_sum;
  }
  throw TruncationError("classical series reached k_max = " +
                        std::to_string(trunc.k_max));
}

}  // namespace qapprox
