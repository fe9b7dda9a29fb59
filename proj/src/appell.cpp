#include "qapprox/appell.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qapprox {

namespace {
constexpr double kRescaleAbove = 1e250;
}

AppellFamily::AppellFamily(std::vector<double> coeffs, std::string name)
    : coeffs_(std::move(coeffs)), name_(std::move(name)) {
  if (coeffs_.empty()) throw DomainError("Appell family needs a coefficient");
  if (!(coeffs_.front() > 0.0)) {
    throw DomainError("Appell family needs a_0 > 0");
  }
  for (double a : coeffs_) {
    if (!std::isfinite(a) || a < 0.0) {
      throw DomainError("Appell coefficients must be finite and nonnegative");
    }
  }
}

AppellFamily AppellFamily::parse(std::string_view spec) {
  if (spec == "one") return AppellFamily({1.0}, "one");
  if (spec == "affine") return AppellFamily({1.0, 1.0}, "affine");
  if (spec == "quad") return AppellFamily({1.0, 1.0, 0.5}, "quad");
  std::vector<double> coeffs;
  std::stringstream in{std::string(spec)};
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      throw DomainError("cannot parse Appell family '" + std::string(spec) +
                        "'");
    }
    coeffs.push_back(v);
  }
  return AppellFamily(std::move(coeffs), std::string(spec));
}

double appell_weight(const AppellFamily& family, int k, double y, QValue q) {
  if (k < 0) throw DomainError("appell_weight: k must be nonnegative");
  if (y < 0.0) throw DomainError("appell_weight: y must be nonnegative");
  const auto& a = family.coeffs();
  const int lowest = std::max(0, k - family.degree());
  // base[m] = y^m/[m]_q! for m in [lowest, k].
  double term = 1.0;
  double qint = 0.0;
  for (int m = 1; m <= lowest; ++m) {
    qint = 1.0 + q.value() * qint;
    term *= y / qint;
  }
  double sum = 0.0;
  for (int m = lowest; m <= k; ++m) {
    if (m > lowest) {
      qint = 1.0 + q.value() * qint;
      term *= y / qint;
    }
    sum += a[static_cast<std::size_t>(k - m)] * term;
  }
  return sum;
}

FamilyFunctionals family_functionals(const AppellFamily& family, QValue q) {
  FamilyFunctionals out;
  const double qv = q.value();
  double qint_prev = 0.0;  // [k-1]_q
  double qint = 0.0;       // [k]_q
  double qpow = 1.0;       // q^{k-1}
  for (std::size_t k = 0; k < family.coeffs().size(); ++k) {
    const double a = family.coeffs()[k];
    if (k > 0) {
      qint_prev = qint;
      qint = 1.0 + qv * qint;
    }
    out.a1 += a;
    out.dq_a1 += a * qint;
    if (k > 0) out.dq_aq += a * qint * qpow;
    out.dq2_a1 += a * qint * qint_prev;
    if (k > 0) qpow *= qv;
  }
  return out;
}

AppellWeightStream::AppellWeightStream(const AppellFamily& family, double y,
                                       QValue q)
    : coeffs_(&family.coeffs()), y_(y), q_(q.value()) {
  if (y < 0.0) throw DomainError("AppellWeightStream: y must be nonnegative");
  base_.reserve(family.coeffs().size());
  base_.push_back(1.0);
  refresh_weight();
}

double AppellWeightStream::advance() {
  ++index_;
  qint_ = 1.0 + q_ * qint_;
  const double next = base_.back() * y_ / qint_;
  if (base_.size() == coeffs_->size()) base_.erase(base_.begin());
  base_.push_back(next);
  double factor = 1.0;
  if (next > kRescaleAbove) {
    factor = 1.0 / kRescaleAbove;
    for (double& b : base_) b *= factor;
    log_scale_ += std::log(kRescaleAbove);
  }
  refresh_weight();
  return factor;
}

void AppellWeightStream::refresh_weight() {
  // base_ holds terms for indices index_-len+1 .. index_.
  const auto& a = *coeffs_;
  const std::size_t len = base_.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    sum += a[j] * base_[len - 1 - j];
  }
  weight_ = sum;
}

double AppellWeightStream::lagged_base_term() const noexcept {
  if (base_.size() < coeffs_->size()) return 0.0;
  return base_.front();
}

double AppellWeightStream::lagged_ratio_bound() const noexcept {
  const int lag = static_cast<int>(coeffs_->size()) - 1;
  const int m = std::max(0, index_ - lag);
  // [m+1]_q via the closed form; m is small compared with the series length.
  const double qm1 = -std::expm1(static_cast<double>(m + 1) * std::log(q_)) /
                     (1.0 - q_);
  return y_ / qm1;
}

double appell_power_sum(const AppellFamily& family, double y, QValue q,
                        int power, double tol) {
  if (power < 0) throw DomainError("appell_power_sum: power must be >= 0");
  if (!(y < q.radius())) {
    throw DomainError("appell_power_sum: y must be below 1/(1-q)");
  }
  AppellWeightStream stream(family, y, q);
  const int lag = family.degree();
  const double a1 = family_functionals(family, q).a1;
  double sum = power == 0 ? stream.weight() : 0.0;
  double qint = 0.0;
  for (int k = 1; k <= kSeriesTermCap; ++k) {
    const double factor = stream.advance();
    sum *= factor;
    qint = 1.0 + q.value() * qint;
    sum += stream.weight() * std::pow(qint, power);
    if (k < lag) continue;
    const double r = stream.lagged_ratio_bound();
    if (r >= 1.0) continue;
    // Tail of sum c_k [k]^p <= [inf]^p A(1) * tail of the base series.
    const double tail = stream.lagged_base_term() * r / (1.0 - r) *
                        std::pow(q.radius(), power) * a1;
    if (tail < tol * std::abs(sum) || stream.lagged_base_term() == 0.0) {
      return sum * std::exp(stream.log_scale());
    }
  }
  throw TruncationError("appell_power_sum did not converge");
}

double weight_sum_closed(const AppellFamily& family, double y, QValue q) {
  return family_functionals(family, q).a1 * q_exp(y, q);
}

double first_sum_closed(const AppellFamily& family, double y, QValue q) {
  const auto f = family_functionals(family, q);
  return f.a1 * y * q_exp(y, q) + q_exp(q.value() * y, q) * f.dq_a1;
}

double second_sum_closed(const AppellFamily& family, double y, QValue q) {
  const auto f = family_functionals(family, q);
  const double qv = q.value();
  return qv * q_exp(qv * qv * y, q) * f.dq2_a1 +
         (qv * (qv + 1.0) * y + 1.0) * q_exp(qv * y, q) * f.dq_a1 +
         (qv * y * y + y) * f.a1 * q_exp(y, q);
}

double second_sum_printed(const AppellFamily& family, double y, QValue q) {
  const auto f = family_functionals(family, q);
  const double qv = q.value();
  const double eqy = q_exp(qv * y, q);
  return f.dq2_a1 * eqy + y * eqy * (qv * f.dq_aq + f.dq_a1) +
         f.a1 * y * y * q_exp(y, q);
}

}  // namespace qapprox
