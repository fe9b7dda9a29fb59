#include "qapprox/target.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace qapprox {

namespace {

constexpr int kAuditPoints = 200;

double parse_real(const std::string& text, std::string_view spec) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw DomainError("cannot parse function spec '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

TargetFunction::TargetFunction(std::string name, RealFunction fn,
                               TargetMetadata meta, double audit_hi)
    : name_(std::move(name)), fn_(std::move(fn)), meta_(meta) {
  if (!fn_) throw DomainError("TargetFunction needs a callable");
  std::vector<double> xs(kAuditPoints);
  std::vector<double> fs(kAuditPoints);
  for (int i = 0; i < kAuditPoints; ++i) {
    xs[i] = audit_hi * i / (kAuditPoints - 1);
    fs[i] = fn_(xs[i]);
    if (!std::isfinite(fs[i])) {
      throw DomainError(name_ + ": non-finite value at x = " +
                        std::to_string(xs[i]));
    }
  }
  const auto fail = [this](const char* what) {
    throw DomainError(name_ + ": audit rejects the claimed " + what);
  };
  for (int i = 0; i < kAuditPoints; ++i) {
    const double mag = std::abs(fs[i]);
    if (meta_.sup_bound && mag > *meta_.sup_bound * (1 + 1e-12) + 1e-12) {
      fail("sup bound");
    }
    if (meta_.growth) {
      const double cap =
          meta_.growth->alpha * std::exp(meta_.growth->beta * xs[i]);
      if (mag > cap * (1 + 1e-12) + 1e-12) fail("growth bound");
    }
    if (meta_.lipschitz) {
      for (int j = 0; j < i; ++j) {
        const double cap = meta_.lipschitz->M *
                           std::pow(xs[i] - xs[j], meta_.lipschitz->alpha);
        if (std::abs(fs[i] - fs[j]) > cap * (1 + 1e-9) + 1e-12) {
          fail("Lipschitz condition");
        }
      }
    }
  }
}

TargetFunction TargetFunction::monomial(int power) {
  switch (power) {
    case 0:
      return TargetFunction("e0", [](double) { return 1.0; },
                            {GrowthBound{1.0, 0.0}, LipschitzBound{0.0, 1.0},
                             1.0});
    case 1:
      return TargetFunction("e1", [](double x) { return x; },
                            {GrowthBound{1.0, 1.0}, LipschitzBound{1.0, 1.0},
                             std::nullopt});
    case 2:
      // max x^2 e^{-x} = 4/e^2 < 1
      return TargetFunction("e2", [](double x) { return x * x; },
                            {GrowthBound{1.0, 1.0}, std::nullopt,
                             std::nullopt});
    default:
      throw DomainError("monomial: only powers 0, 1, 2 are provided");
  }
}

TargetFunction TargetFunction::parse(std::string_view spec) {
  if (spec == "e0") return monomial(0);
  if (spec == "e1") return monomial(1);
  if (spec == "e2") return monomial(2);
  if (spec == "sin") {
    return TargetFunction("sin", [](double x) { return std::sin(x); },
                          {GrowthBound{1.0, 0.0}, LipschitzBound{1.0, 1.0},
                           1.0});
  }
  if (spec == "expneg") {
    return TargetFunction("expneg", [](double x) { return std::exp(-x); },
                          {GrowthBound{1.0, 0.0}, LipschitzBound{1.0, 1.0},
                           1.0},
                          10.0);
  }
  constexpr std::string_view kAbsPow = "abspow:";
  if (spec.substr(0, kAbsPow.size()) == kAbsPow) {
    const std::string rest(spec.substr(kAbsPow.size()));
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw DomainError("abspow needs the form abspow:alpha:c");
    }
    const double alpha = parse_real(rest.substr(0, colon), spec);
    const double c = parse_real(rest.substr(colon + 1), spec);
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw DomainError("abspow exponent must lie in (0,1]");
    }
    // |x - c|^a <= (x + |c|)^a <= 1 + x + |c| <= (1 + |c|) e^x; and
    // ||t - c|^a - |x - c|^a| <= |t - x|^a for a in (0,1].
    return TargetFunction(
        std::string(spec),
        [alpha, c](double x) { return std::pow(std::abs(x - c), alpha); },
        {GrowthBound{1.0 + std::abs(c), 1.0}, LipschitzBound{1.0, alpha},
         std::nullopt});
  }
  throw DomainError("unknown function preset '" + std::string(spec) + "'");
}

}  // namespace qapprox
