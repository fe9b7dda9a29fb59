#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qapprox/qcore.hpp"

namespace qapprox {

// |f(x)| <= alpha * exp(beta * x) on [0, inf).
struct GrowthBound {
  double alpha = 1.0;
  double beta = 0.0;
};

// |f(y) - f(x)| <= M |x - y|^alpha.
struct LipschitzBound {
  double M = 1.0;
  double alpha = 1.0;
};

struct TargetMetadata {
  std::optional<GrowthBound> growth;
  std::optional<LipschitzBound> lipschitz;
  std::optional<double> sup_bound;
};

// An evaluable function on [0, inf) together with the class memberships the
// theorem checkers rely on.  Metadata is spot-checked on 200 points of
// [0, audit_hi] at construction; a violated claim throws DomainError.
class TargetFunction {
 public:
  TargetFunction(std::string name, RealFunction fn, TargetMetadata meta = {},
                 double audit_hi = 10.0);

  // Presets: e0, e1, e2, sin, expneg, abspow:alpha:c (|x - c|^alpha).
  static TargetFunction parse(std::string_view spec);
  static TargetFunction monomial(int power);

  double operator()(double x) const { return fn_(x); }

  const std::string& name() const noexcept { return name_; }
  const TargetMetadata& meta() const noexcept { return meta_; }
  const RealFunction& function() const noexcept { return fn_; }

 private:
  std::string name_;
  RealFunction fn_;
  TargetMetadata meta_;
};

}  // namespace qapprox
