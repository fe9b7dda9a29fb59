#pragma once

// Natural density, finite-horizon statistical-limit evidence, the (q_n, b_n)
// schedules and the weighted Korovkin error curves.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qapprox/analysis.hpp"

namespace qapprox {

using IndexPredicate = std::function<bool(std::int64_t)>;
using IndexedSequence = std::function<double(std::int64_t)>;

bool is_perfect_square(std::int64_t k);

// |{1 <= k <= N : predicate(k)}| / N.
double natural_density(const IndexPredicate& predicate, std::int64_t horizon);

// Density of {k <= N : |seq(k) - limit| >= eps}.
double st_limit_verify(const IndexedSequence& seq, double limit, double eps,
                       std::int64_t horizon);

// smooth: q_n = 1 - n^{-1/2}, b_n = n^{1/4}.
// spiky:  as smooth, except q_n = 1/2 at perfect squares n.
class ScheduleSpec {
 public:
  enum class Kind { kSmooth, kSpiky };

  explicit ScheduleSpec(Kind kind) : kind_(kind) {}
  static ScheduleSpec parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  std::string name() const;
  // Raw sequence values; q(1) = 0 for the smooth schedule.
  double q(std::int64_t n) const;
  double b(std::int64_t n) const;
  OperatorInstance instance(int n, const AppellFamily& family) const;

 private:
  Kind kind_;
};

// sup |f(x)|/(1 + x^2) over a grid.
double weighted_norm(const std::function<double(double)>& f,
                     const GridSpec& grid);

struct CurvePoint {
  int n = 0;
  double q_n = 0.0;
  double b_n = 0.0;
  double bn_over_nq = 0.0;
  double error = 0.0;
};

struct KorovkinCurve {
  double grid_hi = 0.0;  // grid upper end after clipping
  bool clipped = false;
  std::vector<CurvePoint> points;
};

// error(n) = sup_grid |P_n(e_v; x) - x^v|/(1 + x^2), closed-form moments.  The
// grid is clipped to the smallest x_max across ns.
KorovkinCurve korovkin_curve(const ScheduleSpec& schedule,
                             const AppellFamily& family, int v,
                             const std::vector<int>& ns, const GridSpec& grid);

// Columns n,q_n,b_n,bn_over_nq,error_v0,error_v1,error_v2.
void write_korovkin_csv(std::ostream& out, const KorovkinCurve& v0,
                        const KorovkinCurve& v1, const KorovkinCurve& v2);

}  // namespace qapprox
