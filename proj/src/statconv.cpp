#include "qapprox/statconv.hpp"

#include <algorithm>
#include <cmath>

#include "qapprox/csv.hpp"
#include "qapprox/parallel.hpp"

namespace qapprox {

bool is_perfect_square(std::int64_t k) {
  if (k < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(k)));
  while (r * r > k) --r;
  while ((r + 1) * (r + 1) <= k) ++r;
  return r * r == k;
}

double natural_density(const IndexPredicate& predicate, std::int64_t horizon) {
  if (horizon < 1) throw DomainError("natural_density needs N >= 1");
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= horizon; ++k) {
    if (predicate(k)) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(horizon);
}

double st_limit_verify(const IndexedSequence& seq, double limit, double eps,
                       std::int64_t horizon) {
  if (!(eps > 0.0)) throw DomainError("st_limit_verify needs eps > 0");
  return natural_density(
      [&](std::int64_t k) { return std::abs(seq(k) - limit) >= eps; },
      horizon);
}

ScheduleSpec ScheduleSpec::parse(std::string_view name) {
  if (name == "smooth") return ScheduleSpec(Kind::kSmooth);
  if (name == "spiky") return ScheduleSpec(Kind::kSpiky);
  throw DomainError("unknown schedule '" + std::string(name) + "'");
}

std::string ScheduleSpec::name() const {
  return kind_ == Kind::kSmooth ? "smooth" : "spiky";
}

double ScheduleSpec::q(std::int64_t n) const {
  if (n < 1) throw DomainError("schedule index must be positive");
  if (kind_ == Kind::kSpiky && is_perfect_square(n)) return 0.5;
  return 1.0 - 1.0 / std::sqrt(static_cast<double>(n));
}

double ScheduleSpec::b(std::int64_t n) const {
  if (n < 1) throw DomainError("schedule index must be positive");
  return std::pow(static_cast<double>(n), 0.25);
}

OperatorInstance ScheduleSpec::instance(int n, const AppellFamily& family) const {
  return OperatorInstance(n, QValue(q(n)), b(n), family);
}

double weighted_norm(const std::function<double(double)>& f,
                     const GridSpec& grid) {
  double best = 0.0;
  for (int i = 0; i < grid.points(); ++i) {
    const double x = grid.at(i);
    best = std::max(best, std::abs(f(x)) / (1.0 + x * x));
  }
  return best;
}

KorovkinCurve korovkin_curve(const ScheduleSpec& schedule,
                             const AppellFamily& family, int v,
                             const std::vector<int>& ns, const GridSpec& grid) {
  if (v < 0 || v > 2) throw DomainError("korovkin_curve needs v in {0,1,2}");
  if (ns.empty()) throw DomainError("korovkin_curve needs at least one n");
  std::vector<OperatorInstance> ops;
  ops.reserve(ns.size());
  double hi = grid.hi();
  for (int n : ns) {
    ops.push_back(schedule.instance(n, family));
    hi = std::min(hi, ops.back().x_max());
  }
  KorovkinCurve curve;
  curve.clipped = hi < grid.hi();
  curve.grid_hi = hi;
  const GridSpec clipped(grid.lo(), hi, grid.points());
  curve.points.resize(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    const auto& op = ops[i];
    CurvePoint p;
    p.n = ns[i];
    p.q_n = op.q().value();
    p.b_n = op.b_n();
    p.bn_over_nq = op.step();
    p.error = weighted_norm(
        [&](double x) { return moment_closed(op, v, x) - std::pow(x, v); },
        clipped);
    curve.points[i] = p;
  });
  return curve;
}

void write_korovkin_csv(std::ostream& out, const KorovkinCurve& v0,
                        const KorovkinCurve& v1, const KorovkinCurve& v2) {
  out << "n,q_n,b_n,bn_over_nq,error_v0,error_v1,error_v2\n";
  for (std::size_t i = 0; i < v0.points.size(); ++i) {
    const auto& p = v0.points[i];
    csv::write_row(out, {std::to_string(p.n), csv::real(p.q_n),
                         csv::real(p.b_n), csv::real(p.bn_over_nq),
                         csv::real(p.error), csv::real(v1.points.at(i).error),
                         csv::real(v2.points.at(i).error)});
  }
}

}  // namespace qapprox
