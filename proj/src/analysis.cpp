#include "qapprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "qapprox/csv.hpp"
#include "qapprox/parallel.hpp"

namespace qapprox {

namespace {

constexpr int kSecondModulusSteps = 64;
constexpr int kMaxNodeGridPoints = 40001;
constexpr int kBandwidths = 16;
constexpr int kKernelNodes = 129;
constexpr double kKernelHalfWidth = 8.0;

std::vector<double> sample(const TargetFunction& f,
                           const std::vector<double>& xs) {
  std::vector<double> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    out[i] = f(xs[i]);
    if (!std::isfinite(out[i])) {
      throw EvaluationError(f.name() + " is not finite at x = " +
                            std::to_string(xs[i]));
    }
  });
  return out;
}

// Per-point min and max of fs over {j : |x_j - x_i| <= delta}, via monotone
// deques over the sliding window.
struct WindowExtrema {
  std::vector<double> lo;
  std::vector<double> hi;
};

WindowExtrema window_extrema(const std::vector<double>& xs,
                             const std::vector<double>& fs, double delta) {
  const std::size_t n = xs.size();
  const double reach = delta * (1.0 + 1e-12);
  WindowExtrema out{std::vector<double>(n), std::vector<double>(n)};
  std::deque<std::size_t> max_q;
  std::deque<std::size_t> min_q;
  std::size_t right = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (right < n && xs[right] - xs[i] <= reach) {
      while (!max_q.empty() && fs[max_q.back()] <= fs[right]) max_q.pop_back();
      while (!min_q.empty() && fs[min_q.back()] >= fs[right]) min_q.pop_back();
      max_q.push_back(right);
      min_q.push_back(right);
      ++right;
    }
    while (xs[i] - xs[max_q.front()] > reach) max_q.pop_front();
    while (xs[i] - xs[min_q.front()] > reach) min_q.pop_front();
    out.hi[i] = fs[max_q.front()];
    out.lo[i] = fs[min_q.front()];
  }
  return out;
}

double reduce_max(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

void require_bounded(const TargetFunction& f, const char* who) {
  if (!f.meta().sup_bound) {
    throw DomainError(std::string(who) + " requires a bounded function; " +
                      f.name() + " carries no sup bound");
  }
}

double residual(const OperatorInstance& op, const TargetFunction& f,
                double x) {
  return std::abs(evaluate(op, f, x) - f(x));
}

}  // namespace

GridSpec::GridSpec(double lo, double hi, int points)
    : lo_(lo), hi_(hi), points_(points) {
  if (!(lo >= 0.0) || !(lo < hi) || !std::isfinite(hi)) {
    throw DomainError("grid needs 0 <= lo < hi");
  }
  if (points < 2) throw DomainError("grid needs at least two points");
}

double GridSpec::at(int i) const noexcept {
  if (i == points_ - 1) return hi_;
  return lo_ + (hi_ - lo_) * i / (points_ - 1);
}

std::vector<double> GridSpec::values() const {
  std::vector<double> xs(static_cast<std::size_t>(points_));
  for (int i = 0; i < points_; ++i) xs[static_cast<std::size_t>(i)] = at(i);
  return xs;
}

void require_within(const GridSpec& grid, const OperatorInstance& op) {
  op.check_domain(grid.lo());
  op.check_domain(grid.hi());
}

GridSpec node_grid(const OperatorInstance& op, const GridSpec& grid,
                   double resolution) {
  const double hi = std::max(grid.hi(), op.node_bound());
  double step = grid.spacing();
  if (resolution > 0.0) step = std::min(step, resolution);
  const double wanted = std::ceil(hi / step) + 1.0;
  const int points = static_cast<int>(
      std::clamp(wanted, static_cast<double>(grid.points()),
                 static_cast<double>(kMaxNodeGridPoints)));
  return GridSpec(0.0, hi, points);
}

BoundReport BoundReport::assemble(
    std::string theorem, std::vector<BoundPoint> points,
    std::vector<std::pair<std::string, double>> extras) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.extras = std::move(extras);
  r.min_margin = std::numeric_limits<double>::infinity();
  for (auto& p : points) {
    p.margin = p.rhs - p.lhs;
    r.sup_lhs = std::max(r.sup_lhs, p.lhs);
    r.sup_rhs = std::max(r.sup_rhs, p.rhs);
    r.min_margin = std::min(r.min_margin, p.margin);
    if (p.rhs > 0.0) {
      r.sup_ratio = std::max(r.sup_ratio, p.lhs / p.rhs);
    } else if (p.lhs > 0.0) {
      r.sup_ratio = std::numeric_limits<double>::infinity();
    }
  }
  r.points = std::move(points);
  r.pass = r.min_margin >= -1e-9 * std::max(1.0, r.sup_rhs);
  return r;
}

double BoundReport::extra(const std::string& key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  throw DomainError("report has no summary field '" + key + "'");
}

std::string BoundReport::summary_line() const {
  std::string s = "theorem=" + theorem + " pass=" + (pass ? "1" : "0") +
                  " points=" + std::to_string(points.size()) +
                  " sup_lhs=" + csv::real(sup_lhs) +
                  " sup_rhs=" + csv::real(sup_rhs) +
                  " sup_ratio=" + csv::real(sup_ratio) +
                  " min_margin=" + csv::real(min_margin);
  for (const auto& [k, v] : extras) s += " " + k + "=" + csv::real(v);
  return s;
}

void BoundReport::write_csv(std::ostream& out) const {
  out << "x,lhs,rhs,margin\n";
  for (const auto& p : points) {
    csv::write_row(out, {csv::real(p.x), csv::real(p.lhs), csv::real(p.rhs),
                         csv::real(p.margin)});
  }
  out << "# summary: " << summary_line() << '\n';
}

double modulus(const TargetFunction& f, double delta, const GridSpec& grid) {
  if (!(delta > 0.0)) throw DomainError("modulus needs delta > 0");
  const auto xs = grid.values();
  const auto fs = sample(f, xs);
  const auto ext = window_extrema(xs, fs, delta);
  double best = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    best = std::max({best, ext.hi[i] - fs[i], fs[i] - ext.lo[i]});
  }
  return best;
}

double weighted_modulus(const TargetFunction& f, double delta, double lambda,
                        const GridSpec& grid) {
  if (!(delta > 0.0)) throw DomainError("weighted_modulus needs delta > 0");
  if (!(lambda >= 0.0)) throw DomainError("weighted_modulus needs lambda >= 0");
  const auto xs = grid.values();
  const auto fs = sample(f, xs);
  const auto ext = window_extrema(xs, fs, delta);
  double best = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double spread = std::max(ext.hi[i] - fs[i], fs[i] - ext.lo[i]);
    best = std::max(best, spread / (1.0 + std::pow(xs[i], 2.0 + lambda)));
  }
  return best;
}

double second_modulus(const TargetFunction& f, double delta,
                      const GridSpec& grid) {
  if (!(delta > 0.0)) throw DomainError("second_modulus needs delta > 0");
  const auto xs = grid.values();
  std::vector<double> per_point(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    const double f0 = f(x);
    double best = 0.0;
    for (int j = 1; j <= kSecondModulusSteps; ++j) {
      const double h = delta * j / kSecondModulusSteps;
      best = std::max(best, std::abs(f(x + 2.0 * h) - 2.0 * f(x + h) + f0));
    }
    per_point[i] = best;
  });
  return reduce_max(per_point);
}

double lipschitz_maximal(const TargetFunction& f, double x, double alpha,
                         const GridSpec& grid) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("lipschitz_maximal needs alpha in (0,1]");
  }
  const double fx = f(x);
  const double same = 1e-14 * std::max(1.0, std::abs(x));
  double best = 0.0;
  for (int i = 0; i < grid.points(); ++i) {
    const double t = grid.at(i);
    const double gap = std::abs(t - x);
    if (gap <= same) continue;
    best = std::max(best, std::abs(f(t) - fx) / std::pow(gap, alpha));
  }
  return best;
}

RateConstant delta_n(const OperatorInstance& op, const GridSpec& grid) {
  require_within(grid, op);
  const auto xs = grid.values();
  std::vector<double> mu(xs.size());
  parallel_for(xs.size(),
               [&](std::size_t i) { mu[i] = central_moment2(op, xs[i]); });
  const auto& fn = op.functionals();
  const double qv = op.q().value();
  const double h = op.step();
  RateConstant out;
  out.corrected = reduce_max(mu);
  out.printed = (qv * fn.dq_aq + fn.dq_a1) / fn.a1 * h * kE1WeightedNorm +
                fn.dq2_a1 / fn.a1 * h * h * kE0WeightedNorm;
  return out;
}

RateConstant phi_n(const OperatorInstance& op, const GridSpec& grid) {
  require_within(grid, op);
  const auto xs = grid.values();
  std::vector<double> v(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double s = op.shift(xs[i]);
    v[i] = central_moment2(op, xs[i]) + s * s;
  });
  const auto& fn = op.functionals();
  const double qv = op.q().value();
  const double h = op.step();
  RateConstant out;
  out.corrected = reduce_max(v);
  out.printed = (qv * fn.dq_aq + fn.dq_a1) / fn.a1 * h +
                (fn.a1 * fn.dq2_a1 + fn.dq_a1 * fn.dq_a1) / (fn.a1 * fn.a1) *
                    h * h;
  return out;
}

double k2_estimate(const TargetFunction& f, double delta, const GridSpec& grid) {
  if (!(delta > 0.0)) throw DomainError("k2_estimate needs delta > 0");
  // Trapezoid rule for the standard normal density on [-8, 8]; the weights
  // are renormalized so constants and (by symmetry) lines are reproduced.
  std::vector<double> z(kKernelNodes);
  std::vector<double> w(kKernelNodes);
  double wsum = 0.0;
  for (int j = 0; j < kKernelNodes; ++j) {
    z[j] = -kKernelHalfWidth + 2.0 * kKernelHalfWidth * j / (kKernelNodes - 1);
    w[j] = std::exp(-0.5 * z[j] * z[j]);
    wsum += w[j];
  }
  for (double& wj : w) wj /= wsum;

  const auto xs = grid.values();
  const auto fs = sample(f, xs);
  const double d = grid.spacing();
  double best = std::numeric_limits<double>::infinity();
  for (int b = 0; b < kBandwidths; ++b) {
    const double h =
        delta / 32.0 * std::pow(128.0, static_cast<double>(b) / (kBandwidths - 1));
    const auto smooth = [&](double x) {
      double acc = 0.0;
      for (int j = 0; j < kKernelNodes; ++j) acc += w[j] * f(x + h * z[j]);
      return acc;
    };
    std::vector<double> gap(xs.size());
    std::vector<double> curvature(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
      const double g0 = smooth(xs[i]);
      gap[i] = std::abs(fs[i] - g0);
      curvature[i] =
          std::abs(smooth(xs[i] + d) - 2.0 * g0 + smooth(xs[i] - d)) / (d * d);
    });
    best = std::min(best, reduce_max(gap) + delta * reduce_max(curvature));
  }
  return best;
}

BoundReport check_rate_theorem(const OperatorInstance& op,
                               const TargetFunction& f, const GridSpec& grid) {
  require_bounded(f, "check_rate_theorem");
  if (!f.meta().growth) {
    throw DomainError("check_rate_theorem requires growth metadata");
  }
  const auto dn = delta_n(op, grid);
  const double root = std::sqrt(std::max(dn.corrected, 0.0));
  const auto ext = node_grid(op, grid, root / 20.0);
  const double omega = root > 0.0 ? modulus(f, root, ext) : 0.0;
  const double root_printed = std::sqrt(std::max(dn.printed, 0.0));
  const double omega_printed =
      root_printed > 0.0 ? modulus(f, root_printed, ext) : 0.0;

  const auto xs = grid.values();
  std::vector<BoundPoint> pts(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    pts[i] = {xs[i], residual(op, f, xs[i]), 2.0 * omega, 0.0};
  });
  double printed_margin = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    printed_margin = std::min(printed_margin, 2.0 * omega_printed - p.lhs);
  }
  return BoundReport::assemble(
      "rate", std::move(pts),
      {{"delta_n", dn.corrected},
       {"delta_n_printed", dn.printed},
       {"omega", omega},
       {"rhs_printed", 2.0 * omega_printed},
       {"min_margin_printed", printed_margin}});
}

BoundReport check_lipschitz_theorem(const OperatorInstance& op,
                                    const TargetFunction& f, double f_lo,
                                    double f_hi, const GridSpec& grid) {
  const auto& lip = f.meta().lipschitz;
  if (!lip) {
    throw DomainError("check_lipschitz_theorem requires Lipschitz metadata");
  }
  if (!(f_lo <= f_hi)) throw DomainError("set F needs f_lo <= f_hi");
  op.check_domain(f_lo);
  op.check_domain(f_hi);
  const auto dn = delta_n(op, grid);
  const double core = std::pow(std::max(dn.corrected, 0.0), lip->alpha / 2.0);
  const auto xs = grid.values();
  std::vector<BoundPoint> pts(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    const double dist = std::max({f_lo - x, x - f_hi, 0.0});
    pts[i] = {x, residual(op, f, x),
              lip->M * (core + std::pow(dist, lip->alpha)), 0.0};
  });
  return BoundReport::assemble("lipschitz", std::move(pts),
                               {{"delta_n", dn.corrected},
                                {"M", lip->M},
                                {"alpha", lip->alpha},
                                {"F_lo", f_lo},
                                {"F_hi", f_hi}});
}

BoundReport check_maximal_theorem(const OperatorInstance& op,
                                  const TargetFunction& f, double alpha,
                                  const GridSpec& grid) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("check_maximal_theorem needs alpha in (0,1]");
  }
  const auto dn = delta_n(op, grid);
  const double core = std::pow(std::max(dn.corrected, 0.0), alpha / 2.0);
  const auto ext = node_grid(op, grid, 0.0);
  const auto xs = grid.values();
  std::vector<BoundPoint> pts(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    pts[i] = {x, residual(op, f, x),
              lipschitz_maximal(f, x, alpha, ext) * core, 0.0};
  });
  return BoundReport::assemble(
      "maximal", std::move(pts),
      {{"delta_n", dn.corrected}, {"alpha", alpha}});
}

LocalReport check_local_theorem(const OperatorInstance& op,
                                const TargetFunction& f, const GridSpec& grid) {
  require_bounded(f, "check_local_theorem");
  LocalReport out;
  const auto ph = phi_n(op, grid);
  out.phi = ph.corrected;
  out.phi_printed = ph.printed;

  const auto xs = grid.values();
  std::vector<double> shifts(xs.size());
  std::vector<double> lhs(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    shifts[i] = op.shift(xs[i]);
    lhs[i] = residual(op, f, xs[i]);
  });
  const double shift_sup = reduce_max(shifts);
  const double root = std::sqrt(std::max(out.phi, 0.0));
  double resolution = root;
  if (shift_sup > 0.0) resolution = std::min(resolution, shift_sup);
  const auto ext = node_grid(op, grid, resolution / 20.0);

  out.omega2 = root > 0.0 ? second_modulus(f, root, ext) : 0.0;
  out.omega2_printed =
      out.phi_printed > 0.0 ? second_modulus(f, out.phi_printed, ext) : 0.0;
  out.shift_term = shift_sup > 0.0 ? modulus(f, shift_sup, ext) : 0.0;

  for (double v : lhs) {
    const double excess = v - out.shift_term;
    if (excess <= 0.0) continue;
    if (out.omega2 > 0.0) {
      out.k_hat = std::max(out.k_hat, excess / out.omega2);
    } else if (excess > 1e-12) {
      out.k_hat = std::numeric_limits<double>::infinity();
    }
  }
  std::vector<BoundPoint> pts(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pts[i] = {xs[i], lhs[i], out.k_hat * out.omega2 + out.shift_term, 0.0};
  }
  out.report = BoundReport::assemble("local", std::move(pts),
                                     {{"k_hat", out.k_hat},
                                      {"phi_n", out.phi},
                                      {"phi_n_printed", out.phi_printed},
                                      {"omega2", out.omega2},
                                      {"omega2_printed", out.omega2_printed},
                                      {"shift_sup", shift_sup},
                                      {"shift_term", out.shift_term}});
  return out;
}

}  // namespace qapprox
