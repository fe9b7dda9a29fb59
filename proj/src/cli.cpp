#include "qapprox/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "qapprox/analysis.hpp"
#include "qapprox/csv.hpp"
#include "qapprox/statconv.hpp"

namespace qapprox::cli {

namespace {

const std::vector<std::string> kCommands = {"identities", "moments",
                                            "converge",   "rates",
                                            "local",      "statdemo"};

std::optional<double> as_real(const std::string& text) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) return std::nullopt;
  return v;
}

bool is_schedule_name(const std::string& s) {
  return s == "smooth" || s == "spiky";
}

double q_for(const RunConfig& c, int n) {
  if (is_schedule_name(c.q)) return ScheduleSpec::parse(c.q).q(n);
  return *as_real(c.q);
}

double bn_for(const RunConfig& c, int n) {
  if (c.bn == "sqrt") return std::sqrt(static_cast<double>(n));
  if (c.bn == "n14") return std::pow(static_cast<double>(n), 0.25);
  return *as_real(c.bn);
}

OperatorInstance operator_for(const RunConfig& c) {
  return OperatorInstance(c.n, QValue(q_for(c, c.n)), bn_for(c, c.n),
                          AppellFamily::parse(c.family));
}

GridSpec grid_for(const RunConfig& c, double x_max) {
  const double hi = c.grid_hi == "auto" ? OperatorInstance::kSafety * x_max
                                        : *as_real(c.grid_hi);
  return GridSpec(c.grid_lo, hi, c.points);
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + "_" + suffix;
  }
  return path.substr(0, dot) + "_" + suffix + path.substr(dot);
}

// Opens the CSV target (if any) and stamps the resolved configuration.
class CsvSink {
 public:
  CsvSink(const RunConfig& c, const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw ConfigError("cannot open output file " + path);
    *file_ << "# qapprox " << c.resolved() << '\n';
  }
  bool active() const { return file_ != nullptr; }
  std::ostream& stream() { return *file_; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

class Checks {
 public:
  explicit Checks(std::string command) : command_(std::move(command)) {}

  void expect(bool ok, const std::string& name, const std::string& detail) {
    ++count_;
    if (!ok) failures_.push_back(name + " " + detail);
  }

  int finish(std::ostream& log) const {
    for (const auto& f : failures_) {
      log << "FAIL command=" << command_ << " check=" << f << '\n';
    }
    if (!failures_.empty()) return kCheckFailed;
    log << "OK command=" << command_ << " checks=" << count_ << '\n';
    return kOk;
  }

 private:
  std::string command_;
  int count_ = 0;
  std::vector<std::string> failures_;
};

double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- identities

int run_identities(const RunConfig& c, std::ostream& log) {
  std::vector<double> qs = {0.5, 0.8, 0.95};
  if (auto q = as_real(c.q);
      q && std::find(qs.begin(), qs.end(), *q) == qs.end()) {
    qs.push_back(*q);
  }
  CsvSink sink(c, c.out);
  if (sink.active()) {
    sink.stream() << "identity,q,max_residual,tolerance,asserted,pass\n";
  }
  Checks checks("identities");
  const auto record = [&](const std::string& name, double q, double residual,
                          double tol, bool asserted) {
    const bool pass = residual <= tol;
    if (asserted) {
      checks.expect(pass, name, "q=" + csv::real(q) +
                                    " residual=" + csv::real(residual));
    }
    log << name << " q=" << csv::real(q) << " residual=" << csv::real(residual)
        << (asserted ? (pass ? " ok" : " FAIL") : " (reported)") << '\n';
    if (sink.active()) {
      csv::write_row(sink.stream(),
                     {name, csv::real(q), csv::real(residual), csv::real(tol),
                      asserted ? "1" : "0", pass ? "1" : "0"});
    }
  };

  const RealFunction sq = [](double x) { return x * x; };
  const RealFunction cube = [](double x) { return x * x * x; };
  const std::vector<AppellFamily> families = {AppellFamily::parse("one"),
                                              AppellFamily::parse("affine"),
                                              AppellFamily::parse("quad")};
  for (double qv : qs) {
    const QValue q(qv);
    const double radius = q.radius();

    double exp_product = 0.0;
    double bound = 0.0;
    int monotone_violations = 0;
    double previous = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = 0.95 * radius * i / 99.0;
      const double ex = q_exp(x, q);
      exp_product = std::max(exp_product,
                             std::abs(ex * q_exp_entire(-x, q) - 1.0));
      bound = std::max(bound,
                       q_exp_entire(-x, q) * q_exp(qv * x, q) - 1.0);
      if (i > 0 && !(ex > previous)) ++monotone_violations;
      previous = ex;
    }
    record("exp_product", qv, exp_product, 1e-10, true);
    record("exp_shift_bound", qv, std::max(bound, 0.0), 1e-12, true);
    record("exp_monotone", qv, monotone_violations, 0.0, true);

    double rule1 = 0.0;
    double rule2 = 0.0;
    for (double x : {0.5, 1.0, 2.0}) {
      const double lhs =
          q_derivative([](double t) { return t * t * t * t * t; }, x, q);
      const double dq_f = q_derivative(sq, x, q);
      const double dq_g = q_derivative(cube, x, q);
      rule1 = std::max(rule1, rel_gap(lhs, sq(qv * x) * dq_g + cube(x) * dq_f));
      rule2 = std::max(rule2, rel_gap(lhs, sq(x) * dq_g + cube(qv * x) * dq_f));
    }
    record("product_rule_shifted_first", qv, rule1, 1e-9, true);
    record("product_rule_shifted_second", qv, rule2, 1e-9, true);

    double dq_small = 0.0;
    double dq_entire = 0.0;
    for (double x : {0.25, 0.5, 1.0}) {
      const double a = 0.3;
      const double lhs =
          q_derivative([&](double t) { return q_exp(a * t, q); }, x, q);
      dq_small = std::max(dq_small, rel_gap(lhs, a * q_exp(a * x, q)));
      const double b = 0.4;
      const double lhs_e =
          q_derivative([&](double t) { return q_exp_entire(b * t, q); }, x, q);
      dq_entire =
          std::max(dq_entire, rel_gap(lhs_e, b * q_exp_entire(b * qv * x, q)));
    }
    record("dq_exp", qv, dq_small, 1e-9, true);
    record("dq_exp_entire", qv, dq_entire, 1e-9, true);

    for (const auto& fam : families) {
      double g0 = 0.0;
      double g1 = 0.0;
      double g2 = 0.0;
      double g2_printed = 0.0;
      for (int j = 0; j < 20; ++j) {
        const double y = 0.9 * radius * j / 19.0;
        g0 = std::max(g0, rel_gap(appell_power_sum(fam, y, q, 0),
                                  weight_sum_closed(fam, y, q)));
        g1 = std::max(g1, rel_gap(appell_power_sum(fam, y, q, 1),
                                  first_sum_closed(fam, y, q)));
        const double s2 = appell_power_sum(fam, y, q, 2);
        g2 = std::max(g2, rel_gap(s2, second_sum_closed(fam, y, q)));
        g2_printed =
            std::max(g2_printed, rel_gap(s2, second_sum_printed(fam, y, q)));
      }
      record("weight_sum_" + fam.name(), qv, g0, 1e-9, true);
      record("first_sum_" + fam.name(), qv, g1, 1e-9, true);
      record("second_sum_" + fam.name(), qv, g2, 1e-9, true);
      record("second_sum_printed_" + fam.name(), qv, g2_printed, 1e-9, false);
    }
  }
  return checks.finish(log);
}

// ------------------------------------------------------------------- moments

int run_moments(const RunConfig& c, std::ostream& log) {
  const auto op = operator_for(c);
  const auto grid = grid_for(c, op.x_max());
  require_within(grid, op);
  CsvSink sink(c, c.out);
  if (sink.active()) {
    sink.stream() << "x,i,closed,series,printed,closed_minus_series,"
                     "series_minus_printed,rel_closed_gap,expected_printed_gap\n";
  }
  const auto& fn = op.functionals();
  const bool shift_free = fn.dq_a1 == 0.0 && fn.dq2_a1 == 0.0 && fn.dq_aq == 0.0;
  const double q = op.q().value();
  TruncationPolicy trunc;
  trunc.tol = c.tol;
  Checks checks("moments");
  double worst_closed = 0.0;
  double worst_printed = 0.0;
  for (int j = 0; j < grid.points(); ++j) {
    const double x = grid.at(j);
    for (int i = 0; i <= 2; ++i) {
      const double closed = moment_closed(op, i, x);
      const double series = moment_series(op, i, x, trunc);
      const double printed = moment_printed(op, i, x);
      const double gap = rel_gap(closed, series);
      worst_closed = std::max(worst_closed, gap);
      worst_printed = std::max(worst_printed, std::abs(series - printed));
      checks.expect(gap <= 1e-9, "closed_vs_series",
                    "x=" + csv::real(x) + " i=" + std::to_string(i) +
                        " rel=" + csv::real(gap));
      // For shift-free symbols the printed e_2 moment misses exactly
      // x h - (1 - q) x^2.
      double expected = std::numeric_limits<double>::quiet_NaN();
      if (shift_free) {
        expected = i == 2 ? x * op.step() - (1.0 - q) * x * x : 0.0;
        const double miss = std::abs(series - printed - expected);
        checks.expect(miss <= 1e-9 * std::max(1.0, std::abs(series)),
                      "printed_gap", "x=" + csv::real(x) + " i=" +
                                         std::to_string(i) +
                                         " miss=" + csv::real(miss));
      }
      if (sink.active()) {
        csv::write_row(sink.stream(),
                       {csv::real(x), std::to_string(i), csv::real(closed),
                        csv::real(series), csv::real(printed),
                        csv::real(closed - series), csv::real(series - printed),
                        csv::real(gap), csv::real(expected)});
      }
    }
  }
  log << "family=" << op.family().name() << " q=" << csv::real(op.q().value())
      << " n=" << op.n() << " b_n=" << csv::real(op.b_n())
      << " max_rel(closed-series)=" << csv::real(worst_closed)
      << " max_abs(printed-series)=" << csv::real(worst_printed) << '\n';
  return checks.finish(log);
}

// ------------------------------------------------------------------ converge

ScheduleSpec schedule_for(const RunConfig& c) {
  if (!c.schedule.empty()) return ScheduleSpec::parse(c.schedule);
  if (is_schedule_name(c.q)) return ScheduleSpec::parse(c.q);
  return ScheduleSpec(ScheduleSpec::Kind::kSmooth);
}

double schedule_x_max(const ScheduleSpec& s, const RunConfig& c,
                      const AppellFamily& family) {
  double hi = std::numeric_limits<double>::infinity();
  for (int n : c.ns) hi = std::min(hi, s.instance(n, family).x_max());
  return hi;
}

int run_converge(const RunConfig& c, std::ostream& log) {
  const auto schedule = schedule_for(c);
  const auto family = AppellFamily::parse(c.family);
  const auto grid = grid_for(c, schedule_x_max(schedule, c, family));
  const auto v0 = korovkin_curve(schedule, family, 0, c.ns, grid);
  const auto v1 = korovkin_curve(schedule, family, 1, c.ns, grid);
  const auto v2 = korovkin_curve(schedule, family, 2, c.ns, grid);
  CsvSink sink(c, c.out);
  if (sink.active()) write_korovkin_csv(sink.stream(), v0, v1, v2);

  Checks checks("converge");
  std::vector<double> e1, e2, ratio;
  for (std::size_t i = 0; i < v0.points.size(); ++i) {
    const auto& p = v0.points[i];
    log << "n=" << p.n << " q_n=" << csv::real(p.q_n)
        << " bn/[n]=" << csv::real(p.bn_over_nq)
        << " err0=" << csv::real(p.error)
        << " err1=" << csv::real(v1.points[i].error)
        << " err2=" << csv::real(v2.points[i].error) << '\n';
    checks.expect(p.error <= 1e-10, "e0_reproduced",
                  "n=" + std::to_string(p.n) + " err=" + csv::real(p.error));
    e1.push_back(v1.points[i].error);
    e2.push_back(v2.points[i].error);
    ratio.push_back(p.bn_over_nq);
  }
  if (schedule.kind() == ScheduleSpec::Kind::kSmooth) {
    checks.expect(strictly_decreasing(ratio), "bn_over_nq_decreasing", "");
    if (family_functionals(family, QValue(0.5)).dq_a1 > 0.0) {
      checks.expect(strictly_decreasing(e1), "error_v1_decreasing", "");
    } else {
      checks.expect(*std::max_element(e1.begin(), e1.end()) <= 1e-10,
                    "error_v1_exact", "");
    }
    checks.expect(strictly_decreasing(e2), "error_v2_decreasing", "");
  }
  return checks.finish(log);
}

// --------------------------------------------------------------------- rates

int run_rates(const RunConfig& c, std::ostream& log) {
  const auto op = operator_for(c);
  const auto grid = grid_for(c, op.x_max());
  const auto f = TargetFunction::parse(c.function);
  const auto lip_f = TargetFunction::parse(c.lip_function);
  const std::vector<BoundReport> reports = {
      check_rate_theorem(op, f, grid),
      check_lipschitz_theorem(op, lip_f, c.f_lo, c.f_hi, grid),
      check_maximal_theorem(op, lip_f, c.alpha, grid)};
  Checks checks("rates");
  for (const auto& r : reports) {
    log << r.summary_line() << '\n';
    checks.expect(r.pass, r.theorem,
                  "min_margin=" + csv::real(r.min_margin));
    if (!c.out.empty()) {
      CsvSink sink(c, with_suffix(c.out, r.theorem));
      r.write_csv(sink.stream());
    }
  }
  return checks.finish(log);
}

// --------------------------------------------------------------------- local

int run_local(const RunConfig& c, std::ostream& log) {
  const auto f = TargetFunction::parse(c.function);
  Checks checks("local");
  if (c.schedule.empty() && !is_schedule_name(c.q)) {
    const auto op = operator_for(c);
    const auto grid = grid_for(c, op.x_max());
    const auto local = check_local_theorem(op, f, grid);
    log << local.report.summary_line() << '\n';
    checks.expect(local.k_hat <= 10.0, "k_hat_bounded",
                  "k_hat=" + csv::real(local.k_hat));
    CsvSink sink(c, c.out);
    if (sink.active()) local.report.write_csv(sink.stream());
    return checks.finish(log);
  }

  const auto schedule = schedule_for(c);
  const auto family = AppellFamily::parse(c.family);
  const auto grid = grid_for(c, schedule_x_max(schedule, c, family));
  CsvSink sink(c, c.out);
  if (sink.active()) {
    sink.stream() << "n,q_n,b_n,phi_n,phi_n_printed,omega2,omega2_printed,"
                     "shift_term,k_hat,pass\n";
  }
  double previous = std::numeric_limits<double>::infinity();
  for (int n : c.ns) {
    const auto op = schedule.instance(n, family);
    const auto local = check_local_theorem(op, f, grid);
    log << "n=" << n << ' ' << local.report.summary_line() << '\n';
    checks.expect(local.k_hat <= 10.0, "k_hat_bounded",
                  "n=" + std::to_string(n) + " k_hat=" + csv::real(local.k_hat));
    checks.expect(local.k_hat <= previous, "k_hat_non_increasing",
                  "n=" + std::to_string(n) + " k_hat=" + csv::real(local.k_hat));
    previous = local.k_hat;
    if (sink.active()) {
      csv::write_row(sink.stream(),
                     {std::to_string(n), csv::real(op.q().value()),
                      csv::real(op.b_n()), csv::real(local.phi),
                      csv::real(local.phi_printed), csv::real(local.omega2),
                      csv::real(local.omega2_printed),
                      csv::real(local.shift_term), csv::real(local.k_hat),
                      local.report.pass ? "1" : "0"});
    }
  }
  return checks.finish(log);
}

// ------------------------------------------------------------------ statdemo

double tail_sup_deviation(const ScheduleSpec& s, std::int64_t horizon) {
  double best = 0.0;
  for (std::int64_t k = horizon / 2 + 1; k <= horizon; ++k) {
    best = std::max(best, std::abs(s.q(k) - 1.0));
  }
  return best;
}

int run_statdemo(const RunConfig& c, std::ostream& log) {
  const ScheduleSpec spiky(ScheduleSpec::Kind::kSpiky);
  const ScheduleSpec smooth(ScheduleSpec::Kind::kSmooth);
  CsvSink sink(c, c.out);
  if (sink.active()) {
    sink.stream() << "N,square_density,spiky_st_density,smooth_st_density,"
                     "spiky_tail_sup_dev,smooth_tail_sup_dev\n";
  }
  Checks checks("statdemo");
  std::vector<double> spiky_density;
  std::vector<double> smooth_tail;
  double square_density_1e6 = -1.0;
  for (std::int64_t horizon : {100LL, 1000LL, 10000LL, 100000LL, 1000000LL}) {
    const double squares = natural_density(is_perfect_square, horizon);
    const double sp = st_limit_verify(
        [&](std::int64_t k) { return spiky.q(k); }, 1.0, c.eps, horizon);
    const double sm = st_limit_verify(
        [&](std::int64_t k) { return smooth.q(k); }, 1.0, c.eps, horizon);
    const double sp_tail = tail_sup_deviation(spiky, horizon);
    const double sm_tail = tail_sup_deviation(smooth, horizon);
    if (horizon == 1000000) square_density_1e6 = squares;
    spiky_density.push_back(sp);
    smooth_tail.push_back(sm_tail);
    checks.expect(sp_tail >= 0.4, "spiky_no_ordinary_limit",
                  "N=" + std::to_string(horizon));
    log << "N=" << horizon << " squares=" << csv::real(squares)
        << " spiky_st=" << csv::real(sp) << " smooth_st=" << csv::real(sm)
        << " spiky_tail_sup=" << csv::real(sp_tail)
        << " smooth_tail_sup=" << csv::real(sm_tail) << '\n';
    if (sink.active()) {
      csv::write_row(sink.stream(),
                     {std::to_string(horizon), csv::real(squares),
                      csv::real(sp), csv::real(sm), csv::real(sp_tail),
                      csv::real(sm_tail)});
    }
  }
  checks.expect(square_density_1e6 == 0.001, "square_density",
                "value=" + csv::real(square_density_1e6));
  checks.expect(strictly_decreasing(spiky_density), "spiky_st_density_decreasing",
                "");
  checks.expect(strictly_decreasing(smooth_tail), "smooth_tail_decreasing", "");
  return checks.finish(log);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void build_app(CLI::App& app, RunConfig& c) {
  app.add_option("command", c.command, "identities|moments|converge|rates|local|statdemo")
      ->check(CLI::IsMember(kCommands));
  app.add_option("--q", c.q, "deformation parameter or schedule name");
  app.add_option("--n", c.n, "operator order");
  app.add_option("--ns", c.ns, "comma-separated orders for schedules")
      ->delimiter(',');
  app.add_option("--bn", c.bn, "b_n rule: sqrt, n14, or a positive real");
  app.add_option("--family", c.family, "one, affine, quad, or a0,a1,...");
  app.add_option("--function", c.function,
                 "e0, e1, e2, sin, expneg, abspow:alpha:c");
  app.add_option("--lip-function", c.lip_function,
                 "function for the Lipschitz and maximal-function bounds");
  app.add_option("--schedule", c.schedule, "smooth or spiky");
  app.add_option("--grid-lo", c.grid_lo);
  app.add_option("--grid-hi", c.grid_hi, "real or auto");
  app.add_option("--points", c.points);
  app.add_option("--F-lo", c.f_lo);
  app.add_option("--F-hi", c.f_hi);
  app.add_option("--alpha", c.alpha);
  app.add_option("--eps", c.eps);
  app.add_option("--tol", c.tol);
  app.add_option("--out", c.out, "CSV output path");
  app.set_config("--config", "", "key=value configuration file");
}

}  // namespace

void RunConfig::validate() const {
  try {
    if (std::find(kCommands.begin(), kCommands.end(), command) ==
        kCommands.end()) {
      throw ConfigError("unknown or missing command '" + command + "'");
    }
    if (!is_schedule_name(q)) {
      const auto v = as_real(q);
      if (!v) throw ConfigError("--q must be a real or a schedule name");
      QValue{*v};
    }
    if (n < 1) throw ConfigError("--n must be positive");
    if (ns.empty()) throw ConfigError("--ns must not be empty");
    for (int k : ns) {
      if (k < 2) throw ConfigError("--ns entries must be at least 2");
    }
    if (bn != "sqrt" && bn != "n14") {
      const auto v = as_real(bn);
      if (!v || !(*v > 0.0)) throw ConfigError("--bn must be sqrt, n14 or > 0");
    }
    AppellFamily::parse(family);
    TargetFunction::parse(function);
    TargetFunction::parse(lip_function);
    if (!schedule.empty()) ScheduleSpec::parse(schedule);
    if (grid_hi != "auto") {
      const auto v = as_real(grid_hi);
      if (!v || !(*v > grid_lo)) {
        throw ConfigError("--grid-hi must be auto or a real above --grid-lo");
      }
    }
    if (!(grid_lo >= 0.0)) throw ConfigError("--grid-lo must be >= 0");
    if (points < 2) throw ConfigError("--points must be at least 2");
    if (!(f_lo <= f_hi)) throw ConfigError("--F-lo must not exceed --F-hi");
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw ConfigError("--alpha must lie in (0,1]");
    }
    if (!(eps > 0.0)) throw ConfigError("--eps must be positive");
    if (!(tol > 0.0)) throw ConfigError("--tol must be positive");
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::string RunConfig::resolved() const {
  std::ostringstream s;
  s << "command=" << command << " q=" << q << " n=" << n << " ns=" << join(ns)
    << " bn=" << bn << " family=" << family << " function=" << function
    << " lip_function=" << lip_function
    << " schedule=" << (schedule.empty() ? "-" : schedule)
    << " grid_lo=" << csv::real(grid_lo) << " grid_hi=" << grid_hi
    << " points=" << points << " F_lo=" << csv::real(f_lo)
    << " F_hi=" << csv::real(f_hi) << " alpha=" << csv::real(alpha)
    << " eps=" << csv::real(eps) << " tol=" << csv::real(tol);
  return s.str();
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"q-Favard-Szasz-Chlodowsky experiment runner", "qapprox"};
  build_app(app, c);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

int run(const RunConfig& config, std::ostream& log) {
  config.validate();
  if (config.command == "identities") return run_identities(config, log);
  if (config.command == "moments") return run_moments(config, log);
  if (config.command == "converge") return run_converge(config, log);
  if (config.command == "rates") return run_rates(config, log);
  if (config.command == "local") return run_local(config, log);
  return run_statdemo(config, log);
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const auto& a : args) {
    if (a == "-h" || a == "--help") {
      RunConfig c;
      CLI::App app{"q-Favard-Szasz-Chlodowsky experiment runner", "qapprox"};
      build_app(app, c);
      std::cout << app.help();
      return kOk;
    }
  }
  try {
    return run(parse_args(args), std::cout);
  } catch (const ConfigError& e) {
    std::cout << "FAIL error=config detail=\"" << e.what() << "\"\n";
    return kConfigError;
  } catch (const TruncationError& e) {
    std::cout << "FAIL error=truncation detail=\"" << e.what() << "\"\n";
    return kTruncationError;
  } catch (const Error& e) {
    std::cout << "FAIL error=domain detail=\"" << e.what() << "\"\n";
    return kDomainError;
  }
}

}  // namespace qapprox::cli
