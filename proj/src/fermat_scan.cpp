#include "ladderlab/fermat_scan.hpp"

#include <algorithm>
#include <tuple>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>

#include "ladderlab/arithmetic.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/gamma_lab.hpp"
#include "ladderlab/parallel.hpp"

namespace ladderlab {
namespace {

__extension__ typedef __int128 Int128;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::int64_t checked_pow(std::int64_t base, int n, std::int64_t x, std::int64_t y, std::int64_t z) {
  std::int64_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw OverflowError("Fermat rational overflows int64 at (" + std::to_string(x) + ", " +
                          std::to_string(y) + ", " + std::to_string(z) + ", n=" + std::to_string(n) + ")");
    }
  }
  return result;
}

// |A - B| / B compared exactly.
bool closer_to_one(const FermatRational& a, const FermatRational& b) {
  const Int128 da = a.numerator > a.denominator ? a.numerator - a.denominator : a.denominator - a.numerator;
  const Int128 db = b.numerator > b.denominator ? b.numerator - b.denominator : b.denominator - b.numerator;
  const Int128 lhs = da * b.denominator;
  const Int128 rhs = db * a.denominator;
  if (lhs != rhs) return lhs < rhs;
  return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
}

enum class Scale { kLinear, kRatio, kLog, kLogRatio };

Scale scale_of(Equivalent id) {
  switch (id) {
    case Equivalent::kZetaRatio: return Scale::kRatio;
    case Equivalent::kZetaLog:
    case Equivalent::kDLog: return Scale::kLog;
    case Equivalent::kZetaLogRatio: return Scale::kLogRatio;
    default: return Scale::kLinear;
  }
}

double target_of(Equivalent id, double q) {
  switch (id) {
    case Equivalent::kT1: return q / kPi;
    case Equivalent::kT2: return (1.0 + kEuler) * q / kPi;
    case Equivalent::kGammaExp: return std::exp(q);
    default: return q;
  }
}

double forbidden_of(Equivalent id) { return target_of(id, 1.0); }

// Base points at tau, largest last.
std::vector<double> base_points(Scale scale, const FermatRational& q, double tau) {
  const auto A = static_cast<double>(q.numerator);
  const auto B = static_cast<double>(q.denominator);
  switch (scale) {
    case Scale::kLinear: return {q.value * tau / kOneMinusEuler};
    case Scale::kRatio: {
      double a = A * tau / kOneMinusEuler, b = B * tau / kOneMinusEuler;
      return {std::min(a, b), std::max(a, b)};
    }
    case Scale::kLog: return {std::exp(q.value * std::log(tau))};
    case Scale::kLogRatio: {
      double a = std::exp(A * std::log(tau)), b = std::exp(B * std::log(tau));
      return {std::min(a, b), std::max(a, b)};
    }
  }
  return {};
}

double tau_for_anchor(Scale scale, const FermatRational& q, double anchor) {
  const auto top = static_cast<double>(std::max(q.numerator, q.denominator));
  switch (scale) {
    case Scale::kLinear: return anchor * kOneMinusEuler / q.value;
    case Scale::kRatio: return anchor * kOneMinusEuler / top;
    case Scale::kLog: return std::exp(std::log(anchor) / q.value);
    case Scale::kLogRatio: return std::exp(std::log(anchor) / top);
  }
  return kNaN;
}

struct Cell {
  double value = 0.0;
  double err = 0.0;
};

struct Segment {
  double value = 0.0;
  double err = 0.0;
};

Segment segment_at(Ladder& ladder, double T) {
  const RootResult r = ladder.reverse_solve(T, ladder.tolerance());
  const IntegralResult seg = ladder.hl().segment(T, r.root);
  return {seg.value, seg.abs_error_estimate + std::abs(r.residual)};
}

double lngamma_rounding(double t) {
  return 8.0 * std::numeric_limits<double>::epsilon() * t * std::log(t);
}

Cell evaluate_at(Ladder& ladder, Equivalent id, const FermatRational& q, double tau,
                 const std::vector<double>& bases, SummandReading reading) {
  switch (id) {
    case Equivalent::kZeta: {
      const Segment s = segment_at(ladder, bases[0]);
      return {s.value / tau, s.err / tau};
    }
    case Equivalent::kZetaRatio: {
      const double a = static_cast<double>(q.numerator) * tau / kOneMinusEuler;
      const double b = static_cast<double>(q.denominator) * tau / kOneMinusEuler;
      const Segment sa = segment_at(ladder, a);
      const Segment sb = segment_at(ladder, b);
      const double v = sa.value / sb.value;
      return {v, std::abs(v) * (sa.err / sa.value + sb.err / sb.value)};
    }
    case Equivalent::kZetaLog: {
      const Segment s = segment_at(ladder, bases[0]);
      return {std::log(s.value) / std::log(tau), (s.err / s.value) / std::log(tau)};
    }
    case Equivalent::kZetaLogRatio: {
      const double a = std::exp(static_cast<double>(q.numerator) * std::log(tau));
      const double b = std::exp(static_cast<double>(q.denominator) * std::log(tau));
      const Segment sa = segment_at(ladder, a);
      const Segment sb = segment_at(ladder, b);
      const double la = std::log(sa.value), lb = std::log(sb.value);
      const double v = la / lb;
      return {v, std::abs(v) * ((sa.err / sa.value) / std::abs(la) + (sb.err / sb.value) / std::abs(lb))};
    }
    case Equivalent::kD:
    case Equivalent::kDLog: {
      const LadderStep r = ladder_step(ladder, bases[0]);
      const auto diff = static_cast<double>(dirichlet_D(r.upper) - dirichlet_D(r.lower));
      const double diff_err = (std::log(r.upper) + 2.0 * kEuler) * r.delta;
      if (id == Equivalent::kD) return {diff / tau, diff_err / tau};
      return {std::log(diff) / std::log(tau), (diff_err / diff) / std::log(tau)};
    }
    case Equivalent::kT1:
    case Equivalent::kT2: {
      const LadderStep r = ladder_step(ladder, bases[0]);
      const GramSlice slice = gram_points(r.lower, r.upper);
      const bool second = id == Equivalent::kT2;
      const double sum = second ? titchmarsh_T2(slice, reading) : titchmarsh_T1(slice, reading);
      const double typical = second ? 2.0 * (1.0 + kEuler) : 2.0;
      const double err = r.delta * std::log(r.upper / kTwoPi) / kTwoPi * typical + 1e-12 * r.upper;
      return {sum / tau, err / tau};
    }
    case Equivalent::kGamma:
    case Equivalent::kGammaExp: {
      const LadderStep r = ladder_step(ladder, bases[0]);
      const double v = (ln_gamma(r.upper) - ln_gamma(r.lower)) / tau;
      const double err = (std::log(r.upper) * r.delta + lngamma_rounding(r.upper)) / tau;
      if (id == Equivalent::kGamma) return {v, err};
      return {std::exp(v), std::exp(v) * err};
    }
  }
  throw DomainError("unhandled equivalent");
}

}  // namespace

FermatRational make_fermat_rational(std::int64_t x, std::int64_t y, std::int64_t z, int n) {
  if (n < 3) throw DomainError("Fermat rational needs n >= 3");
  if (x < 1 || y < 1 || z < 1) throw DomainError("Fermat rational needs positive x, y, z");
  FermatRational q;
  q.x = x;
  q.y = y;
  q.z = z;
  q.n = n;
  const std::int64_t xn = checked_pow(x, n, x, y, z);
  const std::int64_t yn = checked_pow(y, n, x, y, z);
  q.denominator = checked_pow(z, n, x, y, z);
  if (__builtin_add_overflow(xn, yn, &q.numerator)) {
    throw OverflowError("x^n + y^n overflows int64 at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ", " + std::to_string(z) + ", n=" + std::to_string(n) + ")");
  }
  if (q.numerator == q.denominator) throw FermatViolation(x, y, z, n);
  q.value = static_cast<double>(static_cast<long double>(q.numerator) /
                                static_cast<long double>(q.denominator));
  return q;
}

std::vector<FermatRational> enumerate_fermat_rationals(int n, std::int64_t max_xyz,
                                                       std::optional<double> window_eps) {
  if (n < 3) throw DomainError("enumerate_fermat_rationals: n must be >= 3");
  if (max_xyz < 1) throw DomainError("enumerate_fermat_rationals: max_xyz must be >= 1");
  if (window_eps && !(*window_eps > 0.0)) throw DomainError("window epsilon must be > 0");

  // Iterating x, y, z ascending means the first triple seen for a value is
  // the lexicographically smallest one.
  std::map<std::pair<std::int64_t, std::int64_t>, FermatRational> distinct;
  for (std::int64_t x = 1; x <= max_xyz; ++x) {
    for (std::int64_t y = 1; y <= max_xyz; ++y) {
      for (std::int64_t z = 1; z <= max_xyz; ++z) {
        const FermatRational q = make_fermat_rational(x, y, z, n);
        if (window_eps) {
          const long double gap = std::abs(static_cast<long double>(q.numerator) -
                                           static_cast<long double>(q.denominator));
          if (!(gap < static_cast<long double>(*window_eps) * q.denominator)) continue;
        }
        const std::int64_t g = std::gcd(q.numerator, q.denominator);
        distinct.emplace(std::make_pair(q.numerator / g, q.denominator / g), q);
      }
    }
  }
  std::vector<FermatRational> out;
  out.reserve(distinct.size());
  for (auto& [key, q] : distinct) out.push_back(q);
  std::sort(out.begin(), out.end(), closer_to_one);
  return out;
}

const char* to_string(Equivalent id) {
  switch (id) {
    case Equivalent::kZeta: return "zeta";
    case Equivalent::kZetaRatio: return "zeta-ratio";
    case Equivalent::kZetaLog: return "zeta-log";
    case Equivalent::kZetaLogRatio: return "zeta-log-ratio";
    case Equivalent::kD: return "d";
    case Equivalent::kDLog: return "d-log";
    case Equivalent::kT1: return "t1";
    case Equivalent::kT2: return "t2";
    case Equivalent::kGamma: return "gamma";
    case Equivalent::kGammaExp: return "gamma-exp";
  }
  return "?";
}

std::vector<Equivalent> all_equivalents() {
  return {Equivalent::kZeta, Equivalent::kZetaRatio, Equivalent::kZetaLog, Equivalent::kZetaLogRatio,
          Equivalent::kD,    Equivalent::kDLog,      Equivalent::kT1,      Equivalent::kT2,
          Equivalent::kGamma, Equivalent::kGammaExp};
}

Equivalent parse_equivalent(const std::string& name) {
  for (Equivalent id : all_equivalents()) {
    if (name == to_string(id)) return id;
  }
  throw DomainError("unknown functional '" + name +
                    "' (expected zeta|zeta-ratio|zeta-log|zeta-log-ratio|d|d-log|t1|t2|gamma|gamma-exp)");
}

ScanRow evaluate_equivalent(Ladder& ladder, Equivalent id, const FermatRational& q,
                            const ScanOptions& options) {
  ScanRow row;
  row.functional = to_string(id);
  row.q = q;
  row.target = target_of(id, q.value);
  row.forbidden = forbidden_of(id);
  row.tau_max = row.value = row.distance = row.est_error = kNaN;

  const Scale scale = scale_of(id);
  std::vector<double> candidates;
  if (options.tau_grid) {
    candidates = *options.tau_grid;
  } else {
    for (double anchor : options.anchors) candidates.push_back(tau_for_anchor(scale, q, anchor));
  }
  const bool log_scale = scale == Scale::kLog || scale == Scale::kLogRatio;
  std::vector<double> tops;  // largest base point per used tau
  try {
    for (double tau : candidates) {
      if (!std::isfinite(tau) || !(tau > (log_scale ? 1.0 : 0.0))) continue;
      const std::vector<double> bases = base_points(scale, q, tau);
      const bool feasible = std::all_of(bases.begin(), bases.end(), [&](double b) {
        return std::isfinite(b) && b >= ladder.floor() && b <= options.t_cap &&
               (!log_scale || b <= options.exp_guard);
      });
      if (!feasible) continue;
      if (!row.taus.empty() && !(tau > row.taus.back())) continue;
      const Cell cell = evaluate_at(ladder, id, q, tau, bases, options.reading);
      row.taus.push_back(tau);
      row.values.push_back(cell.value);
      tops.push_back(bases.back());
      row.est_error = cell.err;
    }
  } catch (const Error& e) {
    row.status = std::string("error: ") + e.what();
    row.tau_max = row.value = row.distance = row.est_error = kNaN;
    return row;
  }
  if (row.taus.empty()) {
    row.status = kInfeasible;
    return row;
  }

  const std::size_t last = row.taus.size() - 1;
  row.tau_max = row.taus[last];
  row.value = row.values[last];
  row.distance = std::abs(row.value - row.forbidden);
  if (last == 0) {
    row.est_error = std::numeric_limits<double>::infinity();
  } else {
    // Convergence is linear in s = 1 / ln T; the remaining tail is the last
    // step extrapolated to s = 0.
    const double s_n = 1.0 / std::log(tops[last]);
    const double s_prev = 1.0 / std::log(tops[last - 1]);
    const double tail = std::abs(row.values[last] - row.values[last - 1]) * s_n / (s_prev - s_n);
    row.est_error += tail;
  }
  row.status = row.distance > row.est_error ? kResolved : kUnresolved;
  return row;
}

ScanReport scan(Ladder& ladder, const std::vector<Equivalent>& ids, int n, std::int64_t max_xyz,
                const ScanOptions& options) {
  ScanReport report;
  report.n = n;
  report.max_xyz = max_xyz;
  report.window_eps = options.window_eps;
  for (Equivalent id : ids) report.functionals.emplace_back(to_string(id));

  const std::vector<FermatRational> rationals = enumerate_fermat_rationals(n, max_xyz, options.window_eps);

  std::string functionals, grid;
  for (std::size_t i = 0; i < report.functionals.size(); ++i) {
    functionals += (i ? "," : "") + report.functionals[i];
  }
  const std::vector<double>& g = options.tau_grid ? *options.tau_grid : options.anchors;
  for (std::size_t i = 0; i < g.size(); ++i) grid += (i ? "," : "") + format_g17(g[i]);
  report.metadata = {
      {"functionals", functionals},
      {"n", std::to_string(n)},
      {"max_xyz", std::to_string(max_xyz)},
      {"window_eps", options.window_eps ? format_g17(*options.window_eps) : "none"},
      {"grid_mode", options.tau_grid ? "tau" : "anchor"},
      {"grid", grid},
      {"t_cap", format_g17(options.t_cap)},
      {"exp_guard", format_g17(options.exp_guard)},
      {"summand_reading", to_string(options.reading)},
      {"c0_convention", "0"},
      {"ladder_tolerance", format_g17(ladder.tolerance())},
      {"ladder_floor", format_g17(ladder.floor())},
      {"quad_tolerance", format_g17(ladder.hl().tail_tolerance())},
      {"engine_version", CheckpointCache::kEngineVersion},
      {"est_error", "numeric error at tau_max + |v_n - v_(n-1)| s_n / (s_(n-1) - s_n), s = 1/ln(largest base point)"},
      {"distinct_rationals", std::to_string(rationals.size())},
  };

  report.rows.resize(ids.size() * rationals.size());
  parallel_for(report.rows.size(), options.threads, [&](std::size_t i) {
    report.rows[i] = evaluate_equivalent(ladder, ids[i / rationals.size()], rationals[i % rationals.size()], options);
  });
  return report;
}

void write_scan_json(std::ostream& out, const ScanReport& report) {
  JsonWriter w(out);
  w.begin_object();
  w.key("metadata");
  w.metadata(report.metadata);
  w.key("rows");
  w.begin_array();
  for (const ScanRow& row : report.rows) {
    w.begin_object();
    w.key("functional");
    w.value(row.functional);
    w.key("x");
    w.value(static_cast<long long>(row.q.x));
    w.key("y");
    w.value(static_cast<long long>(row.q.y));
    w.key("z");
    w.value(static_cast<long long>(row.q.z));
    w.key("n");
    w.value(row.q.n);
    w.key("q");
    w.value(row.q.value);
    w.key("tau_max");
    w.value(row.tau_max);
    w.key("value");
    w.value(row.value);
    w.key("target");
    w.value(row.target);
    w.key("forbidden");
    w.value(row.forbidden);
    w.key("distance");
    w.value(row.distance);
    w.key("est_error");
    w.value(row.est_error);
    w.key("status");
    w.value(row.status);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

}  // namespace ladderlab
