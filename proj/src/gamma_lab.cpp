#include "ladderlab/gamma_lab.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>

#include "ladderlab/arithmetic.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/numeric.hpp"
#include "ladderlab/parallel.hpp"

namespace ladderlab {
namespace {

constexpr double kStirlingShift = 15.0;

// B_{2k} / (2k (2k - 1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,         -3617.0 / 122400.0,
};

double stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (std::size_t k = kStirling.size(); k-- > 0;) series = series * inv2 + kStirling[k];
  return (x - 0.5) * std::log(x) - x + 0.5 * kLn2Pi + series * inv;
}

// Rounding floor of a ln Gamma difference at argument scale t.
double lngamma_rounding(double t) { return 8.0 * std::numeric_limits<double>::epsilon() * t * std::log(t); }

Metadata base_metadata(Ladder& ladder, const GridOptions& options) {
  return {
      {"c0_convention", "0"},
      {"ladder_tolerance", format_g17(ladder.tolerance())},
      {"ladder_floor", format_g17(ladder.floor())},
      {"quad_tolerance", format_g17(ladder.hl().tail_tolerance())},
      {"engine_version", CheckpointCache::kEngineVersion},
      {"summand_reading", to_string(options.reading)},
  };
}

struct Cell {
  double value = 0.0;
  double abs_err = 0.0;
};

void run_grid(FunctionalReport& report, const std::vector<double>& tau_grid, unsigned threads,
              const std::function<Cell(double)>& fn) {
  for (std::size_t i = 1; i < tau_grid.size(); ++i) {
    if (!(tau_grid[i] > tau_grid[i - 1])) throw DomainError("tau grid must be strictly ascending");
  }
  std::vector<std::optional<Cell>> cells(tau_grid.size());
  std::vector<std::string> errors(tau_grid.size());
  parallel_for(tau_grid.size(), threads, [&](std::size_t i) {
    try {
      cells[i] = fn(tau_grid[i]);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (cells[i] && std::isfinite(cells[i]->value)) {
      report.tau_grid.push_back(tau_grid[i]);
      report.values.push_back(cells[i]->value);
      report.abs_err.push_back(cells[i]->abs_err);
    } else {
      report.failures.emplace_back(tau_grid[i], errors[i].empty() ? "non-finite value" : errors[i]);
    }
  }
}

double s1_sum(double a, double b, SummandReading reading) { return titchmarsh_T1(a, b, reading); }

// Extra terms picked up or lost when the upper end moves by delta: expected
// point count times a typical summand size.
double sum_endpoint_error(double t, double delta, double typical) {
  return delta * std::log(t / kTwoPi) / kTwoPi * typical + 1e-12 * t;
}

}  // namespace

LadderStep ladder_step(Ladder& ladder, double T) {
  const RootResult r = ladder.reverse_solve(T, ladder.tolerance());
  const double j_err = ladder.hl().J(r.root).abs_error_estimate;
  const double density = std::log(r.root / kTwoPi);
  return {T, r.root, r.residual, (std::abs(r.residual) + j_err) / density};
}

double ln_gamma(double x) {
  if (!(x > 0.0) || std::isnan(x)) throw DomainError("ln_gamma: x must be > 0");
  if (std::isinf(x)) return x;
  if (x >= kStirlingShift) return stirling(x);
  double product = 1.0;
  double y = x;
  while (y < kStirlingShift) {
    product *= y;
    y += 1.0;
  }
  return stirling(y) - std::log(product);
}

void write_report_csv(std::ostream& out, const FunctionalReport& report) {
  out << "tau,value,target,abs_err\n";
  for (std::size_t i = 0; i < report.tau_grid.size(); ++i) {
    out << format_g17(report.tau_grid[i]) << ',' << format_g17(report.values[i]) << ','
        << format_g17(report.target) << ',' << format_g17(report.abs_err[i]) << '\n';
  }
}

void write_report_json(std::ostream& out, const FunctionalReport& report) {
  JsonWriter w(out);
  w.begin_object();
  w.key("metadata");
  w.metadata(report.metadata);
  w.key("functional");
  w.value(report.functional_id);
  w.key("x");
  w.value(report.x);
  w.key("target");
  w.value(report.target);
  w.key("rows");
  w.begin_array();
  for (std::size_t i = 0; i < report.tau_grid.size(); ++i) {
    w.begin_object();
    w.key("tau");
    w.value(report.tau_grid[i]);
    w.key("value");
    w.value(report.values[i]);
    w.key("target");
    w.value(report.target);
    w.key("abs_err");
    w.value(report.abs_err[i]);
    w.end_object();
  }
  w.end_array();
  w.key("failures");
  w.begin_array();
  for (const auto& [tau, message] : report.failures) {
    w.begin_object();
    w.key("tau");
    w.value(tau);
    w.key("error");
    w.value(message);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

FunctionalReport gamma_functional(Ladder& ladder, double x, const std::vector<double>& tau_grid,
                                  const GridOptions& options) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma_functional: x must be > 0");
  FunctionalReport report;
  report.functional_id = "gamma";
  report.x = x;
  report.target = x;
  report.metadata = base_metadata(ladder, options);
  report.metadata.emplace_back("base_point", "x*tau/(1-c)");
  run_grid(report, tau_grid, options.threads, [&](double tau) {
    const LadderStep r = ladder_step(ladder, x * tau / kOneMinusEuler);
    const double diff = ln_gamma(r.upper) - ln_gamma(r.lower);
    const double err = std::log(r.upper) * r.delta + lngamma_rounding(r.upper);
    return Cell{diff / tau, err / tau};
  });
  return report;
}

FunctionalReport verify_factorization_D(Ladder& ladder, const std::vector<double>& tau_grid,
                                        const GridOptions& options) {
  FunctionalReport report;
  report.functional_id = "d";
  report.target = 1.0;
  report.metadata = base_metadata(ladder, options);
  run_grid(report, tau_grid, options.threads, [&](double tau) {
    const LadderStep r = ladder_step(ladder, tau);
    if (!(std::floor(r.upper) >= std::ceil(tau))) {
      throw DomainError("verify_factorization_D: no integer in [tau, tau^1]");
    }
    const auto divisors = static_cast<double>(dirichlet_D(r.upper) - dirichlet_D(std::ceil(tau) - 1.0));
    const double lg = ln_gamma(r.upper) - ln_gamma(tau);
    const double value = divisors / lg;
    // One more or one fewer integer at the upper end moves the sum by ~ln t + 2c.
    const double count_err = (std::log(r.upper) + 2.0 * kEuler) * r.delta;
    const double err = (count_err + value * (std::log(r.upper) * r.delta + lngamma_rounding(r.upper))) / lg;
    return Cell{value, err};
  });
  return report;
}

namespace {

FunctionalReport titchmarsh_factorization(Ladder& ladder, const std::vector<double>& tau_grid,
                                          const GridOptions& options, bool second) {
  FunctionalReport report;
  report.functional_id = second ? "t2" : "t1";
  report.target = 1.0;
  report.metadata = base_metadata(ladder, options);
  const double constant = second ? (1.0 + kEuler) / kPi : 1.0 / kPi;
  run_grid(report, tau_grid, options.threads, [&](double tau) {
    const LadderStep r = ladder_step(ladder, tau);
    const GramSlice slice = gram_points(tau, r.upper);
    if (slice.empty()) throw DomainError("Titchmarsh factorization: empty Gram range");
    const double sum = second ? titchmarsh_T2(slice, options.reading) : titchmarsh_T1(slice, options.reading);
    const double lg = ln_gamma(r.upper) - ln_gamma(tau);
    const double value = sum / (constant * lg);
    const double typical = second ? 2.0 * (1.0 + kEuler) : 2.0;
    const double err = sum_endpoint_error(r.upper, r.delta, typical) / (constant * lg) +
                       std::abs(value) * (std::log(r.upper) * r.delta + lngamma_rounding(r.upper)) / lg;
    return Cell{value, err};
  });
  return report;
}

}  // namespace

FunctionalReport verify_factorization_T1(Ladder& ladder, const std::vector<double>& tau_grid,
                                         const GridOptions& options) {
  return titchmarsh_factorization(ladder, tau_grid, options, false);
}

FunctionalReport verify_factorization_T2(Ladder& ladder, const std::vector<double>& tau_grid,
                                         const GridOptions& options) {
  return titchmarsh_factorization(ladder, tau_grid, options, true);
}

double ChainReport::partial_ratio(int r, int s) const {
  if (r < 0 || s > k || r >= s) throw DomainError("partial_ratio: need 0 <= r < s <= k");
  CompensatedSum lg, sum;
  for (int j = r; j < s; ++j) {
    lg += rung_lngamma[static_cast<std::size_t>(j)];
    sum += rung_sums[static_cast<std::size_t>(j)];
  }
  return kPi * sum.value() / lg.value();
}

ChainReport verify_chain(Ladder& ladder, double tau, int k, SummandReading reading) {
  ChainReport out;
  out.tau = tau;
  out.k = k;
  out.tower = ladder.build_tower(tau, k);
  const auto& it = out.tower.iterates;
  CompensatedSum rung_total;
  for (int r = 1; r <= k; ++r) {
    const double lo = it[static_cast<std::size_t>(r - 1)];
    const double hi = it[static_cast<std::size_t>(r)];
    out.rung_lngamma.push_back(ln_gamma(hi) - ln_gamma(lo));
    out.rung_sums.push_back(s1_sum(lo, hi, reading));
    rung_total += out.rung_sums.back();
  }
  out.whole_lngamma = ln_gamma(it.back()) - ln_gamma(tau);
  out.whole_sum = s1_sum(tau, it.back(), reading);
  out.whole_ratio = kPi * out.whole_sum / out.whole_lngamma;
  out.additivity_defect = std::abs(out.whole_sum - rung_total.value());
  return out;
}

double pi_via_gamma(Ladder& ladder, double tau, int k) {
  if (k < 1) throw DomainError("pi_via_gamma: k must be >= 1");
  const LadderTower tower = ladder.build_tower(tau, k);
  return (tower.iterates.back() - tau) / (kOneMinusEuler * k);
}

ShiftedRatioReport verify_shifted_ratio(Ladder& ladder, double tau, SummandReading reading) {
  ShiftedRatioReport out;
  out.tau = tau;
  out.upper = ladder.reverse_iterate(tau);
  out.upper_shift = ladder.reverse_iterate(tau + 1.0);
  out.log_lhs = ln_gamma(out.upper_shift) - ln_gamma(out.upper);
  const double shifted = s1_sum(tau + 1.0, out.upper_shift, reading);
  const double base = s1_sum(tau, out.upper, reading);
  out.log_rhs = std::log(tau) + kPi * (shifted - base);
  out.log_difference = out.log_lhs - out.log_rhs;
  out.ratio = std::exp(out.log_difference);
  out.segment_count = gram_intervals_inside(tau, tau + 1.0);
  out.expected_count = std::log(tau) / kTwoPi;
  return out;
}

LegendreReport verify_legendre_factorization(Ladder& ladder, double tau, SummandReading reading) {
  LegendreReport out;
  out.tau = tau;
  out.upper_2tau = ladder.reverse_iterate(2.0 * tau);
  out.upper_tau = ladder.reverse_iterate(tau);
  out.upper_half = ladder.reverse_iterate(tau + 0.5);
  out.sum_2tau = s1_sum(2.0 * tau, out.upper_2tau, reading);
  out.sum_tau = s1_sum(tau, out.upper_tau, reading);
  out.sum_half = s1_sum(tau + 0.5, out.upper_half, reading);
  out.log_lhs = ln_gamma(out.upper_2tau) - ln_gamma(out.upper_tau) - ln_gamma(out.upper_half);
  out.log_rhs = (2.0 * tau - 1.0) * std::log(2.0) - 0.5 * std::log(kPi) +
                kPi * (out.sum_2tau - out.sum_tau - out.sum_half);
  out.log_difference = out.log_lhs - out.log_rhs;
  out.relative_difference = out.log_difference / ln_gamma(out.upper_2tau);
  out.printed_variant = out.log_difference - 2.0 * std::log(2.0);
  return out;
}

FunctionalReport evaluate_functional(Ladder& ladder, const std::string& id, double x,
                                     const std::vector<double>& tau_grid, int k,
                                     const GridOptions& options) {
  if (id == "gamma") return gamma_functional(ladder, x, tau_grid, options);
  if (id == "d") return verify_factorization_D(ladder, tau_grid, options);
  if (id == "t1") return verify_factorization_T1(ladder, tau_grid, options);
  if (id == "t2") return verify_factorization_T2(ladder, tau_grid, options);

  FunctionalReport report;
  report.functional_id = id;
  report.metadata = base_metadata(ladder, options);
  if (id == "chain") {
    report.target = 1.0;
    report.metadata.emplace_back("k", std::to_string(k));
    run_grid(report, tau_grid, options.threads, [&](double tau) {
      return Cell{verify_chain(ladder, tau, k, options.reading).whole_ratio,
                  std::numeric_limits<double>::quiet_NaN()};
    });
  } else if (id == "shifted") {
    report.target = 1.0;
    run_grid(report, tau_grid, options.threads, [&](double tau) {
      return Cell{verify_shifted_ratio(ladder, tau, options.reading).ratio,
                  std::numeric_limits<double>::quiet_NaN()};
    });
  } else if (id == "legendre") {
    report.target = 0.0;
    report.metadata.emplace_back("power_of_two", "2^(2tau-1); printed form 2^(2tau+1) differs by 2 ln 2");
    run_grid(report, tau_grid, options.threads, [&](double tau) {
      return Cell{verify_legendre_factorization(ladder, tau, options.reading).log_difference,
                  std::numeric_limits<double>::quiet_NaN()};
    });
  } else if (id == "pi-gamma") {
    report.target = 1.0;
    report.metadata.emplace_back("k", std::to_string(k));
    run_grid(report, tau_grid, options.threads, [&](double tau) {
      const auto primes = prime_pi(tau);
      if (primes == 0) throw DomainError("pi-gamma: prime_pi(tau) = 0");
      return Cell{pi_via_gamma(ladder, tau, k) / static_cast<double>(primes),
                  std::numeric_limits<double>::quiet_NaN()};
    });
  } else {
    throw DomainError("unknown functional id '" + id +
                      "' (expected gamma|d|t1|t2|chain|shifted|legendre|pi-gamma)");
  }
  return report;
}

}  // namespace ladderlab
