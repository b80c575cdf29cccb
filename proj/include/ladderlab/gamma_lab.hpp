#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ladderlab/gram_titchmarsh.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/report_io.hpp"

namespace ladderlab {

/// ln Gamma(x) for x > 0: Stirling series after shifting x up to 15.
double ln_gamma(double x);

/// One reverse iteration T -> T^1 with a first-order uncertainty on T^1:
/// (|residual| + error of J(T^1)) / ln(T^1 / 2pi), the mean density of |zeta|^2.
struct LadderStep {
  double lower = 0.0;
  double upper = 0.0;
  double residual = 0.0;
  double delta = 0.0;
};

LadderStep ladder_step(Ladder& ladder, double T);

/// A convergence table: one value per tau, plus the limit it should approach.
/// Grid points whose evaluation failed are dropped from tau_grid/values and
/// listed in `failures` with the message.
struct FunctionalReport {
  std::string functional_id;
  double x = 0.0;
  std::vector<double> tau_grid;
  std::vector<double> values;
  std::vector<double> abs_err;
  double target = 0.0;
  Metadata metadata;
  std::vector<std::pair<double, std::string>> failures;
};

/// CSV `tau,value,target,abs_err`.
void write_report_csv(std::ostream& out, const FunctionalReport& report);
/// {"metadata": {...}, "functional": ..., "x": ..., "target": ..., "rows": [...], "failures": [...]}
void write_report_json(std::ostream& out, const FunctionalReport& report);

struct GridOptions {
  unsigned threads = 1;
  SummandReading reading = kDefaultReading;
};

/// (1/tau) ln(Gamma(T^1) / Gamma(T)) with T = x tau / (1 - c); target x.
/// Requires T >= the ladder floor at every grid point.
FunctionalReport gamma_functional(Ladder& ladder, double x, const std::vector<double>& tau_grid,
                                  const GridOptions& options = {});

/// sum_{tau <= n <= tau^1} d(n) / ln(Gamma(tau^1) / Gamma(tau)); target 1.
FunctionalReport verify_factorization_D(Ladder& ladder, const std::vector<double>& tau_grid,
                                        const GridOptions& options = {});

/// sum_{tau < t_nu <= tau^1} s1 / ((1/pi) ln(Gamma(tau^1)/Gamma(tau))); target 1.
FunctionalReport verify_factorization_T1(Ladder& ladder, const std::vector<double>& tau_grid,
                                         const GridOptions& options = {});
/// Same with s2 and the constant (1 + c)/pi.
FunctionalReport verify_factorization_T2(Ladder& ladder, const std::vector<double>& tau_grid,
                                         const GridOptions& options = {});

/// ln Gamma(tau^k) - ln Gamma(tau) against pi * sum of s1 over (tau, tau^k],
/// rung by rung and whole. Ratios are pi * sum / ln Gamma difference.
struct ChainReport {
  double tau = 0.0;
  int k = 0;
  LadderTower tower;
  std::vector<double> rung_lngamma;  // ln Gamma(tau^r) - ln Gamma(tau^(r-1)), r = 1..k
  std::vector<double> rung_sums;     // sum of s1 over (tau^(r-1), tau^r]
  double whole_lngamma = 0.0;
  double whole_sum = 0.0;            // one pass over (tau, tau^k]
  double whole_ratio = 0.0;
  double additivity_defect = 0.0;    // |whole_sum - sum of rung_sums|

  /// Ratio over (tau^r, tau^s], 0 <= r < s <= k.
  double partial_ratio(int r, int s) const;
};

ChainReport verify_chain(Ladder& ladder, double tau, int k,
                         SummandReading reading = kDefaultReading);

/// (tau^k - tau) / ((1 - c) k), the collapsed form of the Gamma(t+1)/Gamma(t)
/// difference. Compare with prime_pi(tau).
double pi_via_gamma(Ladder& ladder, double tau, int k);

/// ln(Gamma([tau+1]^1) / Gamma([tau]^1)) against
/// ln tau + pi (S(tau+1, [tau+1]^1) - S(tau, [tau]^1)), S the s1 sum.
struct ShiftedRatioReport {
  double tau = 0.0;
  double upper = 0.0;        // [tau]^1
  double upper_shift = 0.0;  // [tau+1]^1
  double log_lhs = 0.0;
  double log_rhs = 0.0;
  double log_difference = 0.0;
  double ratio = 0.0;        // exp(log_lhs - log_rhs)
  std::int64_t segment_count = 0;  // Gram intervals inside (tau, tau+1]
  double expected_count = 0.0;     // ln tau / 2pi
};

ShiftedRatioReport verify_shifted_ratio(Ladder& ladder, double tau,
                                        SummandReading reading = kDefaultReading);

/// Log form of the ladder-lifted duplication formula:
///   ln Gamma([2tau]^1) - ln Gamma([tau]^1) - ln Gamma([tau+1/2]^1)
///   vs (2tau - 1) ln 2 - (1/2) ln pi + pi (S(2tau) - S(tau) - S(tau+1/2)).
/// The power of two follows the duplication formula itself; `printed_variant`
/// is the log difference with 2^(2tau+1) instead, two ln 2 lower.
struct LegendreReport {
  double tau = 0.0;
  double upper_2tau = 0.0;
  double upper_tau = 0.0;
  double upper_half = 0.0;
  double sum_2tau = 0.0;
  double sum_tau = 0.0;
  double sum_half = 0.0;
  double log_lhs = 0.0;
  double log_rhs = 0.0;
  double log_difference = 0.0;
  double relative_difference = 0.0;  // log_difference / ln Gamma([2tau]^1)-scale
  double printed_variant = 0.0;
};

LegendreReport verify_legendre_factorization(Ladder& ladder, double tau,
                                             SummandReading reading = kDefaultReading);

/// Dispatch by id: gamma, d, t1, t2, chain, shifted, legendre, pi-gamma.
/// For the single-tau operations each grid point becomes one row:
/// chain -> whole_ratio (target 1), shifted -> ratio (target 1),
/// legendre -> log_difference (target 0), pi-gamma -> pi_via_gamma / prime_pi (target 1).
/// `x` is used by gamma only; `k` by chain and pi-gamma.
FunctionalReport evaluate_functional(Ladder& ladder, const std::string& id, double x,
                                     const std::vector<double>& tau_grid, int k = 1,
                                     const GridOptions& options = {});

}  // namespace ladderlab
