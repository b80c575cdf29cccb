#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ladderlab/gram_titchmarsh.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/report_io.hpp"

namespace ladderlab {

/// (x^n + y^n) / z^n with the numerator and denominator held exactly.
struct FermatRational {
  std::int64_t x = 1;
  std::int64_t y = 1;
  std::int64_t z = 1;
  int n = 3;
  std::int64_t numerator = 2;    // x^n + y^n
  std::int64_t denominator = 1;  // z^n
  double value = 2.0;
};

/// Throws DomainError for n < 3 or non-positive entries, OverflowError when
/// x^n + y^n leaves int64, FermatViolation if x^n + y^n == z^n.
FermatRational make_fermat_rational(std::int64_t x, std::int64_t y, std::int64_t z, int n);

/// Every x, y, z in [1, max_xyz], deduplicated by reduced value (the
/// lexicographically smallest triple is kept), optionally restricted to
/// |value - 1| < window_eps, sorted by exact |value - 1| then by triple.
std::vector<FermatRational> enumerate_fermat_rationals(int n, std::int64_t max_xyz,
                                                       std::optional<double> window_eps = std::nullopt);

/// The ten equivalents. Base points are q tau/(1-c) for the linear forms,
/// A tau/(1-c) and B tau/(1-c) for the ratio forms (A = x^n + y^n, B = z^n),
/// tau^q for the log forms, and tau^A, tau^B for the log-ratio form.
enum class Equivalent {
  kZeta,          // (1/tau) int_T^{T^1} |zeta|^2           -> q, forbidden 1
  kZetaRatio,     // int at A over int at B                 -> q, forbidden 1
  kZetaLog,       // ln(int at tau^q) / ln tau               -> q, forbidden 1
  kZetaLogRatio,  // ln(int at tau^A) / ln(int at tau^B)     -> q, forbidden 1
  kD,             // (1/tau)(D(T^1) - D(T))                  -> q, forbidden 1
  kDLog,          // ln(D(T^1) - D(T)) / ln tau, T = tau^q   -> q, forbidden 1
  kT1,            // (1/tau) s1-sum over (T, T^1]            -> q/pi, forbidden 1/pi
  kT2,            // (1/tau) s2-sum over (T, T^1]            -> (1+c)q/pi, forbidden (1+c)/pi
  kGamma,         // (1/tau) ln(Gamma(T^1)/Gamma(T))         -> q, forbidden 1
  kGammaExp,      // exp of the above                        -> e^q, forbidden e
};

const char* to_string(Equivalent id);
Equivalent parse_equivalent(const std::string& name);
std::vector<Equivalent> all_equivalents();

struct ScanOptions {
  /// Largest base point per grid row; tau follows from the row's q.
  std::vector<double> anchors = {1e3, 3e3, 1e4, 3e4};
  /// When set, used verbatim (after the feasibility filter) instead of anchors.
  std::optional<std::vector<double>> tau_grid;
  /// Base points must lie in [ladder floor, t_cap].
  double t_cap = 1e5;
  /// Upper limit on exp(q ln tau) for the log forms.
  double exp_guard = 1e7;
  std::optional<double> window_eps;
  SummandReading reading = kDefaultReading;
  unsigned threads = 1;
};

struct ScanRow {
  std::string functional;
  FermatRational q;
  double tau_max = 0.0;
  double value = 0.0;
  double target = 0.0;
  double forbidden = 0.0;
  double distance = 0.0;
  double est_error = 0.0;
  std::string status;
  std::vector<double> taus;    // feasible grid actually used
  std::vector<double> values;  // one per tau
};

struct ScanReport {
  std::vector<std::string> functionals;
  int n = 3;
  std::int64_t max_xyz = 0;
  std::optional<double> window_eps;
  Metadata metadata;
  std::vector<ScanRow> rows;
};

inline constexpr const char* kResolved = "resolved";
inline constexpr const char* kUnresolved = "unresolved at desk scale";
inline constexpr const char* kInfeasible = "infeasible";

/// One row. Never throws for numerical trouble: the status carries it.
ScanRow evaluate_equivalent(Ladder& ladder, Equivalent id, const FermatRational& q,
                            const ScanOptions& options = {});

/// Cross product ids x enumerate(n, max_xyz, window), id-major, rows in
/// enumeration order. Output is independent of the thread count.
ScanReport scan(Ladder& ladder, const std::vector<Equivalent>& ids, int n, std::int64_t max_xyz,
                const ScanOptions& options = {});

/// {"metadata": {...}, "rows": [{functional, x, y, z, n, q, tau_max, value,
/// target, forbidden, distance, est_error, status}, ...]}
void write_scan_json(std::ostream& out, const ScanReport& report);

}  // namespace ladderlab
