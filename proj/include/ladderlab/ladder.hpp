#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "ladderlab/hardy_littlewood.hpp"
#include "ladderlab/numeric.hpp"

namespace ladderlab {

inline constexpr double kDefaultLadderTolerance = 1e-6;
inline constexpr double kLadderFloor = 100.0;

/// T = T^0 < T^1 < ... < T^k with phi_1(T^r) = T^(r-1).
/// residuals[r-1] is J(T^r) - rep(T^(r-1)) at the accepted root.
struct LadderTower {
  double base = 0.0;
  std::vector<double> iterates;
  std::vector<double> residuals;
  int k = 0;
};

struct NewtonLeibnizReport {
  int r = 0;
  double lower = 0.0;  // T^(r-1)
  double upper = 0.0;  // T^r
  double lhs = 0.0;    // ln Gamma(T^r) - ln Gamma(T^(r-1))
  double rhs = 0.0;    // int_{T^(r-1)}^{T^r} |zeta|^2
  double rhs_abs_error = 0.0;
  double ratio() const { return lhs / rhs; }
};

/// phi_1 and its reverse iterates, solved on the c0 = 0 representation
/// phi ln phi + (c - ln 2pi) phi = J(T).
///
/// Safe to share between threads: J goes through HardyLittlewood and reverse
/// iterates are memoised under a mutex. A memoised root is a function of
/// (T, tol) alone, so results do not depend on call order.
class Ladder {
 public:
  explicit Ladder(std::shared_ptr<HardyLittlewood> hl = std::make_shared<HardyLittlewood>(),
                  double tol = kDefaultLadderTolerance, double t_floor = kLadderFloor);

  double tolerance() const noexcept { return tol_; }
  double floor() const noexcept { return t_floor_; }
  HardyLittlewood& hl() noexcept { return *hl_; }
  const std::shared_ptr<HardyLittlewood>& hl_ptr() const noexcept { return hl_; }

  /// Root of rep(phi) = J(T); phi < T.
  double phi1(double T) { return phi1_solve(T, tol_).root; }
  double phi1(double T, double tol) { return phi1_solve(T, tol).root; }
  RootResult phi1_solve(double T, double tol);

  /// T^1 with J(T^1) = rep(T); T^1 > T.
  double reverse_iterate(double T) { return reverse_solve(T, tol_).root; }
  double reverse_iterate(double T, double tol) { return reverse_solve(T, tol).root; }
  RootResult reverse_solve(double T, double tol);

  /// k reverse iterations from T. Solver failures name the failing rung.
  LadderTower build_tower(double T, int k) { return build_tower(T, k, tol_); }
  LadderTower build_tower(double T, int k, double tol);

  /// ln Gamma difference against the |zeta|^2 segment over rung r.
  NewtonLeibnizReport newton_leibniz_check(double T, int r) { return newton_leibniz_check(T, r, tol_); }
  NewtonLeibnizReport newton_leibniz_check(double T, int r, double tol);

  IntegralResult segment(double a, double b) { return hl_->segment(a, b); }

 private:
  void check_base(double T, const char* what) const;

  std::shared_ptr<HardyLittlewood> hl_;
  double tol_;
  double t_floor_;
  std::mutex memo_mutex_;
  std::map<std::pair<double, double>, RootResult> reverse_memo_;
};

}  // namespace ladderlab
