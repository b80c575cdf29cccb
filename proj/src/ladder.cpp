#include "ladderlab/ladder.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/gamma_lab.hpp"

namespace ladderlab {
namespace {

constexpr int kMaxWidenings = 40;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void require_residual(const RootResult& r, double tol, const std::string& what) {
  if (!(std::abs(r.residual) <= tol)) {
    throw ToleranceError(what + ": residual " + num(r.residual) + " above " + num(tol), r.root,
                         std::abs(r.residual));
  }
}

}  // namespace

Ladder::Ladder(std::shared_ptr<HardyLittlewood> hl, double tol, double t_floor)
    : hl_(std::move(hl)), tol_(tol), t_floor_(t_floor) {
  if (!hl_) throw DomainError("Ladder: null HardyLittlewood");
  if (!(tol > 0.0)) throw DomainError("Ladder: tolerance must be > 0");
  if (!(t_floor > 1.0)) throw DomainError("Ladder: floor must be > 1");
}

void Ladder::check_base(double T, const char* what) const {
  if (!(T >= t_floor_) || !std::isfinite(T)) {
    throw DomainError(std::string(what) + ": T = " + num(T) + " below the floor " + num(t_floor_));
  }
}

RootResult Ladder::phi1_solve(double T, double tol) {
  check_base(T, "phi1");
  if (!(tol > 0.0)) throw DomainError("phi1: tolerance must be > 0");
  const double target = hl_->J(T).value;
  auto f = [target](double phi) { return hl_representation(phi) - target; };

  // rep is increasing past e^(ln 2pi - c - 1) ~ 2.1, and negative at 3.
  double lo = 3.0;
  double hi = T;
  double f_lo = f(lo);
  double f_hi = f(hi);
  for (int i = 0; f_hi < 0.0 && i < kMaxWidenings; ++i) {
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = f(hi);
  }
  if (f_lo > 0.0 || f_hi < 0.0) {
    throw BracketError("phi1: could not bracket rep(phi) = J(" + num(T) + ")");
  }
  RootResult r = solve_bracketed(f, lo, hi, f_lo, f_hi, tol);
  require_residual(r, tol, "phi1(" + num(T) + ")");
  return r;
}

RootResult Ladder::reverse_solve(double T, double tol) {
  check_base(T, "reverse_iterate");
  if (!(tol > 0.0)) throw DomainError("reverse_iterate: tolerance must be > 0");
  const auto key = std::make_pair(T, tol);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (auto it = reverse_memo_.find(key); it != reverse_memo_.end()) return it->second;
  }

  const double target = hl_representation(T);
  auto g = [this, target](double x) { return hl_->J(x).value - target; };

  double lo = T;
  double f_lo = g(lo);
  if (f_lo >= 0.0) {
    throw BracketError("reverse_iterate: J(T) >= rep(T) at T = " + num(T));
  }
  double width = 2.0 * kOneMinusEuler * T / std::log(T);
  double hi = T + width;
  double f_hi = g(hi);
  for (int i = 0; f_hi < 0.0; ++i) {
    if (i == kMaxWidenings) {
      throw BracketError("reverse_iterate: no bracket above T = " + num(T));
    }
    lo = hi;
    f_lo = f_hi;
    width *= 2.0;
    hi = T + width;
    f_hi = g(hi);
  }
  RootResult r = solve_bracketed(g, lo, hi, f_lo, f_hi, tol);
  require_residual(r, tol, "reverse_iterate(" + num(T) + ")");
  if (!(r.root > T)) throw BracketError("reverse_iterate: root not above T = " + num(T));

  std::lock_guard<std::mutex> lock(memo_mutex_);
  reverse_memo_.emplace(key, r);
  return r;
}

LadderTower Ladder::build_tower(double T, int k, double tol) {
  if (k < 1) throw DomainError("build_tower: k must be >= 1");
  check_base(T, "build_tower");
  LadderTower tower;
  tower.base = T;
  tower.k = k;
  tower.iterates.push_back(T);
  double current = T;
  for (int r = 1; r <= k; ++r) {
    const std::string where = "build_tower rung " + std::to_string(r) + ": ";
    RootResult step;
    try {
      step = reverse_solve(current, tol);
    } catch (const ToleranceError& e) {
      throw ToleranceError(where + e.what(), e.best_value(), e.best_error());
    } catch (const BracketError& e) {
      throw BracketError(where + e.what());
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    }
    current = step.root;
    tower.iterates.push_back(current);
    tower.residuals.push_back(step.residual);
  }
  return tower;
}

NewtonLeibnizReport Ladder::newton_leibniz_check(double T, int r, double tol) {
  if (r < 1) throw DomainError("newton_leibniz_check: rung r must be >= 1");
  const LadderTower tower = build_tower(T, r, tol);
  NewtonLeibnizReport out;
  out.r = r;
  out.lower = tower.iterates[static_cast<std::size_t>(r - 1)];
  out.upper = tower.iterates[static_cast<std::size_t>(r)];
  out.lhs = ln_gamma(out.upper) - ln_gamma(out.lower);
  const IntegralResult seg = hl_->segment(out.lower, out.upper);
  out.rhs = seg.value;
  out.rhs_abs_error = seg.abs_error_estimate;
  return out;
}

}  // namespace ladderlab
