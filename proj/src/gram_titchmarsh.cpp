#include "ladderlab/gram_titchmarsh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/numeric.hpp"
#include "ladderlab/zeta_engine.hpp"

namespace ladderlab {
namespace {

// Solves u ln u = y for u >= 1 (y >= 0) by Newton.
double solve_u_log_u(double y) {
  double u = std::max(1.0, y > 1.0 ? y / std::log(y) : 1.0 + y);
  for (int i = 0; i < 60; ++i) {
    const double next = u - (u * std::log(u) - y) / (std::log(u) + 1.0);
    if (std::abs(next - u) <= 1e-15 * u) return next;
    u = std::max(1.0, next);
  }
  return u;
}

// Leading-order inverse of theta(t) ~ (t/2) ln(t / 2 pi e) - pi/8.
double gram_guess(std::int64_t nu) {
  const double y = (static_cast<double>(nu) - 0.875) / std::exp(1.0);
  return std::max(kTMin + 1.0, kTwoPi * std::exp(1.0) * solve_u_log_u(y));
}

double solve_gram(std::int64_t nu, double guess) {
  if (nu < 1) throw DomainError("gram_point: nu must be >= 1");
  const double target = static_cast<double>(nu - 1) * kPi;
  auto f = [target](double t) { return theta(t) - target; };

  const double step = kTwoPi / std::log(std::max(guess, kTMin) / kTwoPi + 1.0);
  double lo = std::max(kTMin, guess - step);
  double hi = guess + step;
  while (f(lo) > 0.0) {
    if (lo == kTMin) throw BracketError("gram_point: no bracket for nu = " + std::to_string(nu));
    lo = std::max(kTMin, lo - 2.0 * step);
  }
  while (f(hi) < 0.0) hi += 2.0 * step;

  double t = std::clamp(guess, lo, hi);
  for (int it = 0; it < 100; ++it) {
    const double ft = f(t);
    if (std::abs(ft) <= 1e-13 * std::max(1.0, std::abs(target))) return t;
    if (ft < 0.0) lo = t; else hi = t;
    double next = t - ft / theta_derivative(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == t || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
      t = next;
      break;
    }
    t = next;
  }
  if (!(std::abs(f(t)) <= kGramResidual)) {
    throw ToleranceError("gram_point: residual above 1e-9 for nu = " + std::to_string(nu), t,
                         std::abs(f(t)));
  }
  return t;
}

GramPoint make_point(std::int64_t nu, double t) { return {nu, t, z_function(t).z}; }

double summand1(const GramPoint& p, SummandReading reading) {
  switch (reading) {
    case SummandReading::kGramSigned:
      return (p.nu % 2 == 1) ? p.z : -p.z;
    case SummandReading::kSquared:
    case SummandReading::kSquaredProduct:
      return p.z * p.z;
  }
  return 0.0;
}

double summand2(const GramPoint& p, const GramPoint& next, SummandReading reading) {
  switch (reading) {
    case SummandReading::kGramSigned:
      return -p.z * next.z;
    case SummandReading::kSquared:
      return p.z * next.z;
    case SummandReading::kSquaredProduct:
      return p.z * p.z * next.z * next.z;
  }
  return 0.0;
}

}  // namespace

const char* to_string(SummandReading reading) {
  switch (reading) {
    case SummandReading::kGramSigned: return "gram-signed";
    case SummandReading::kSquared: return "squared";
    case SummandReading::kSquaredProduct: return "squared-product";
  }
  return "?";
}

SummandReading parse_summand_reading(const std::string& name) {
  if (name == "gram-signed") return SummandReading::kGramSigned;
  if (name == "squared") return SummandReading::kSquared;
  if (name == "squared-product") return SummandReading::kSquaredProduct;
  throw DomainError("unknown summand reading '" + name + "'");
}

double gram_point(std::int64_t nu) { return solve_gram(nu, gram_guess(nu)); }

GramSlice gram_points(double from, double to) {
  if (!(from >= kTMin) || !std::isfinite(to)) {
    throw DomainError("gram_points: from must be >= 10 and finite");
  }
  if (!(from < to)) throw DomainError("gram_points: need from < to");
  GramSlice slice;
  slice.from = from;
  slice.to = to;

  // One index of slack on each side; the solved t decides membership.
  const auto nu_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(theta(from) / kPi)) + 1);
  const auto nu_hi = static_cast<std::int64_t>(std::floor(theta(to) / kPi)) + 2;
  double guess = gram_guess(nu_lo);
  for (std::int64_t nu = nu_lo; nu <= nu_hi; ++nu) {
    const double t = solve_gram(nu, guess);
    guess = t + kTwoPi / std::log(t / kTwoPi);
    if (t <= from) continue;
    if (t > to) break;
    slice.points.push_back(make_point(nu, t));
  }
  if (!slice.points.empty()) slice.first_index = slice.points.front().nu;
  return slice;
}

void write_gram_csv(std::ostream& out, const GramSlice& slice) {
  out << "nu,t,z\n";
  char buf[96];
  for (const auto& p : slice.points) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n", static_cast<long long>(p.nu), p.t, p.z);
    out << buf;
  }
}

double titchmarsh_T1(const GramSlice& slice, SummandReading reading) {
  CompensatedSum sum;
  for (const auto& p : slice.points) sum += summand1(p, reading);
  return sum.value();
}

double titchmarsh_T2(const GramSlice& slice, SummandReading reading) {
  if (slice.points.empty()) return 0.0;
  const GramPoint& last = slice.points.back();
  const GramPoint after = make_point(last.nu + 1, solve_gram(last.nu + 1, last.t + kTwoPi / std::log(last.t / kTwoPi)));
  CompensatedSum sum;
  for (std::size_t i = 0; i < slice.points.size(); ++i) {
    const GramPoint& next = (i + 1 < slice.points.size()) ? slice.points[i + 1] : after;
    sum += summand2(slice.points[i], next, reading);
  }
  return sum.value();
}

namespace {

void check_increment(double a, double b, const char* what) {
  if (!(a >= kTMin) || !(b >= a) || !std::isfinite(b)) {
    throw DomainError(std::string(what) + ": need 10 <= a <= b");
  }
}

void check_cumulative(double X, const char* what) {
  if (!(X >= gram_point(1)) || !std::isfinite(X)) {
    throw DomainError(std::string(what) + ": X must be >= t_1");
  }
}

}  // namespace

double titchmarsh_T1(double a, double b, SummandReading reading) {
  check_increment(a, b, "titchmarsh_T1");
  if (a == b) return 0.0;
  return titchmarsh_T1(gram_points(a, b), reading);
}

double titchmarsh_T2(double a, double b, SummandReading reading) {
  check_increment(a, b, "titchmarsh_T2");
  if (a == b) return 0.0;
  return titchmarsh_T2(gram_points(a, b), reading);
}

double titchmarsh_T1(double X, SummandReading reading) {
  check_cumulative(X, "titchmarsh_T1");
  return titchmarsh_T1(kTMin, X, reading);
}

double titchmarsh_T2(double X, SummandReading reading) {
  check_cumulative(X, "titchmarsh_T2");
  return titchmarsh_T2(kTMin, X, reading);
}

std::int64_t gram_intervals_inside(double a, double b) {
  check_increment(a, b, "gram_intervals_inside");
  if (a == b) return 0;
  const auto n = static_cast<std::int64_t>(gram_points(a, b).points.size());
  return std::max<std::int64_t>(0, n - 1);
}

}  // namespace ladderlab
