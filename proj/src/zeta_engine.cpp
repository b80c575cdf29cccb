#include "ladderlab/zeta_engine.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"

namespace ladderlab {
namespace {

#include "rs_coefficients.inc"

using cplx = std::complex<double>;

// Fitted to the Riemann-Siegel vs Euler-Maclaurin difference on [70, 300] and
// the oracle fixture, times four.
constexpr double kZErrorScale = 4e-5;

void check_domain(double t, const char* what) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(what) + ": t must be finite and >= 0, got " + std::to_string(t));
  }
}

template <std::size_t N>
double horner(const double (&coeffs)[N], double u) {
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) acc = acc * u + coeffs[i];
  return acc;
}

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,        -1.0 / 360.0,          1.0 / 1260.0,      -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0,     1.0 / 156.0,       -3617.0 / 122400.0,
};

// Complex log-gamma for Re z > 0 on the branch continuous from the real axis.
cplx log_gamma(cplx z) {
  cplx shift = 0.0;
  double arg_sum = 0.0;
  double log_abs = 0.0;
  while (z.real() < 12.0) {
    log_abs += std::log(std::abs(z));
    arg_sum += std::arg(z);
    z += 1.0;
  }
  shift = cplx(log_abs, arg_sum);
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * kLn2Pi + series - shift;
}

double theta_small(double t) {
  return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

// Asymptotic expansion; the next omitted term is below 1e-12 at t = 10.
double theta_large(double t) {
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  const double tail =
      inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 +
                                                       inv2 * (127.0 / 430080.0 +
                                                               inv2 * (511.0 / 1216512.0)))));
  return 0.5 * t * (std::log(t) - kLn2Pi) - 0.5 * t - kPi / 8.0 + tail;
}

// Bernoulli B_{2k} / (2k)! for k = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
};

cplx zeta_euler_maclaurin(cplx s) {
  // 2 pi N well above |s| + 24 keeps the Bernoulli tail below 1e-13
  const int kTerms = std::max(20, static_cast<int>(std::ceil(0.4 * (std::abs(s.imag()) + 24.0))));
  cplx sum = 0.0;
  for (int n = 1; n < kTerms; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double ln_n = std::log(static_cast<double>(kTerms));
  const cplx n_pow = std::exp(-s * ln_n);  // N^{-s}
  sum += static_cast<double>(kTerms) * n_pow / (s - 1.0) + 0.5 * n_pow;
  // rising factorial s (s+1) ... (s+2k-2) times N^{-s-2k+1}
  cplx factor = s * n_pow / static_cast<double>(kTerms);
  const double inv_n2 = 1.0 / (static_cast<double>(kTerms) * kTerms);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    sum += kBernoulliOverFactorial[k] * factor;
    const double m = 2.0 * static_cast<double>(k) + 1.0;
    factor *= (s + m) * (s + m + 1.0) * inv_n2;
  }
  return sum;
}

// 1/sqrt(n) and ln n for the main sum; covers t up to 2*pi*4096^2 ~ 1e8.
struct MainSumTable {
  static constexpr int kSize = 4097;
  std::array<double, kSize> inv_sqrt{};
  std::array<double, kSize> log{};
  MainSumTable() {
    for (int n = 1; n < kSize; ++n) {
      inv_sqrt[n] = 1.0 / std::sqrt(static_cast<double>(n));
      log[n] = std::log(static_cast<double>(n));
    }
  }
};

const MainSumTable& main_sum_table() {
  static const MainSumTable table;
  return table;
}

}  // namespace

double theta(double t) {
  check_domain(t, "theta");
  return t >= kTMin ? theta_large(t) : theta_small(t);
}

double theta_derivative(double t) {
  check_domain(t, "theta_derivative");
  if (t >= kTMin) {
    const double inv2 = 1.0 / (t * t);
    return 0.5 * (std::log(t) - kLn2Pi) -
           inv2 * (1.0 / 48.0 + inv2 * (7.0 / 1920.0 + inv2 * (31.0 / 16128.0)));
  }
  // central difference on the smooth small-t branch is adequate for Newton steps
  const double h = 1e-5;
  return (theta_small(t + h) - theta_small(std::max(t - h, 0.0))) / (t + h - std::max(t - h, 0.0));
}

double z_riemann_siegel(double t) {
  check_domain(t, "z_riemann_siegel");
  const auto& table = main_sum_table();
  const double a = std::sqrt(t / kTwoPi);
  const int n_terms = static_cast<int>(a);
  if (n_terms >= MainSumTable::kSize) {
    throw ResourceError("z_function: t = " + std::to_string(t) + " exceeds the supported range");
  }
  const double th = theta_large(t);
  double main = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    main += table.inv_sqrt[n] * std::cos(th - t * table.log[n]);
  }
  main *= 2.0;

  const double u = (a - n_terms) - 0.5;
  const double w = 1.0 / a;  // (t / 2pi)^{-1/2}
  const double correction =
      horner(kRsC0, u) +
      w * (horner(kRsC1, u) +
           w * (horner(kRsC2, u) + w * (horner(kRsC3, u) + w * horner(kRsC4, u))));
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return main + sign * std::sqrt(w) * correction;
}

double z_euler_maclaurin(double t) {
  check_domain(t, "z_euler_maclaurin");
  const cplx zeta = zeta_euler_maclaurin(cplx(0.5, t));
  const double th = t >= kTMin ? theta_large(t) : theta_small(t);
  return (std::polar(1.0, th) * zeta).real();
}

CriticalSample z_function(double t) {
  check_domain(t, "z_function");
  const double z = t >= kRiemannSiegelFloor ? z_riemann_siegel(t) : z_euler_maclaurin(t);
  return {t, z, z * z};
}

double z_error_bound(double t) {
  if (t < kRiemannSiegelFloor) return 1e-12;
  return kZErrorScale * std::pow(t / kTwoPi, -9.0 / 4.0) + 1e-14 * t;
}

std::vector<CriticalSample> batch_samples(double a, double b, const NodeSpec& nodes) {
  check_domain(a, "batch_samples");
  if (!(b >= a) || !std::isfinite(b)) {
    throw DomainError("batch_samples: require a <= b");
  }
  if (nodes.count < 0) throw DomainError("batch_samples: negative node count");
  std::vector<CriticalSample> out;
  const int n = nodes.count;
  if (n == 0) return out;
  const double width = b - a;
  switch (nodes.kind) {
    case NodeKind::kClosedUniform:
      out.reserve(n);
      if (n == 1) {
        out.push_back(z_function(a));
        break;
      }
      for (int i = 0; i < n; ++i) {
        const double t = (i == n - 1) ? b : a + width * static_cast<double>(i) / (n - 1);
        out.push_back(z_function(t));
      }
      break;
    case NodeKind::kOpenUniform:
      if (width == 0.0) break;
      out.reserve(n);
      for (int i = 0; i < n; ++i) out.push_back(z_function(a + width * (i + 0.5) / n));
      break;
    case NodeKind::kChebyshev:
      if (width == 0.0) break;
      out.reserve(n);
      // cos((2i+1) pi / 2n) falls from +1 to -1, so a + w(1 - x)/2 ascends
      for (int i = 0; i < n; ++i) {
        const double x = std::cos((2.0 * i + 1.0) * kPi / (2.0 * n));
        out.push_back(z_function(a + 0.5 * width * (1.0 - x)));
      }
      break;
  }
  return out;
}

}  // namespace ladderlab
