#pragma once

#include <vector>

namespace ladderlab {

/// Lower end of the supported ordinate range for Gram points and the theta
/// asymptotic series.
inline constexpr double kTMin = 10.0;

/// Seam between the Euler-Maclaurin branch (below) and Riemann-Siegel (at and
/// above). Riemann-Siegel with C0..C4 is off by 1.5e-5 at t = 10 and by less
/// than 5e-8 from t = 70 on.
inline constexpr double kRiemannSiegelFloor = 70.0;

/// A point on the critical line: Z(t) and |zeta(1/2 + it)|^2 = Z(t)^2.
struct CriticalSample {
  double t = 0.0;
  double z = 0.0;
  double zeta_sq = 0.0;
};

/// Riemann-Siegel theta function, continuous branch, for t >= 0.
/// Asymptotic series for t >= 10, complex log-gamma below.
double theta(double t);

/// d theta / dt.
double theta_derivative(double t);

/// Z(t) with its square. Riemann-Siegel main sum plus corrections C0..C4 for
/// t >= kRiemannSiegelFloor; Euler-Maclaurin evaluation of zeta(1/2 + it) below.
CriticalSample z_function(double t);

/// The two branches, exposed for the seam check.
double z_riemann_siegel(double t);
double z_euler_maclaurin(double t);

/// Bound on |Z_computed(t) - Z(t)| used by the quadrature error budget.
/// Calibrated against the 50-digit oracle fixture (see tests).
double z_error_bound(double t);

enum class NodeKind {
  kClosedUniform,  // count points including both ends; a single node sits at a
  kOpenUniform,    // midpoints of count equal cells; empty when a == b
  kChebyshev,      // Chebyshev-Gauss points mapped to [a, b]; empty when a == b
};

struct NodeSpec {
  NodeKind kind = NodeKind::kClosedUniform;
  int count = 1;
};

/// Samples at the requested nodes in ascending t.
std::vector<CriticalSample> batch_samples(double a, double b, const NodeSpec& nodes);

}  // namespace ladderlab
