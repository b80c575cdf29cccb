#include <cmath>
#include <limits>

#include "doctest.h"
#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/zeta_engine.hpp"
#include "support.hpp"

using namespace ladderlab;

TEST_CASE("theta and Z at fixed points match the oracle") {
  const auto oracle = testing::oracle_scalars();
  CHECK(std::abs(theta(100.0) - oracle.at("theta_100").value) <= 1e-10);
  CHECK(std::abs(z_function(10.0).z - oracle.at("z_10").value) <= 1e-10);
  const CriticalSample s = z_function(30.0);
  CHECK(std::abs(s.zeta_sq - oracle.at("z_30_sq").value) <= 1e-10);
  CHECK(s.zeta_sq == doctest::Approx(s.z * s.z));
}

TEST_CASE("Z vanishes at the tabulated zeros below 100") {
  const auto csv = testing::read_csv(testing::fixture("zeros_below_100.csv"));
  REQUIRE(csv.rows.size() == 29);
  for (const auto& row : csv.rows) {
    const double gamma = std::stod(row.back());
    // The zero is known to ~1 ulp; |Z'| < 3 here.
    CHECK(std::abs(z_function(gamma).z) <= z_error_bound(gamma) + 3.0 * 4e-15 * gamma);
  }
}

TEST_CASE("Z on the 1000-point oracle stays inside its error bound") {
  const auto csv = testing::read_csv(testing::fixture("z_oracle.csv"));
  REQUIRE(csv.rows.size() == 1000);
  const auto t_col = csv.column("t");
  const auto z_col = csv.column("z");
  double worst = 0.0;
  for (const auto& row : csv.rows) {
    const double t = std::stod(row[t_col]);
    const double z = std::stod(row[z_col]);
    const double got = z_function(t).z;
    CHECK(std::abs(got - z) <= z_error_bound(t));
    worst = std::max(worst, std::abs(got * got - z * z));
  }
  CHECK(worst <= 1e-5);
}

TEST_CASE("the two branches agree at the seam") {
  const double t = kRiemannSiegelFloor;
  CHECK(std::abs(z_riemann_siegel(t) - z_euler_maclaurin(t)) <= 1e-6);
  CHECK(std::abs(z_riemann_siegel(t + 5.0) - z_euler_maclaurin(t + 5.0)) <= 1e-6);
}

TEST_CASE("theta derivative matches a central difference") {
  for (double t : {5.0, 12.0, 80.0, 1e4}) {
    const double h = 1e-4 * std::max(1.0, t / 100.0);
    const double fd = (theta(t + h) - theta(t - h)) / (2.0 * h);
    CHECK(theta_derivative(t) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("Z is even in the sense of |zeta|^2 being finite and non-negative") {
  for (double t : {0.0, 0.5, 3.0, 9.99, 10.0, 69.9, 70.0, 1234.5}) {
    const CriticalSample s = z_function(t);
    CHECK(std::isfinite(s.z));
    CHECK(s.zeta_sq >= 0.0);
  }
  // zeta(1/2) = -1.4603545088095868...
  CHECK(z_function(0.0).z == doctest::Approx(-1.4603545088095868).epsilon(1e-12));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(z_function(-1.0), DomainError);
  CHECK_THROWS_AS(z_function(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(theta(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("batch nodes") {
  const auto closed = batch_samples(100.0, 101.0, {NodeKind::kClosedUniform, 5});
  REQUIRE(closed.size() == 5);
  CHECK(closed.front().t == 100.0);
  CHECK(closed.back().t == 101.0);
  const auto open = batch_samples(100.0, 101.0, {NodeKind::kOpenUniform, 4});
  REQUIRE(open.size() == 4);
  CHECK(open.front().t > 100.0);
  CHECK(open.back().t < 101.0);
  const auto cheb = batch_samples(100.0, 101.0, {NodeKind::kChebyshev, 7});
  REQUIRE(cheb.size() == 7);
  for (std::size_t i = 1; i < cheb.size(); ++i) CHECK(cheb[i].t > cheb[i - 1].t);
  CHECK(batch_samples(50.0, 50.0, {NodeKind::kOpenUniform, 3}).empty());
  for (const auto& s : closed) CHECK(s.z == z_function(s.t).z);
}
