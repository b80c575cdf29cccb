// Prints the calibration table frozen in tests/fixtures/calibration.csv.
//
//   ladderlab_calibrate > tests/fixtures/calibration.csv
//
// Each band is observed +- (0.005 + 0.25 |observed - target|): wide enough for
// platform rounding, narrow enough to catch a change in the numerics.

#include <cmath>
#include <cstdio>
#include <string>

#include "ladderlab/arithmetic.hpp"
#include "ladderlab/constants.hpp"
#include "ladderlab/fermat_scan.hpp"
#include "ladderlab/gamma_lab.hpp"

using namespace ladderlab;

namespace {

void emit(const std::string& key, double observed, double target) {
  const double half = 0.005 + 0.25 * std::abs(observed - target);
  std::printf("%s,%.17g,%.17g,%.17g\n", key.c_str(), observed, observed - half, observed + half);
}

}  // namespace

int main() {
  Ladder ladder;
  std::printf("key,observed,lo,hi\n");

  emit("newton_leibniz_T1000_r1", ladder.newton_leibniz_check(1e3, 1).ratio(), 1.0);

  const LadderTower tower = ladder.build_tower(5e3, 3);
  for (int r = 1; r <= 3; ++r) {
    const double lo = tower.iterates[static_cast<std::size_t>(r - 1)];
    const double hi = tower.iterates[static_cast<std::size_t>(r)];
    emit("tower_T5000_rung" + std::to_string(r), ladder.segment(lo, hi).value / (kOneMinusEuler * lo), 1.0);
  }

  emit("gamma_x2_tau10000", gamma_functional(ladder, 2.0, {1e4}).values.at(0), 2.0);
  emit("d_tau1000", verify_factorization_D(ladder, {1e3}).values.at(0), 1.0);
  emit("t1_tau1000", verify_factorization_T1(ladder, {1e3}).values.at(0), 1.0);
  emit("t2_tau1000", verify_factorization_T2(ladder, {1e3}).values.at(0), 1.0);
  emit("chain_tau1000_k3", verify_chain(ladder, 1e3, 3).whole_ratio, 1.0);
  emit("pi_gamma_tau10000_k2", pi_via_gamma(ladder, 1e4, 2) / static_cast<double>(prime_pi(1e4)), 1.0);
  emit("shifted_tau1000_logdiff", verify_shifted_ratio(ladder, 1e3).log_difference, 0.0);
  emit("legendre_tau500_logdiff", verify_legendre_factorization(ladder, 500.0).log_difference, 0.0);

  const FermatRational q = make_fermat_rational(6, 8, 9, 3);
  emit("zeta_q728_729", evaluate_equivalent(ladder, Equivalent::kZeta, q).value, q.value);
  return 0;
}
