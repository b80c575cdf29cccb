#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/fermat_scan.hpp"
#include "support.hpp"

using namespace ladderlab;

namespace {

Ladder& shared_ladder() {
  static Ladder ladder;
  return ladder;
}

}  // namespace

TEST_CASE("Fermat rationals") {
  const FermatRational q = make_fermat_rational(6, 8, 9, 3);
  CHECK(q.numerator == 728);
  CHECK(q.denominator == 729);
  CHECK(q.value == 728.0 / 729.0);
  CHECK_THROWS_AS(make_fermat_rational(1, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(make_fermat_rational(0, 1, 1, 3), DomainError);
  CHECK_THROWS_AS(make_fermat_rational(3, 4, 5, 62), OverflowError);
  // n = 2 lies outside the class.
  CHECK_THROWS_AS(make_fermat_rational(3, 4, 5, 2), DomainError);
}

TEST_CASE("enumeration examples") {
  const auto one = enumerate_fermat_rationals(3, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == 2.0);

  const auto window = enumerate_fermat_rationals(3, 12, 0.01);
  bool found = false;
  for (const auto& q : window) {
    CHECK(std::abs(q.value - 1.0) < 0.01);
    if (q.x == 6 && q.y == 8 && q.z == 9) found = true;
  }
  CHECK(found);
  CHECK_THROWS_AS(enumerate_fermat_rationals(2, 5), DomainError);
  CHECK_THROWS_AS(enumerate_fermat_rationals(3, 0), DomainError);
}

TEST_CASE("enumeration dedupes by value and sorts by distance from 1") {
  const auto all = enumerate_fermat_rationals(3, 12);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& q = all[i];
    CHECK(q.numerator != q.denominator);
    const std::int64_t g = std::gcd(q.numerator, q.denominator);
    CHECK(seen.insert({q.numerator / g, q.denominator / g}).second);
    if (i > 0) {
      // |A - B| / B, cross-multiplied; small enough for int64 at n = 3, max 12.
      const auto& p = all[i - 1];
      CHECK(std::abs(q.numerator - q.denominator) * p.denominator >=
            std::abs(p.numerator - p.denominator) * q.denominator);
    }
  }
  // (1,1,1) and (2,2,2) share the value 2; the smaller triple is kept.
  for (const auto& q : all) {
    if (q.value == 2.0) CHECK((q.x == 1 && q.y == 1 && q.z == 1));
  }
  // 9^3 + 10^3 = 12^3 + 1 beats 6^3 + 8^3 = 9^3 - 1.
  CHECK(all.front().numerator == 1729);
  CHECK(all.front().denominator == 1728);
  CHECK(std::any_of(all.begin(), all.end(), [](const auto& r) {
    return r.numerator == 728 && r.denominator == 729;
  }));
}

TEST_CASE("Gamma equivalent for q = 2 resolves far from 1") {
  const ScanRow row = evaluate_equivalent(shared_ladder(), Equivalent::kGamma, make_fermat_rational(1, 1, 1, 3));
  CHECK(row.status == kResolved);
  CHECK(row.target == 2.0);
  CHECK(row.forbidden == 1.0);
  CHECK(row.distance >= 0.5);
  CHECK(std::abs(row.value - 2.0) < 0.2);
  CHECK(row.taus.size() == 4);
  for (std::size_t i = 1; i < row.values.size(); ++i) CHECK(row.taus[i] > row.taus[i - 1]);
}

TEST_CASE("segment equivalent at 728/729 lands near the rational") {
  const auto bands = testing::calibration();
  const FermatRational q = make_fermat_rational(6, 8, 9, 3);
  const ScanRow row = evaluate_equivalent(shared_ladder(), Equivalent::kZeta, q);
  CHECK(bands.at("zeta_q728_729").contains(row.value));
  CHECK(row.target == q.value);
  CHECK(row.distance == std::abs(row.value - 1.0));
}

TEST_CASE("ratio equivalent with x = y = z = 1 is near 2") {
  const ScanRow row = evaluate_equivalent(shared_ladder(), Equivalent::kZetaRatio, make_fermat_rational(1, 1, 1, 4));
  CHECK(row.value == doctest::Approx(2.0).epsilon(0.05));
  CHECK(row.target == 2.0);
}

TEST_CASE("targets and forbidden values by functional") {
  const FermatRational q = make_fermat_rational(1, 2, 2, 3);  // 9/8
  Ladder& L = shared_ladder();
  ScanOptions opts;
  opts.anchors = {1e3, 3e3};
  const ScanRow t1 = evaluate_equivalent(L, Equivalent::kT1, q, opts);
  CHECK(t1.target == doctest::Approx(q.value / kPi));
  CHECK(t1.forbidden == doctest::Approx(1.0 / kPi));
  const ScanRow t2 = evaluate_equivalent(L, Equivalent::kT2, q, opts);
  CHECK(t2.target == doctest::Approx((1.0 + kEuler) * q.value / kPi));
  const ScanRow ge = evaluate_equivalent(L, Equivalent::kGammaExp, q, opts);
  CHECK(ge.target == doctest::Approx(std::exp(q.value)));
  CHECK(ge.forbidden == doctest::Approx(std::exp(1.0)));
  const ScanRow g = evaluate_equivalent(L, Equivalent::kGamma, q, opts);
  CHECK(ge.value == doctest::Approx(std::exp(g.value)).epsilon(1e-14));
  for (const ScanRow* row : {&t1, &t2, &ge, &g}) {
    CAPTURE(row->functional);
    CHECK(row->target != row->forbidden);
    CHECK(row->distance >= 0.0);
  }
}

TEST_CASE("log forms respect the feasibility window") {
  Ladder& L = shared_ladder();
  // tau^q with q = 2: tau ranges over sqrt of the anchors, all feasible.
  const ScanRow ok = evaluate_equivalent(L, Equivalent::kZetaLog, make_fermat_rational(1, 1, 1, 3));
  CHECK(ok.taus.size() == 4);
  CHECK(std::abs(ok.value - 2.0) < 0.3);
  // tau^A with A = 2^3 + 3^3 and tau^B with B = 1: no tau puts both in [100, 1e5].
  const ScanRow no = evaluate_equivalent(L, Equivalent::kZetaLogRatio, make_fermat_rational(2, 3, 1, 3));
  CHECK(no.status == kInfeasible);
  CHECK(std::isnan(no.value));
  ScanOptions literal;
  literal.tau_grid = std::vector<double>{5.0, 50.0, 500.0};
  const ScanRow lit = evaluate_equivalent(L, Equivalent::kD, make_fermat_rational(1, 1, 1, 3), literal);
  CHECK(lit.taus == std::vector<double>{50.0, 500.0});
}

TEST_CASE("a single feasible point is never resolved") {
  ScanOptions opts;
  opts.anchors = {2e3};
  const ScanRow row = evaluate_equivalent(shared_ladder(), Equivalent::kGamma, make_fermat_rational(1, 1, 1, 3), opts);
  CHECK(row.status == kUnresolved);
  CHECK(std::isinf(row.est_error));
}

TEST_CASE("scan plumbing") {
  Ladder& L = shared_ladder();
  CHECK(scan(L, {}, 3, 3).rows.empty());
  const ScanReport one = scan(L, {Equivalent::kGamma}, 3, 1);
  REQUIRE(one.rows.size() == 1);
  const ScanRow direct = evaluate_equivalent(L, Equivalent::kGamma, make_fermat_rational(1, 1, 1, 3));
  CHECK(one.rows[0].value == direct.value);
  CHECK(one.rows[0].status == direct.status);

  ScanOptions windowed;
  windowed.window_eps = 0.05;
  const ScanReport w = scan(L, {Equivalent::kGamma, Equivalent::kD}, 3, 12, windowed);
  CHECK(!w.rows.empty());
  for (const auto& row : w.rows) CHECK(std::abs(row.q.value - 1.0) < 0.05);
  CHECK(w.rows.front().functional == "gamma");
  CHECK(w.rows.back().functional == "d");
}

TEST_CASE("thread count does not change the JSON") {
  Ladder L;
  ScanOptions serial;
  ScanOptions threaded;
  threaded.threads = 4;
  const std::vector<Equivalent> ids = {Equivalent::kGamma, Equivalent::kZeta, Equivalent::kT1};
  std::ostringstream a, b;
  write_scan_json(a, scan(L, ids, 3, 4, serial));
  write_scan_json(b, scan(L, ids, 3, 4, threaded));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("\"est_error\"") != std::string::npos);
}

TEST_CASE("names round trip") {
  for (Equivalent id : all_equivalents()) CHECK(parse_equivalent(to_string(id)) == id);
  CHECK(all_equivalents().size() == 10);
  CHECK_THROWS_AS(parse_equivalent("zeta-cubed"), DomainError);
}
