#include <cmath>
#include <vector>

#include "doctest.h"
#include "ladderlab/errors.hpp"
#include "ladderlab/numeric.hpp"
#include "ladderlab/parallel.hpp"
#include "ladderlab/report_io.hpp"

using namespace ladderlab;

TEST_CASE("compensated sum recovers cancelled low bits") {
  CompensatedSum s;
  s += 1e16;
  for (int i = 0; i < 1000; ++i) s += 1.0;
  s += -1e16;
  CHECK(s.value() == 1000.0);
}

TEST_CASE("brent finds a cubic root to the residual tolerance") {
  auto f = [](double x) { return x * x * x - 2.0; };
  const RootResult r = solve_bracketed(f, 0.0, 2.0, f(0.0), f(2.0), 1e-14);
  CHECK(std::abs(r.residual) <= 1e-14);
  CHECK(r.root == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
  CHECK(r.lo <= r.root);
  CHECK(r.root <= r.hi);
}

TEST_CASE("brent refuses an unbracketed interval") {
  auto f = [](double x) { return x * x + 1.0; };
  CHECK_THROWS_AS(solve_bracketed(f, -1.0, 1.0, f(-1.0), f(1.0), 1e-12), BracketError);
}

TEST_CASE("parallel_for visits each index once and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw DomainError("boom");
                  }),
                  DomainError);
}

TEST_CASE("json numbers use 17 significant digits and null for non-finite") {
  CHECK(json_number(0.1) == "0.10000000000000001");
  CHECK(json_number(std::nan("")) == "null");
  CHECK(json_number(INFINITY) == "null");
  CHECK(json_string("a\"b\n") == "\"a\\\"b\\n\"");
}
