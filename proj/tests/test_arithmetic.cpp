#include <cmath>
#include <vector>

#include "doctest.h"
#include "ladderlab/arithmetic.hpp"
#include "ladderlab/errors.hpp"

using namespace ladderlab;

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("divisor_count examples") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(7 * 13) == 4);
  CHECK(divisor_count(97) == 2);
  CHECK(divisor_count(720720) == 240);
  CHECK_THROWS_AS(divisor_count(0), DomainError);
  CHECK_THROWS_AS(divisor_count(-5), DomainError);
}

TEST_CASE("divisor table invariants") {
  const DivisorTable table(5000);
  CHECK(table[1] == 1);
  for (std::int64_t n = 2; n <= 5000; ++n) {
    CHECK(table[n] == divisor_count(n));
    if (is_prime(n)) CHECK(table[n] == 2);
  }
  CHECK(table[8 * 9] == table[8] * table[9]);
  CHECK(table[25 * 49] == table[25] * table[49]);
  CHECK_THROWS_AS(table[0], DomainError);
  CHECK_THROWS_AS(table[5001], DomainError);
  CHECK_THROWS_AS(DivisorTable(0), DomainError);
}

TEST_CASE("dirichlet_D examples and step convention") {
  CHECK(dirichlet_D(0.0) == 0);
  CHECK(dirichlet_D(0.5) == 0);
  CHECK(dirichlet_D(10.0) == 27);
  CHECK(dirichlet_D(10.9) == 27);
  CHECK(dirichlet_D(11.0) == 29);
  CHECK_THROWS_AS(dirichlet_D(-1.0), DomainError);
  CHECK_THROWS_AS(dirichlet_D(NAN), DomainError);
  CHECK_THROWS_AS(dirichlet_D(1e19), OverflowError);
}

TEST_CASE("hyperbola D equals the naive sum up to 1e4") {
  std::int64_t naive = 0;
  for (std::int64_t n = 1; n <= 10000; ++n) {
    naive += divisor_count(n);
    REQUIRE(dirichlet_D(static_cast<double>(n)) == naive);
  }
}

TEST_CASE("prime_pi examples") {
  CHECK(prime_pi(0.0) == 0);
  CHECK(prime_pi(1.0) == 0);
  CHECK(prime_pi(2.0) == 1);
  CHECK(prime_pi(100.0) == 25);
  CHECK(prime_pi(1e6) == 78498);
  CHECK(prime_pi(1e8) == 5761455);
  CHECK_THROWS_AS(prime_pi(1e8 + 1.0), ResourceError);
  CHECK_THROWS_AS(prime_pi(-3.0), DomainError);
}

TEST_CASE("prime_pi steps by one exactly at primes") {
  std::int64_t prev = prime_pi(1.0);
  for (std::int64_t x = 2; x <= 10000; ++x) {
    const std::int64_t cur = prime_pi(static_cast<double>(x));
    REQUIRE(cur - prev == (is_prime(x) ? 1 : 0));
    prev = cur;
  }
}

TEST_CASE("prime number theorem band") {
  for (double x : {1e4, 1e5, 1e6, 1e7, 1e8}) {
    const double r = static_cast<double>(prime_pi(x)) * std::log(x) / x;
    CAPTURE(x);
    CHECK(r > 0.9);
    CHECK(r < 1.3);
  }
}
