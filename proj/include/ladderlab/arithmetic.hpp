#pragma once

#include <cstdint>
#include <vector>

namespace ladderlab {

/// Number of positive divisors of n (n >= 1), by trial division up to sqrt(n).
std::int64_t divisor_count(std::int64_t n);

/// d(1..limit) by a divisor sieve.
class DivisorTable {
 public:
  explicit DivisorTable(std::int64_t limit);
  std::int64_t limit() const noexcept { return limit_; }
  std::int64_t operator[](std::int64_t n) const;

 private:
  std::int64_t limit_;
  std::vector<std::int32_t> counts_;
};

/// D(x) = sum_{n <= x} d(n) by the hyperbola method, O(sqrt x).
/// Constant on [N, N+1).
std::int64_t dirichlet_D(double x);

/// Largest x accepted by prime_pi.
inline constexpr double kPrimePiLimit = 1e8;

/// pi(x), exact, by a segmented sieve of Eratosthenes. Throws ResourceError above 1e8.
std::int64_t prime_pi(double x);

}  // namespace ladderlab
