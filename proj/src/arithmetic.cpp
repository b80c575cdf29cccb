#include "ladderlab/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ladderlab/errors.hpp"

namespace ladderlab {
namespace {

// Exact doubles stop at 2^53; D(x) for x near there still fits in int64.
constexpr double kMaxExactArgument = 9007199254740992.0;

std::int64_t checked_floor(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite and >= 0");
  }
  if (x >= kMaxExactArgument) {
    throw OverflowError(std::string(what) + ": argument exceeds the exact 64-bit range");
  }
  return static_cast<std::int64_t>(std::floor(x));
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::int64_t divisor_count(std::int64_t n) {
  if (n < 1) throw DomainError("divisor_count: n must be >= 1, got " + std::to_string(n));
  std::int64_t count = 1;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (m > 1) count *= 2;
  return count;
}

DivisorTable::DivisorTable(std::int64_t limit) : limit_(limit) {
  if (limit < 1) throw DomainError("DivisorTable: limit must be >= 1");
  if (limit > 200'000'000) throw ResourceError("DivisorTable: limit above 2e8");
  counts_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t d = 1; d <= limit; ++d) {
    for (std::int64_t m = d; m <= limit; m += d) ++counts_[static_cast<std::size_t>(m)];
  }
}

std::int64_t DivisorTable::operator[](std::int64_t n) const {
  if (n < 1 || n > limit_) throw DomainError("DivisorTable: index out of range");
  return counts_[static_cast<std::size_t>(n)];
}

std::int64_t dirichlet_D(double x) {
  const std::int64_t n = checked_floor(x, "dirichlet_D");
  if (n == 0) return 0;
  const std::int64_t s = isqrt(n);
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= s; ++k) {
    if (__builtin_add_overflow(sum, n / k, &sum)) throw OverflowError("dirichlet_D overflow");
  }
  std::int64_t result;
  if (__builtin_mul_overflow(sum, std::int64_t{2}, &result) ||
      __builtin_sub_overflow(result, s * s, &result)) {
    throw OverflowError("dirichlet_D overflow");
  }
  return result;
}

std::int64_t prime_pi(double x) {
  if (!(x >= 0.0) || std::isnan(x)) throw DomainError("prime_pi: x must be >= 0");
  if (x > kPrimePiLimit) {
    throw ResourceError("prime_pi: x above the supported range 1e8");
  }
  const auto n = static_cast<std::int64_t>(std::floor(x));
  if (n < 2) return 0;
  const std::int64_t root = isqrt(n);

  std::vector<char> small(static_cast<std::size_t>(root) + 1, 1);
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= root; ++p) {
    if (!small[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (std::int64_t m = p * p; m <= root; m += p) small[static_cast<std::size_t>(m)] = 0;
  }

  constexpr std::int64_t kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  std::int64_t count = 0;
  for (std::int64_t lo = 2; lo <= n; lo += kSegment) {
    const std::int64_t hi = std::min(n, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::int64_t p : primes) {
      if (p * p > hi) break;
      std::int64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::int64_t m = start; m <= hi; m += p) seg[static_cast<std::size_t>(m - lo)] = 0;
    }
    for (std::int64_t i = 0; i <= hi - lo; ++i) count += seg[static_cast<std::size_t>(i)];
  }
  return count;
}

}  // namespace ladderlab
