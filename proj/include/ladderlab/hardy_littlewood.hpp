#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace ladderlab {

/// Value of int_a^b |zeta(1/2 + it)|^2 dt. The error estimate is the sum of the
/// quadrature remainder and the propagated zeta-engine bound.
struct IntegralResult {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t node_count = 0;

  /// Concatenate with an adjacent result starting at this->b.
  IntegralResult merged(const IntegralResult& next) const;
};

inline constexpr double kDefaultQuadTolerance = 1e-8;
inline constexpr double kDefaultCheckpointStride = 50.0;

/// Adaptive G7/K15 panels, bisected until each panel's estimate drops below
/// tol * width / (b - a). Initial panels never exceed pi / ln t.
/// Throws ToleranceError (carrying the best estimate) when the quadrature
/// remainder cannot be pushed below tol.
IntegralResult integrate_segment(double a, double b, double tol = kDefaultQuadTolerance);

/// phi ln phi + (c - ln 2pi) phi, the representation of J(T) at phi = phi_1(T)
/// with the additive constant and the O(ln T / T) term dropped.
double hl_representation(double phi);

/// d/dphi of hl_representation.
double hl_representation_derivative(double phi);

struct Checkpoint {
  double value = 0.0;
  double abs_error = 0.0;
};

/// Prefix values J(T) on the lattice T = k * stride.
///
/// File format: '#'-prefixed metadata lines, then the header `T,J,abs_err` and
/// ascending rows at 17 significant digits. Loading refuses non-monotone data
/// or a foreign engine version.
class CheckpointCache {
 public:
  static constexpr const char* kEngineVersion = "rs-c0c4/em-seam70/gk15/v1";

  explicit CheckpointCache(double stride = kDefaultCheckpointStride,
                           double tolerance = kDefaultQuadTolerance);

  double stride() const noexcept { return stride_; }
  double tolerance() const noexcept { return tolerance_; }
  const std::map<double, Checkpoint>& entries() const noexcept { return entries_; }
  double last_key() const { return entries_.rbegin()->first; }

  /// Largest checkpoint at or below T.
  std::pair<double, Checkpoint> floor(double T) const;

  /// Appends a checkpoint strictly beyond the last one; J must increase.
  void append(double T, Checkpoint checkpoint);

  /// Throws CacheError on any invariant violation.
  void validate() const;

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static CheckpointCache load(std::istream& in);
  static CheckpointCache load(const std::filesystem::path& path);

 private:
  double stride_;
  double tolerance_;
  std::map<double, Checkpoint> entries_;
};

/// J(T) = nearest lattice checkpoint at or below T plus a fresh tail segment.
/// Extends the cache up to floor(T / stride) * stride first. Not thread-safe;
/// see HardyLittlewood for concurrent use.
IntegralResult hl_integral(double T, CheckpointCache& cache, double tol = kDefaultQuadTolerance);

/// Owns a checkpoint cache and serialises extension (single writer, many readers).
/// Results do not depend on which thread extended the cache.
class HardyLittlewood {
 public:
  explicit HardyLittlewood(CheckpointCache cache = CheckpointCache{},
                           double tail_tolerance = kDefaultQuadTolerance);

  IntegralResult J(double T);
  /// J(b) - J(a), both ends assembled from the same lattice.
  IntegralResult segment(double a, double b);
  void extend_to(double T);

  double tail_tolerance() const noexcept { return tail_tolerance_; }
  CheckpointCache snapshot() const;

 private:
  mutable std::shared_mutex mutex_;
  CheckpointCache cache_;
  double tail_tolerance_;
};

}  // namespace ladderlab
