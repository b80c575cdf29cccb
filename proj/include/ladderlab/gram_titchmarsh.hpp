#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ladderlab {

struct GramPoint {
  std::int64_t nu = 0;
  double t = 0.0;
  double z = 0.0;
};

/// Gram points with from < t_nu <= to, indexed so that theta(t_nu) = (nu - 1) pi.
struct GramSlice {
  double from = 0.0;
  double to = 0.0;
  std::int64_t first_index = 0;  // 0 when empty
  std::vector<GramPoint> points;

  bool empty() const noexcept { return points.empty(); }
};

/// Residual bound for theta(t_nu) - (nu - 1) pi.
inline constexpr double kGramResidual = 1e-9;

/// t_nu for nu >= 1 (t_1 ~ 17.8456), by safeguarded Newton on theta.
double gram_point(std::int64_t nu);

/// All Gram points in (from, to], with Z attached. Requires 10 <= from < to.
GramSlice gram_points(double from, double to);

/// CSV `nu,t,z`.
void write_gram_csv(std::ostream& out, const GramSlice& slice);

/// How the Titchmarsh summands are read off Z at Gram points.
///
/// kGramSigned: s1 = (-1)^(nu-1) Z(t_nu) and s2 = -Z(t_nu) Z(t_nu+1). Both are
///   zeta(1/2 + i t) itself at the Gram points, since e^(i theta) = +-1 there.
/// kSquared: s1 = Z(t_nu)^2, s2 = Z(t_nu) Z(t_nu+1).
/// kSquaredProduct: s1 = Z(t_nu)^2, s2 = Z(t_nu)^2 Z(t_nu+1)^2.
enum class SummandReading { kGramSigned, kSquared, kSquaredProduct };

const char* to_string(SummandReading reading);
SummandReading parse_summand_reading(const std::string& name);

inline constexpr SummandReading kDefaultReading = SummandReading::kGramSigned;

/// Increment forms: sums over a < t_nu <= b, folded left to right with
/// compensation. T2 fetches t_(nu+1) even when it lies past b.
double titchmarsh_T1(double a, double b, SummandReading reading = kDefaultReading);
double titchmarsh_T2(double a, double b, SummandReading reading = kDefaultReading);

/// Cumulative forms over t_1 <= t_nu <= X.
double titchmarsh_T1(double X, SummandReading reading = kDefaultReading);
double titchmarsh_T2(double X, SummandReading reading = kDefaultReading);

/// Same sums over a precomputed slice; T2 needs the point after the slice.
double titchmarsh_T1(const GramSlice& slice, SummandReading reading = kDefaultReading);
double titchmarsh_T2(const GramSlice& slice, SummandReading reading = kDefaultReading);

/// Number of whole Gram intervals [t_nu, t_nu+1] inside (a, b].
std::int64_t gram_intervals_inside(double a, double b);

}  // namespace ladderlab
