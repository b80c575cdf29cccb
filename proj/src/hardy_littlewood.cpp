#include "ladderlab/hardy_littlewood.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "ladderlab/constants.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/numeric.hpp"
#include "ladderlab/zeta_engine.hpp"

namespace ladderlab {
namespace {

// Kronrod 15-point abscissae (descending) and weights; the 7-point Gauss rule
// uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// a 0.3-wide panel bisected 12 times is far below any oscillation scale
constexpr int kMaxDepth = 12;
// hard cap on panels per call; each panel costs 15 evaluations
constexpr std::int64_t kMaxPanels = 50'000'000;

struct PanelEstimate {
  double kronrod;
  double error;
  double engine_error;
};

PanelEstimate gauss_kronrod(double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double f_centre = z_function(centre).zeta_sq;
  double kronrod = kWgk[7] * f_centre;
  double gauss = kWg[3] * f_centre;
  double abs_z = kWgk[7] * std::sqrt(f_centre);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = z_function(centre - dx).zeta_sq;
    const double f2 = z_function(centre + dx).zeta_sq;
    kronrod += kWgk[j] * (f1 + f2);
    abs_z += kWgk[j] * (std::sqrt(f1) + std::sqrt(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double engine = std::max(z_error_bound(lo), z_error_bound(hi));
  return {kronrod * half, std::abs(kronrod - gauss) * half, 2.0 * engine * abs_z * half};
}

double panel_cap(double t) { return kPi / std::log(std::max(t + 1.0, std::numbers::e)); }

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

IntegralResult IntegralResult::merged(const IntegralResult& next) const {
  return {a, next.b, value + next.value, abs_error_estimate + next.abs_error_estimate,
          node_count + next.node_count};
}

IntegralResult integrate_segment(double a, double b, double tol) {
  if (!(a >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_segment: need finite 0 <= a");
  }
  if (a > b) throw DomainError("integrate_segment: a > b");
  if (!(tol > 0.0)) throw DomainError("integrate_segment: tol must be positive");
  IntegralResult out{a, b, 0.0, 0.0, 0};
  if (a == b) return out;

  const double length = b - a;
  CompensatedSum value;
  CompensatedSum quad_error;
  CompensatedSum engine_error;
  std::int64_t panels = 0;
  bool exhausted = false;

  struct Panel {
    double lo, hi;
    int depth;
  };
  std::vector<Panel> stack;
  double x = a;
  while (x < b) {
    double next = std::min(b, x + panel_cap(x));
    // the branch seam of the zeta engine is a panel edge
    if (x < kRiemannSiegelFloor && next > kRiemannSiegelFloor) next = kRiemannSiegelFloor;
    stack.push_back({x, next, 0});
    // depth-first, left to right, so the fold order is fixed
    while (!stack.empty()) {
      const Panel p = stack.back();
      stack.pop_back();
      const PanelEstimate est = gauss_kronrod(p.lo, p.hi);
      ++panels;
      const double width = p.hi - p.lo;
      // below the zeta engine's own error the K15 - G7 gap is noise
      const double budget = std::max(tol * width / length, est.engine_error);
      const double mid = 0.5 * (p.lo + p.hi);
      const bool splittable =
          p.depth < kMaxDepth && mid > p.lo && mid < p.hi && panels < kMaxPanels;
      if (est.error <= budget || !splittable) {
        if (est.error > budget) exhausted = true;
        value += est.kronrod;
        quad_error += est.error;
        engine_error += est.engine_error;
        continue;
      }
      stack.push_back({mid, p.hi, p.depth + 1});
      stack.push_back({p.lo, mid, p.depth + 1});
    }
    x = next;
  }
  out.value = value.value();
  out.abs_error_estimate = quad_error.value() + engine_error.value();
  out.node_count = 15 * panels;
  if (exhausted && quad_error.value() > tol) {
    throw ToleranceError("integrate_segment: tolerance " + format17(tol) + " not met on [" +
                             format17(a) + ", " + format17(b) + "]",
                         out.value, out.abs_error_estimate);
  }
  return out;
}

double hl_representation(double phi) {
  if (!(phi > 1.0) || !std::isfinite(phi)) {
    throw DomainError("hl_representation: phi must exceed 1");
  }
  return phi * std::log(phi) + (kEuler - kLn2Pi) * phi;
}

double hl_representation_derivative(double phi) {
  if (!(phi > 1.0)) throw DomainError("hl_representation_derivative: phi must exceed 1");
  return std::log(phi) + 1.0 + kEuler - kLn2Pi;
}

// ---------------------------------------------------------------------------
// CheckpointCache

CheckpointCache::CheckpointCache(double stride, double tolerance)
    : stride_(stride), tolerance_(tolerance) {
  if (!(stride > 0.0) || !std::isfinite(stride)) throw DomainError("checkpoint stride must be > 0");
  if (!(tolerance > 0.0)) throw DomainError("checkpoint tolerance must be > 0");
  entries_.emplace(0.0, Checkpoint{0.0, 0.0});
}

std::pair<double, Checkpoint> CheckpointCache::floor(double T) const {
  auto it = entries_.upper_bound(T);
  --it;  // key 0 is always present
  return *it;
}

void CheckpointCache::append(double T, Checkpoint checkpoint) {
  const auto& [last_T, last] = *entries_.rbegin();
  if (!(T > last_T)) throw CacheError("checkpoint keys must increase");
  if (!(checkpoint.value > last.value)) {
    throw CacheError("checkpoint J must increase with T (at T = " + format17(T) + ")");
  }
  if (!(checkpoint.abs_error >= 0.0)) throw CacheError("checkpoint error must be >= 0");
  entries_.emplace(T, checkpoint);
}

void CheckpointCache::validate() const {
  if (entries_.empty() || entries_.begin()->first != 0.0 || entries_.begin()->second.value != 0.0) {
    throw CacheError("checkpoint cache must start at T = 0 with J = 0");
  }
  const Checkpoint* prev = nullptr;
  for (const auto& [T, cp] : entries_) {
    if (!std::isfinite(T) || !std::isfinite(cp.value) || !(cp.abs_error >= 0.0)) {
      throw CacheError("non-finite checkpoint at T = " + format17(T));
    }
    if (prev != nullptr && !(cp.value > prev->value)) {
      throw CacheError("J not strictly increasing at T = " + format17(T));
    }
    prev = &cp;
  }
}

void CheckpointCache::save(std::ostream& out) const {
  out << "# ladderlab checkpoint cache\n";
  out << "# engine_version=" << kEngineVersion << "\n";
  out << "# stride=" << format17(stride_) << "\n";
  out << "# tolerance=" << format17(tolerance_) << "\n";
  out << "T,J,abs_err\n";
  for (const auto& [T, cp] : entries_) {
    out << format17(T) << ',' << format17(cp.value) << ',' << format17(cp.abs_error) << '\n';
  }
}

void CheckpointCache::save(const std::filesystem::path& path) const {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp.string());
    save(out);
    if (!out) throw CacheError("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CheckpointCache CheckpointCache::load(std::istream& in) {
  std::string line;
  std::string engine;
  double stride = kDefaultCheckpointStride;
  double tolerance = kDefaultQuadTolerance;
  bool header = false;
  std::vector<std::tuple<double, double, double>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      const std::string val = line.substr(eq + 1);
      try {
        if (key == "engine_version") engine = val;
        else if (key == "stride") stride = std::stod(val);
        else if (key == "tolerance") tolerance = std::stod(val);
      } catch (const std::exception&) {
        throw CacheError("bad cache metadata line: " + line);
      }
      continue;
    }
    if (!header) {
      if (line != "T,J,abs_err") throw CacheError("cache header must be 'T,J,abs_err'");
      header = true;
      continue;
    }
    double T, J, err;
    char c1, c2;
    std::istringstream ls(line);
    if (!(ls >> T >> c1 >> J >> c2 >> err) || c1 != ',' || c2 != ',') {
      throw CacheError("malformed cache row: " + line);
    }
    rows.emplace_back(T, J, err);
  }
  if (!header) throw CacheError("cache file has no header");
  if (engine != kEngineVersion) {
    throw CacheError("cache engine version '" + engine + "' does not match '" + kEngineVersion + "'");
  }
  CheckpointCache cache(stride, tolerance);
  cache.entries_.clear();
  double prev_T = -1.0;
  for (const auto& [T, J, err] : rows) {
    if (!(T > prev_T)) throw CacheError("cache keys not strictly ascending at T = " + format17(T));
    cache.entries_.emplace(T, Checkpoint{J, err});
    prev_T = T;
  }
  cache.validate();
  return cache;
}

CheckpointCache CheckpointCache::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open cache file " + path.string());
  return load(in);
}

IntegralResult hl_integral(double T, CheckpointCache& cache, double tol) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("hl_integral: T must be finite and >= 0");
  if (T == 0.0) return {0.0, 0.0, 0.0, 0.0, 0};
  const double stride = cache.stride();
  const double lattice = std::floor(T / stride) * stride;
  std::int64_t nodes = 0;
  while (cache.last_key() < lattice) {
    const double from = cache.last_key();
    const double to = (std::floor(from / stride) + 1.0) * stride;
    const auto last = cache.entries().rbegin()->second;
    const IntegralResult seg = integrate_segment(from, to, cache.tolerance());
    cache.append(to, {last.value + seg.value, last.abs_error + seg.abs_error_estimate});
    nodes += seg.node_count;
  }
  const auto [base_T, base] = cache.floor(T);
  const IntegralResult tail = integrate_segment(base_T, T, tol);
  return {0.0, T, base.value + tail.value, base.abs_error + tail.abs_error_estimate,
          nodes + tail.node_count};
}

// ---------------------------------------------------------------------------
// HardyLittlewood

HardyLittlewood::HardyLittlewood(CheckpointCache cache, double tail_tolerance)
    : cache_(std::move(cache)), tail_tolerance_(tail_tolerance) {
  if (!(tail_tolerance > 0.0)) throw DomainError("tail tolerance must be > 0");
}

void HardyLittlewood::extend_to(double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("extend_to: T must be finite and >= 0");
  {
    std::shared_lock lock(mutex_);
    if (cache_.last_key() >= std::floor(T / cache_.stride()) * cache_.stride()) return;
  }
  std::unique_lock lock(mutex_);
  const double lattice = std::floor(T / cache_.stride()) * cache_.stride();
  if (cache_.last_key() >= lattice) return;
  // hl_integral at a lattice point extends the cache and leaves an empty tail
  hl_integral(lattice, cache_, cache_.tolerance());
}

IntegralResult HardyLittlewood::J(double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("J: T must be finite and >= 0");
  if (T == 0.0) return {0.0, 0.0, 0.0, 0.0, 0};
  extend_to(T);
  std::pair<double, Checkpoint> base;
  {
    std::shared_lock lock(mutex_);
    base = cache_.floor(T);
  }
  const IntegralResult tail = integrate_segment(base.first, T, tail_tolerance_);
  return {0.0, T, base.second.value + tail.value, base.second.abs_error + tail.abs_error_estimate,
          tail.node_count};
}

IntegralResult HardyLittlewood::segment(double a, double b) {
  if (a > b) throw DomainError("segment: a > b");
  const IntegralResult lo = J(a);
  const IntegralResult hi = J(b);
  // the shared prefix cancels; its error does not
  const auto shared = [&] {
    std::shared_lock lock(mutex_);
    return cache_.floor(a).second.abs_error;
  }();
  return {a, b, hi.value - lo.value, hi.abs_error_estimate + lo.abs_error_estimate - 2.0 * shared,
          lo.node_count + hi.node_count};
}

CheckpointCache HardyLittlewood::snapshot() const {
  std::shared_lock lock(mutex_);
  return cache_;
}

}  // namespace ladderlab
