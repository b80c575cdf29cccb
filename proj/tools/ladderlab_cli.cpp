// ladderlab: command-line front end.
//
// Exit status: 0 success, 1 computation error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/fermat_scan.hpp"
#include "ladderlab/gamma_lab.hpp"
#include "ladderlab/gram_titchmarsh.hpp"
#include "ladderlab/hardy_littlewood.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/report_io.hpp"
#include "ladderlab/zeta_engine.hpp"

namespace fs = std::filesystem;
using namespace ladderlab;

namespace {

constexpr int kUsageError = 2;
constexpr int kComputationError = 1;

struct Config {
  unsigned threads = 1;
  std::string cache_path;
  std::string format = "csv";
  double quad_tol = kDefaultQuadTolerance;
  double ladder_tol = kDefaultLadderTolerance;
  std::string reading = to_string(kDefaultReading);
  std::string out;
};

// Writes to --out when given, stdout otherwise. LF only.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish() {
    stream().flush();
    if (file_.is_open() && !file_) throw Error("failed writing output file");
  }

 private:
  std::ofstream file_;
};

std::shared_ptr<HardyLittlewood> open_engine(const Config& cfg) {
  CheckpointCache cache(kDefaultCheckpointStride, kDefaultQuadTolerance);
  if (!cfg.cache_path.empty() && fs::exists(cfg.cache_path)) cache = CheckpointCache::load(fs::path(cfg.cache_path));
  return std::make_shared<HardyLittlewood>(std::move(cache), cfg.quad_tol);
}

void persist(const Config& cfg, HardyLittlewood& hl) {
  if (cfg.cache_path.empty()) return;
  hl.snapshot().save(fs::path(cfg.cache_path));
}

void emit_keyvalues(std::ostream& out, const std::string& format,
                    const std::vector<std::pair<std::string, double>>& kv) {
  if (format == "json") {
    JsonWriter w(out);
    w.begin_object();
    for (const auto& [k, v] : kv) {
      w.key(k);
      w.value(v);
    }
    w.end_object();
    return;
  }
  for (std::size_t i = 0; i < kv.size(); ++i) out << (i ? "," : "") << kv[i].first;
  out << '\n';
  for (std::size_t i = 0; i < kv.size(); ++i) out << (i ? "," : "") << format_g17(kv[i].second);
  out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ladderlab: Hardy-Littlewood integral, reverse ladder iterations, Gamma factorization and Fermat-rational scans"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.allow_extras(false);

  Config cfg;
  if (const char* env = std::getenv("HL_CACHE")) cfg.cache_path = env;
  app.add_option("--threads", cfg.threads, "Worker threads for grids and scans")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache", cfg.cache_path, "Checkpoint cache file (default: $HL_CACHE)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--quad-tol", cfg.quad_tol, "Quadrature tolerance for J tails")->check(CLI::PositiveNumber);
  app.add_option("--ladder-tol", cfg.ladder_tol, "Residual tolerance of the ladder equations")->check(CLI::PositiveNumber);
  app.add_option("--reading", cfg.reading, "Titchmarsh summand reading")
      ->check(CLI::IsMember({"gram-signed", "squared", "squared-product"}));

  double zeta_t = 0.0;
  auto* zeta = app.add_subcommand("zeta", "Z(t) and |zeta(1/2+it)|^2");
  zeta->add_option("--t", zeta_t, "Ordinate t >= 0")->required();

  double from = 0.0, to = 0.0, tol = kDefaultQuadTolerance;
  auto* integral = app.add_subcommand("integral", "int_from^to |zeta(1/2+it)|^2 dt");
  integral->add_option("--from", from)->required();
  integral->add_option("--to", to)->required();
  integral->add_option("--tol", tol, "Quadrature tolerance")->check(CLI::PositiveNumber);

  double ladder_T = 0.0;
  int ladder_k = 1;
  auto* ladder_cmd = app.add_subcommand("ladder", "Reverse iterates T < T^1 < ... < T^k");
  ladder_cmd->add_option("--T", ladder_T)->required();
  ladder_cmd->add_option("--k", ladder_k)->required()->check(CLI::PositiveNumber);

  double gram_from = 0.0, gram_to = 0.0;
  auto* gram = app.add_subcommand("gram", "Gram points in (from, to] as nu,t,z");
  gram->add_option("--from", gram_from)->required();
  gram->add_option("--to", gram_to)->required();
  gram->add_option("--out", cfg.out, "Output file (default stdout)");

  std::string functional_id;
  double functional_x = 1.0;
  std::vector<double> tau_grid;
  int functional_k = 1;
  auto* functional = app.add_subcommand("functional", "Convergence table of one functional");
  functional->add_option("--id", functional_id)
      ->required()
      ->check(CLI::IsMember({"gamma", "d", "t1", "t2", "chain", "shifted", "legendre", "pi-gamma"}));
  functional->add_option("--x", functional_x, "Ray parameter (gamma only)");
  functional->add_option("--tau-grid", tau_grid, "Comma-separated ascending tau values")->required()->delimiter(',');
  functional->add_option("--k", functional_k, "Tower height (chain, pi-gamma)")->check(CLI::PositiveNumber);
  functional->add_option("--out", cfg.out, "Output file (default stdout)");

  std::vector<std::string> scan_ids;
  int scan_n = 3;
  std::int64_t scan_max = 1;
  std::optional<double> window_eps;
  std::vector<double> scan_grid, scan_anchors;
  auto* scan_cmd = app.add_subcommand("scan", "Evaluate equivalents over Fermat rationals; JSON report");
  scan_cmd->add_option("--functionals", scan_ids, "Comma-separated ids, or 'all'")->required()->delimiter(',');
  scan_cmd->add_option("--n", scan_n)->required()->check(CLI::Range(3, 62));
  scan_cmd->add_option("--max-xyz", scan_max)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--window-eps", window_eps, "Keep |q - 1| < eps")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--tau-grid", scan_grid, "Literal tau grid instead of anchors")->delimiter(',');
  scan_cmd->add_option("--anchors", scan_anchors, "Largest base point per grid row")->delimiter(',');
  scan_cmd->add_option("--out", cfg.out, "Output JSON path")->required();

  std::string cache_file;
  double extend_to = 0.0;
  auto* cache_cmd = app.add_subcommand("cache", "Create or extend a checkpoint cache file");
  cache_cmd->add_option("--path", cache_file)->required();
  cache_cmd->add_option("--extend-to", extend_to)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*zeta) {
      const CriticalSample s = z_function(zeta_t);
      emit_keyvalues(std::cout, cfg.format,
                     {{"t", s.t}, {"z", s.z}, {"zeta_sq", s.zeta_sq}, {"error_bound", z_error_bound(s.t)}});
    } else if (*integral) {
      const IntegralResult r = integrate_segment(from, to, tol);
      emit_keyvalues(std::cout, cfg.format,
                     {{"from", r.a},
                      {"to", r.b},
                      {"value", r.value},
                      {"abs_error_estimate", r.abs_error_estimate},
                      {"node_count", static_cast<double>(r.node_count)}});
    } else if (*ladder_cmd) {
      auto hl = open_engine(cfg);
      Ladder ladder(hl, cfg.ladder_tol);
      const LadderTower tower = ladder.build_tower(ladder_T, ladder_k);
      std::ostream& out = std::cout;
      if (cfg.format == "json") {
        JsonWriter w(out);
        w.begin_object();
        w.key("base");
        w.value(tower.base);
        w.key("k");
        w.value(tower.k);
        w.key("rungs");
        w.begin_array();
        for (int r = 0; r <= tower.k; ++r) {
          w.begin_object();
          w.key("r");
          w.value(r);
          w.key("T");
          w.value(tower.iterates[static_cast<std::size_t>(r)]);
          w.key("residual");
          w.value(r == 0 ? 0.0 : tower.residuals[static_cast<std::size_t>(r - 1)]);
          w.end_object();
        }
        w.end_array();
        w.end_object();
      } else {
        out << "r,T,residual\n";
        for (int r = 0; r <= tower.k; ++r) {
          out << r << ',' << format_g17(tower.iterates[static_cast<std::size_t>(r)]) << ','
              << format_g17(r == 0 ? 0.0 : tower.residuals[static_cast<std::size_t>(r - 1)]) << '\n';
        }
      }
      persist(cfg, *hl);
    } else if (*gram) {
      const GramSlice slice = gram_points(gram_from, gram_to);
      Output out(cfg.out);
      if (cfg.format == "json") {
        JsonWriter w(out.stream());
        w.begin_array();
        for (const auto& p : slice.points) {
          w.begin_object();
          w.key("nu");
          w.value(static_cast<long long>(p.nu));
          w.key("t");
          w.value(p.t);
          w.key("z");
          w.value(p.z);
          w.end_object();
        }
        w.end_array();
      } else {
        write_gram_csv(out.stream(), slice);
      }
      out.finish();
    } else if (*functional) {
      auto hl = open_engine(cfg);
      Ladder ladder(hl, cfg.ladder_tol);
      GridOptions options;
      options.threads = cfg.threads;
      options.reading = parse_summand_reading(cfg.reading);
      const FunctionalReport report =
          evaluate_functional(ladder, functional_id, functional_x, tau_grid, functional_k, options);
      Output out(cfg.out);
      if (cfg.format == "json") {
        write_report_json(out.stream(), report);
      } else {
        write_report_csv(out.stream(), report);
      }
      out.finish();
      for (const auto& [tau, message] : report.failures) {
        std::cerr << "tau = " << format_g17(tau) << ": " << message << '\n';
      }
      persist(cfg, *hl);
      if (!report.failures.empty()) return kComputationError;
    } else if (*scan_cmd) {
      std::vector<Equivalent> ids;
      for (const auto& name : scan_ids) {
        if (name == "all") {
          for (Equivalent id : all_equivalents()) ids.push_back(id);
        } else {
          ids.push_back(parse_equivalent(name));
        }
      }
      auto hl = open_engine(cfg);
      Ladder ladder(hl, cfg.ladder_tol);
      ScanOptions options;
      options.threads = cfg.threads;
      options.reading = parse_summand_reading(cfg.reading);
      options.window_eps = window_eps;
      if (!scan_grid.empty()) options.tau_grid = scan_grid;
      if (!scan_anchors.empty()) options.anchors = scan_anchors;
      const ScanReport report = scan(ladder, ids, scan_n, scan_max, options);
      Output out(cfg.out);
      write_scan_json(out.stream(), report);
      out.finish();
      persist(cfg, *hl);
    } else if (*cache_cmd) {
      CheckpointCache cache(kDefaultCheckpointStride, kDefaultQuadTolerance);
      if (fs::exists(cache_file)) cache = CheckpointCache::load(fs::path(cache_file));
      HardyLittlewood hl(std::move(cache), cfg.quad_tol);
      hl.extend_to(extend_to);
      const CheckpointCache snap = hl.snapshot();
      snap.save(fs::path(cache_file));
      const auto last = snap.floor(snap.last_key());
      emit_keyvalues(std::cout, cfg.format,
                     {{"checkpoints", static_cast<double>(snap.entries().size())},
                      {"last_T", last.first},
                      {"last_J", last.second.value},
                      {"last_abs_err", last.second.abs_error}});
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return 0;
}
