#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <sstream>

#include "ladderlab/arithmetic.hpp"
#include "ladderlab/errors.hpp"
#include "ladderlab/fermat_scan.hpp"
#include "ladderlab/gamma_lab.hpp"
#include "ladderlab/gram_titchmarsh.hpp"
#include "ladderlab/hardy_littlewood.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/zeta_engine.hpp"

namespace py = pybind11;
using namespace ladderlab;

namespace {

py::dict to_dict(const IntegralResult& r) {
  py::dict d;
  d["a"] = r.a;
  d["b"] = r.b;
  d["value"] = r.value;
  d["abs_error"] = r.abs_error_estimate;
  d["nodes"] = r.node_count;
  return d;
}

py::dict to_dict(const FunctionalReport& r) {
  py::dict d;
  d["functional"] = r.functional_id;
  d["x"] = r.x;
  d["tau"] = r.tau_grid;
  d["value"] = r.values;
  d["abs_err"] = r.abs_err;
  d["target"] = r.target;
  d["metadata"] = r.metadata;
  d["failures"] = r.failures;
  return d;
}

py::dict to_dict(const FermatRational& q) {
  py::dict d;
  d["x"] = q.x;
  d["y"] = q.y;
  d["z"] = q.z;
  d["n"] = q.n;
  d["numerator"] = q.numerator;
  d["denominator"] = q.denominator;
  d["value"] = q.value;
  return d;
}

ScanOptions scan_options(unsigned threads, std::optional<double> window_eps,
                         std::optional<std::vector<double>> tau_grid, const std::string& reading) {
  ScanOptions o;
  o.threads = threads;
  o.window_eps = window_eps;
  o.tau_grid = std::move(tau_grid);
  o.reading = parse_summand_reading(reading);
  return o;
}

std::vector<Equivalent> parse_ids(const std::vector<std::string>& names) {
  if (names.size() == 1 && names[0] == "all") return all_equivalents();
  std::vector<Equivalent> ids;
  for (const auto& s : names) ids.push_back(parse_equivalent(s));
  return ids;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<ToleranceError>(m, "ToleranceError", base);
  py::register_exception<BracketError>(m, "BracketError", base);
  py::register_exception<CacheError>(m, "CacheError", base);
  py::register_exception<OverflowError>(m, "OverflowError", base);
  py::register_exception<ResourceError>(m, "ResourceError", base);
  py::register_exception<FermatViolation>(m, "FermatViolation", base);

  m.def("theta", &theta, py::arg("t"));
  m.def("z_function", [](double t) {
    auto s = z_function(t);
    return py::make_tuple(s.z, s.zeta_sq);
  }, py::arg("t"), "(Z(t), |zeta(1/2+it)|^2)");
  m.def("ln_gamma", &ln_gamma, py::arg("x"));

  m.def("divisor_count", &divisor_count, py::arg("n"));
  m.def("dirichlet_D", &dirichlet_D, py::arg("x"));
  m.def("prime_pi", &prime_pi, py::arg("x"), py::call_guard<py::gil_scoped_release>());

  py::class_<CheckpointCache>(m, "CheckpointCache")
      .def(py::init<double, double>(), py::arg("stride") = kDefaultCheckpointStride,
           py::arg("tolerance") = kDefaultQuadTolerance)
      .def_static("load", py::overload_cast<const std::filesystem::path&>(&CheckpointCache::load))
      .def("save", py::overload_cast<const std::filesystem::path&>(&CheckpointCache::save, py::const_))
      .def_property_readonly("stride", &CheckpointCache::stride)
      .def_property_readonly("last_key", &CheckpointCache::last_key);

  py::class_<HardyLittlewood, std::shared_ptr<HardyLittlewood>>(m, "HardyLittlewood")
      .def(py::init<CheckpointCache, double>(), py::arg("cache") = CheckpointCache{},
           py::arg("tail_tolerance") = kDefaultQuadTolerance)
      .def("J", [](HardyLittlewood& hl, double T) {
        IntegralResult r;
        {
          py::gil_scoped_release nogil;
          r = hl.J(T);
        }
        return to_dict(r);
      }, py::arg("T"))
      .def("segment", [](HardyLittlewood& hl, double a, double b) {
        IntegralResult r;
        {
          py::gil_scoped_release nogil;
          r = hl.segment(a, b);
        }
        return to_dict(r);
      }, py::arg("a"), py::arg("b"))
      .def("extend_to", &HardyLittlewood::extend_to, py::arg("T"),
           py::call_guard<py::gil_scoped_release>())
      .def("snapshot", &HardyLittlewood::snapshot);

  py::class_<Ladder, std::shared_ptr<Ladder>>(m, "Ladder")
      .def(py::init([](std::shared_ptr<HardyLittlewood> hl, double tol, double floor) {
             if (!hl) hl = std::make_shared<HardyLittlewood>();
             return std::make_shared<Ladder>(std::move(hl), tol, floor);
           }),
           py::arg("hl") = nullptr, py::arg("tol") = 1e-6, py::arg("floor") = 100.0)
      .def_property_readonly("tolerance", &Ladder::tolerance)
      .def_property_readonly("floor", &Ladder::floor)
      .def_property_readonly("hl", &Ladder::hl_ptr)
      .def("phi1", py::overload_cast<double>(&Ladder::phi1), py::arg("T"),
           py::call_guard<py::gil_scoped_release>())
      .def("reverse_iterate", py::overload_cast<double>(&Ladder::reverse_iterate), py::arg("T"),
           py::call_guard<py::gil_scoped_release>())
      .def("tower", [](Ladder& l, double T, int k) {
        LadderTower t;
        {
          py::gil_scoped_release nogil;
          t = l.build_tower(T, k);
        }
        return py::make_tuple(t.iterates, t.residuals);
      }, py::arg("T"), py::arg("k"), "(iterates T^0..T^k, residuals per rung)")
      .def("newton_leibniz", [](Ladder& l, double T, int r) {
        NewtonLeibnizReport n;
        {
          py::gil_scoped_release nogil;
          n = l.newton_leibniz_check(T, r);
        }
        py::dict d;
        d["lower"] = n.lower;
        d["upper"] = n.upper;
        d["lhs"] = n.lhs;
        d["rhs"] = n.rhs;
        d["rhs_abs_error"] = n.rhs_abs_error;
        d["ratio"] = n.ratio();
        return d;
      }, py::arg("T"), py::arg("r") = 1);

  m.def("gram_point", &gram_point, py::arg("nu"));
  m.def("gram_points", [](double from, double to) {
    GramSlice s;
    {
      py::gil_scoped_release nogil;
      s = gram_points(from, to);
    }
    py::list out;
    for (const auto& p : s.points) out.append(py::make_tuple(p.nu, p.t, p.z));
    return out;
  }, py::arg("from_"), py::arg("to"), "[(nu, t_nu, Z(t_nu)), ...] over (from, to]");
  m.def("titchmarsh_T1", [](double a, double b, const std::string& reading) {
    return titchmarsh_T1(a, b, parse_summand_reading(reading));
  }, py::arg("a"), py::arg("b"), py::arg("reading") = to_string(kDefaultReading));
  m.def("titchmarsh_T2", [](double a, double b, const std::string& reading) {
    return titchmarsh_T2(a, b, parse_summand_reading(reading));
  }, py::arg("a"), py::arg("b"), py::arg("reading") = to_string(kDefaultReading));

  m.def("evaluate_functional",
        [](Ladder& l, const std::string& id, const std::vector<double>& taus, double x, int k,
           unsigned threads, const std::string& reading) {
          GridOptions o{threads, parse_summand_reading(reading)};
          FunctionalReport r;
          {
            py::gil_scoped_release nogil;
            r = evaluate_functional(l, id, x, taus, k, o);
          }
          return to_dict(r);
        },
        py::arg("ladder"), py::arg("id"), py::arg("tau_grid"), py::arg("x") = 1.0,
        py::arg("k") = 1, py::arg("threads") = 1u,
        py::arg("reading") = to_string(kDefaultReading));

  m.def("enumerate_fermat_rationals",
        [](int n, std::int64_t max_xyz, std::optional<double> window_eps) {
          py::list out;
          for (const auto& q : enumerate_fermat_rationals(n, max_xyz, window_eps))
            out.append(to_dict(q));
          return out;
        },
        py::arg("n"), py::arg("max_xyz"), py::arg("window_eps") = py::none());
  m.def("all_equivalents", [] {
    std::vector<std::string> names;
    for (auto id : all_equivalents()) names.emplace_back(to_string(id));
    return names;
  });

  auto run_scan = [](Ladder& l, const std::vector<std::string>& functionals, int n,
                     std::int64_t max_xyz, std::optional<double> window_eps,
                     std::optional<std::vector<double>> tau_grid, unsigned threads,
                     const std::string& reading) {
    auto ids = parse_ids(functionals);
    auto o = scan_options(threads, window_eps, std::move(tau_grid), reading);
    py::gil_scoped_release nogil;
    return scan(l, ids, n, max_xyz, o);
  };

  m.def("scan",
        [run_scan](Ladder& l, const std::vector<std::string>& functionals, int n,
                   std::int64_t max_xyz, std::optional<double> window_eps,
                   std::optional<std::vector<double>> tau_grid, unsigned threads,
                   const std::string& reading) {
          auto report = run_scan(l, functionals, n, max_xyz, window_eps, std::move(tau_grid),
                                 threads, reading);
          py::list rows;
          for (const auto& r : report.rows) {
            auto d = to_dict(r.q);
            d["functional"] = r.functional;
            d["tau_max"] = r.tau_max;
            d["value"] = r.value;
            d["target"] = r.target;
            d["forbidden"] = r.forbidden;
            d["distance"] = r.distance;
            d["est_error"] = r.est_error;
            d["status"] = r.status;
            d["taus"] = r.taus;
            d["values"] = r.values;
            rows.append(std::move(d));
          }
          return rows;
        },
        py::arg("ladder"), py::arg("functionals"), py::arg("n") = 3, py::arg("max_xyz") = 12,
        py::arg("window_eps") = py::none(), py::arg("tau_grid") = py::none(),
        py::arg("threads") = 1u, py::arg("reading") = to_string(kDefaultReading));

  m.def("scan_json",
        [run_scan](Ladder& l, const std::vector<std::string>& functionals, int n,
                   std::int64_t max_xyz, std::optional<double> window_eps,
                   std::optional<std::vector<double>> tau_grid, unsigned threads,
                   const std::string& reading) {
          auto report = run_scan(l, functionals, n, max_xyz, window_eps, std::move(tau_grid),
                                 threads, reading);
          std::ostringstream os;
          write_scan_json(os, report);
          return os.str();
        },
        py::arg("ladder"), py::arg("functionals"), py::arg("n") = 3, py::arg("max_xyz") = 12,
        py::arg("window_eps") = py::none(), py::arg("tau_grid") = py::none(),
        py::arg("threads") = 1u, py::arg("reading") = to_string(kDefaultReading));
}
