#include "fnls/config.hpp"
#include "fnls/fractional.hpp"
#include "fnls/grid.hpp"
#include "fnls/harness.hpp"
#include "fnls/problems.hpp"
#include "fnls/scheme.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace fnls;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

py::array_t<cplx> to_array(std::span<const cplx> values) {
  py::array_t<cplx> out(static_cast<py::ssize_t>(values.size()));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

GridFunction to_grid(const GridSpec &spec, const ComplexArray &values) {
  if (values.ndim() != 1) {
    throw std::invalid_argument("expected a one-dimensional array");
  }
  return GridFunction(spec, std::vector<cplx>(values.data(), values.data() + values.size()));
}

py::dict record_dict(const RunRecord &r) {
  py::dict d;
  d["step"] = r.step_index;
  d["time"] = r.time;
  d["mass"] = r.mass;
  d["energy"] = r.energy;
  d["rel_mass_drift"] = r.rel_mass_drift;
  d["rel_energy_drift"] = r.rel_energy_drift;
  d["rel_mass_drift_paper_norm"] = r.rel_mass_drift_energy_norm;
  d["fp_iters"] = r.fp_iters;
  return d;
}

ExperimentConfig config_from_text(const std::string &text) {
  std::istringstream in(text);
  return parse_config(in);
}

py::list rows_to_list(const std::vector<ConvergenceRow> &rows) {
  py::list out;
  for (const auto &row : rows) {
    py::dict d;
    d["alpha"] = row.alpha;
    d["tau"] = row.tau;
    d["N"] = row.n;
    d["linf_err"] = row.linf_err;
    d["l2_err"] = row.l2_err;
    d["order_linf"] = row.order_linf ? py::cast(*row.order_linf) : py::none();
    d["order_l2"] = row.order_l2 ? py::cast(*row.order_l2) : py::none();
    out.append(d);
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_fnls, m) {
  m.doc() = "Conservative Fourier pseudo-spectral solver for the space-fractional NLS equation";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](double a, double b, std::size_t n, bool naive) {
             return GridSpec(a, b, n, naive ? TransformPath::naive : TransformPath::fast);
           }),
           py::arg("a"), py::arg("b"), py::arg("n"), py::arg("naive") = false)
      .def_property_readonly("a", &GridSpec::a)
      .def_property_readonly("b", &GridSpec::b)
      .def_property_readonly("n", &GridSpec::size)
      .def_property_readonly("h", &GridSpec::h)
      .def_property_readonly("mu", &GridSpec::mu)
      .def("nodes", [](const GridSpec &s) { return py::array_t<double>(py::cast(s.nodes())); })
      .def("wavenumbers", [](const GridSpec &s) { return py::array_t<long>(py::cast(s.wavenumbers())); })
      .def("__repr__", [](const GridSpec &s) {
        return "GridSpec(a=" + std::to_string(s.a()) + ", b=" + std::to_string(s.b()) +
               ", n=" + std::to_string(s.size()) + ")";
      });

  m.def("forward_dft", [](const GridSpec &spec, const ComplexArray &u) {
    return to_array(forward_dft(to_grid(spec, u)).coeffs());
  }, "Fourier coefficients in natural order k = -N/2 .. N/2-1");
  m.def("inverse_dft", [](const GridSpec &spec, const ComplexArray &c) {
    std::vector<cplx> coeffs(c.data(), c.data() + c.size());
    return to_array(inverse_dft(SpectrumFunction(spec, std::move(coeffs))).values());
  });
  m.def("inner_product", [](const GridSpec &spec, const ComplexArray &u, const ComplexArray &v) {
    return inner_product(to_grid(spec, u), to_grid(spec, v));
  });
  m.def("norm_l2", [](const GridSpec &spec, const ComplexArray &u) { return norm_l2(to_grid(spec, u)); });
  m.def("norm_lp", [](const GridSpec &spec, const ComplexArray &u, double p) { return norm_lp(to_grid(spec, u), p); });
  m.def("norm_linf", [](const GridSpec &spec, const ComplexArray &u) { return norm_linf(to_grid(spec, u)); });

  py::class_<FractionalSymbol>(m, "FractionalSymbol")
      .def(py::init<GridSpec, double>(), py::arg("spec"), py::arg("alpha"))
      .def_property_readonly("alpha", &FractionalSymbol::alpha)
      .def_property_readonly("spec", &FractionalSymbol::spec)
      .def_property_readonly("multipliers", [](const FractionalSymbol &s) {
        return std::vector<double>(s.multipliers().begin(), s.multipliers().end());
      });
  m.def("apply_fractional_laplacian", [](const FractionalSymbol &sym, const ComplexArray &u) {
    return to_array(apply_fractional_laplacian(sym, to_grid(sym.spec(), u)).values());
  });
  m.def("seminorm_sobolev", [](const GridSpec &spec, const ComplexArray &u, double sigma) {
    return seminorm_sobolev(to_grid(spec, u), sigma);
  });
  m.def("norm_sobolev", [](const GridSpec &spec, const ComplexArray &u, double sigma) {
    return norm_sobolev(to_grid(spec, u), sigma);
  });
  m.def("sobolev_embedding_constant", &sobolev_embedding_constant, py::arg("spec"), py::arg("sigma"));

  m.def("mass", [](const GridSpec &spec, const ComplexArray &u) { return mass(to_grid(spec, u)); });
  m.def("energy", [](const FractionalSymbol &sym, const ComplexArray &u, double beta) {
    return energy(to_grid(sym.spec(), u), sym, beta);
  });

  py::class_<SchemeParams>(m, "SchemeParams")
      .def(py::init<>())
      .def(py::init([](double alpha, double beta, double tau, std::size_t n_steps, double tol, std::size_t iters) {
             return SchemeParams{alpha, beta, tau, n_steps, tol, iters};
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("tau"), py::arg("n_steps"), py::arg("fp_tolerance") = 1e-13,
           py::arg("fp_max_iters") = 200)
      .def_readwrite("alpha", &SchemeParams::alpha)
      .def_readwrite("beta", &SchemeParams::beta)
      .def_readwrite("tau", &SchemeParams::tau)
      .def_readwrite("n_steps", &SchemeParams::n_steps)
      .def_readwrite("fp_tolerance", &SchemeParams::fp_tolerance)
      .def_readwrite("fp_max_iters", &SchemeParams::fp_max_iters);

  m.def("step", [](const FractionalSymbol &sym, const ComplexArray &u, const SchemeParams &params) {
    const auto result = crank_nicolson_step(State{to_grid(sym.spec(), u), 0, 0.0}, sym, params);
    return py::make_tuple(to_array(result.state.u.values()), result.fp_iters);
  }, "One Crank-Nicolson step; returns (next_state, fixed_point_iterations)");

  m.def("run", [](const FractionalSymbol &sym, const ComplexArray &u, const SchemeParams &params,
                  std::size_t snapshot_stride) {
    py::list snapshots;
    Observer obs;
    obs.snapshot_stride = snapshot_stride;
    if (snapshot_stride > 0) {
      obs.on_snapshot = [&](const State &st) {
        snapshots.append(py::make_tuple(st.step_index, st.time, to_array(st.u.values())));
      };
    }
    const auto result = run(to_grid(sym.spec(), u), sym, params, obs);
    py::list records;
    for (const auto &r : result.records) {
      records.append(record_dict(r));
    }
    py::dict out;
    out["records"] = records;
    out["final"] = to_array(result.final_state.u.values());
    out["time"] = result.final_state.time;
    out["snapshots"] = snapshots;
    out["max_l2"] = result.bounds.max_l2;
    out["max_seminorm"] = result.bounds.max_seminorm;
    out["max_linf"] = result.bounds.max_linf;
    return out;
  }, py::arg("sym"), py::arg("initial"), py::arg("params"), py::arg("snapshot_stride") = 0);

  m.def("plane_wave_exact", [](const GridSpec &spec, double t, double amplitude, long lambda, double alpha,
                               double beta) {
    return to_array(plane_wave_exact(spec, t, amplitude, lambda, alpha, beta).values());
  }, py::arg("spec"), py::arg("t"), py::arg("A"), py::arg("lam"), py::arg("alpha"), py::arg("beta"));
  m.def("soliton_initial", [](const GridSpec &spec) { return to_array(soliton_initial(spec).values()); });
  m.def("error_norms", [](const GridSpec &spec, const ComplexArray &numeric, const ComplexArray &exact) {
    const auto e = error_norms(to_grid(spec, numeric), to_grid(spec, exact));
    return py::make_tuple(e.linf, e.l2);
  });
  m.def("compute_order", &compute_order, py::arg("err1"), py::arg("err2"), py::arg("s1"), py::arg("s2"));

  m.def("convergence_time", [](const std::string &config) { return rows_to_list(run_convergence_time(config_from_text(config))); },
        "Temporal convergence table from `key = value` config text");
  m.def("convergence_space", [](const std::string &config) { return rows_to_list(run_convergence_space(config_from_text(config))); },
        "Spatial convergence table from `key = value` config text");
  m.def("oracle_verify", [](std::size_t samples) {
    OracleOptions options;
    options.samples = samples;
    const auto report = oracle_verify(options);
    return py::make_tuple(report.passed(), report.max_error());
  }, py::arg("samples") = 3);

#ifdef FNLS_VERSION
  m.attr("__version__") = FNLS_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
