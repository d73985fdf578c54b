// pybind11 surface for the half-wave lab: grids and transforms, the
// projection algebra, diagonalization/evolution, modulation norms, the
// feasibility solver, and the estimate checkers (reports come back as
// plain dicts).

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dkglab/estimates.hpp"
#include "dkglab/io.hpp"
#include "dkglab/norms.hpp"
#include "dkglab/version.hpp"

namespace py = pybind11;
using namespace dkglab;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

std::vector<cplx> to_vector(const CArray& a, int expect) {
  if (a.ndim() != 1 || a.shape(0) != expect) {
    throw std::invalid_argument("expected a length-" + std::to_string(expect) + " 1-D array");
  }
  const auto* ptr = a.data();
  return std::vector<cplx>(ptr, ptr + expect);
}

py::array to_array(const std::vector<cplx>& v) {
  std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(v.size())};
  py::array_t<std::complex<double>> out(shape);
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

ComplexScalarField field_from(const GridSpec& g, const CArray& a, Rep rep) {
  return ComplexScalarField{g, rep, to_vector(a, g.N)};
}

SpinorField spinor_from(const GridSpec& g, const CArray& a, Rep rep) {
  if (a.ndim() != 2 || a.shape(0) != 2 || a.shape(1) != g.N) {
    throw std::invalid_argument("expected a (2, N) spinor array");
  }
  SpinorField f = make_spinor(g, rep);
  for (int i = 0; i < g.N; ++i) {
    f.up.values[i] = a.at(0, i);
    f.lo.values[i] = a.at(1, i);
  }
  return f;
}

py::array spinor_to(const SpinorField& f) {
  py::array_t<std::complex<double>> out({py::ssize_t(2), py::ssize_t(f.grid().N)});
  for (int i = 0; i < f.grid().N; ++i) {
    out.mutable_at(0, i) = f.up.values[i];
    out.mutable_at(1, i) = f.lo.values[i];
  }
  return out;
}

Sign sign_from(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  throw std::invalid_argument("sign must be '+' or '-'");
}

Taper taper_from(const std::string& s) {
  if (s == "none") return Taper::none;
  if (s == "bump") return Taper::bump;
  throw std::invalid_argument("taper must be 'none' or 'bump'");
}

Scheme scheme_from(const std::string& s) {
  if (s == "exponential-rk4") return Scheme::exponential_rk4;
  if (s == "strang") return Scheme::strang;
  throw std::invalid_argument("scheme must be 'exponential-rk4' or 'strang'");
}

PhaseKind kind_from(const std::string& s) {
  if (s == "line") return PhaseKind::line;
  if (s == "cone") return PhaseKind::cone;
  throw std::invalid_argument("phase kind must be 'line' or 'cone'");
}

Component component_from(const std::string& s) {
  for (Component c : {Component::psi_plus_up, Component::psi_plus_lo,
                      Component::psi_minus_up, Component::psi_minus_lo,
                      Component::phi_plus, Component::phi_minus}) {
    if (s == component_name(c)) return c;
  }
  throw std::invalid_argument("unknown component: " + s);
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict report_to_py(const RatioReport& rep) { return json_to_py(rep.to_json()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "half-wave Dirac-Klein-Gordon simulator and estimate lab";
  m.attr("__version__") = kVersion;

  py::class_<GridSpec>(m, "Grid")
      .def(py::init(&make_grid), py::arg("N"), py::arg("L"))
      .def_readonly("N", &GridSpec::N)
      .def_readonly("L", &GridSpec::L)
      .def_property_readonly("dx", &GridSpec::dx)
      .def_property_readonly("dxi", &GridSpec::dxi)
      .def("frequencies", &GridSpec::frequencies)
      .def("__repr__", [](const GridSpec& g) {
        return "Grid(N=" + std::to_string(g.N) + ", L=" + std::to_string(g.L) + ")";
      });

  m.def("forward", [](const GridSpec& g, const CArray& physical) {
    return to_array(to_spectral(field_from(g, physical, Rep::physical)).values);
  }, py::arg("grid"), py::arg("physical"),
     "physical samples -> spectral coefficients (monotone frequency order)");
  m.def("inverse", [](const GridSpec& g, const CArray& spectral) {
    return to_array(to_physical(field_from(g, spectral, Rep::spectral)).values);
  }, py::arg("grid"), py::arg("spectral"));
  m.def("apply_multiplier", [](const GridSpec& g, const CArray& spectral, const CArray& symbol) {
    return to_array(apply_multiplier(field_from(g, spectral, Rep::spectral),
                                     to_vector(symbol, g.N)).values);
  }, py::arg("grid"), py::arg("spectral"), py::arg("symbol"));
  m.def("hsp_norm", [](const GridSpec& g, const CArray& spectral, double s, double p) {
    return hsp_norm(field_from(g, spectral, Rep::spectral), NormSpec{s, p});
  }, py::arg("grid"), py::arg("spectral"), py::arg("s"), py::arg("p"));

  m.def("project", [](const GridSpec& g, const CArray& psi, const std::string& sign) {
    return spinor_to(project(spinor_from(g, psi, Rep::physical), sign_from(sign)));
  }, py::arg("grid"), py::arg("psi"), py::arg("sign"));
  m.def("beta_form", [](const GridSpec& g, const CArray& psi, const CArray& psi_prime) {
    return to_array(beta_form(spinor_from(g, psi, Rep::physical),
                              spinor_from(g, psi_prime, Rep::physical)).values);
  }, py::arg("grid"), py::arg("psi"), py::arg("psi_prime"));
  m.def("null_components", [](const GridSpec& g, const CArray& psi, const CArray& psi_prime) {
    NullComponents nc = null_components(spinor_from(g, psi, Rep::physical),
                                        spinor_from(g, psi_prime, Rep::physical));
    return py::make_tuple(to_array(nc.pp.values), to_array(nc.pm.values),
                          to_array(nc.mp.values), to_array(nc.mm.values));
  }, py::arg("grid"), py::arg("psi"), py::arg("psi_prime"),
     "the four components <beta P_a psi, P_b psi'> as (pp, pm, mp, mm)");

  py::class_<HalfWaveState>(m, "State")
      .def_readonly("t", &HalfWaveState::t)
      .def_property_readonly("psi_plus",
                             [](const HalfWaveState& s) { return spinor_to(s.psi_plus); })
      .def_property_readonly("psi_minus",
                             [](const HalfWaveState& s) { return spinor_to(s.psi_minus); })
      .def_property_readonly("phi_plus",
                             [](const HalfWaveState& s) { return to_array(s.phi_plus.values); })
      .def_property_readonly("phi_minus",
                             [](const HalfWaveState& s) { return to_array(s.phi_minus.values); })
      .def_property_readonly("grid", [](const HalfWaveState& s) { return s.grid(); })
      .def("projection_residual", &projection_residual)
      .def("reality_residual", &reality_residual);

  m.def("diagonalize", [](const GridSpec& g, const CArray& psi0, const CArray& phi0,
                          const CArray& phi1) {
    return diagonalize(spinor_from(g, psi0, Rep::physical),
                       field_from(g, phi0, Rep::physical),
                       field_from(g, phi1, Rep::physical));
  }, py::arg("grid"), py::arg("psi0"), py::arg("phi0"), py::arg("phi1"),
     "physical-space Cauchy data -> diagonal half-wave state (stored spectrally)");
  m.def("reconstruct", [](const HalfWaveState& s) {
    CauchyData d = reconstruct(s);
    return py::make_tuple(spinor_to(to_physical(d.psi)),
                          to_array(to_physical(d.phi).values),
                          to_array(to_physical(d.phi_t).values));
  }, py::arg("state"), "state -> physical (psi, phi, phi_t)");

  py::class_<Diagnostics>(m, "Diagnostics")
      .def_readonly("t", &Diagnostics::t)
      .def_readonly("charge", &Diagnostics::charge)
      .def_readonly("phi_energy", &Diagnostics::phi_energy)
      .def_readonly("max_coeff", &Diagnostics::max_coeff);

  py::class_<Trajectory>(m, "Trajectory")
      .def("__len__", [](const Trajectory& t) { return t.states.size(); })
      .def("state", [](const Trajectory& t, std::size_t i) { return t.states.at(i); })
      .def_property_readonly("times", [](const Trajectory& t) {
        std::vector<double> out;
        out.reserve(t.states.size());
        for (const auto& s : t.states) out.push_back(s.t);
        return out;
      })
      .def_readonly("diagnostics", &Trajectory::diagnostics)
      .def_readonly("blew_up", &Trajectory::blew_up)
      .def_readonly("last_valid_time", &Trajectory::last_valid_time);

  m.def("solve", [](const HalfWaveState& initial, double T, double dt, double M, double mass,
                    double g, const std::string& scheme, bool dealias) {
    return solve(initial, DkgParams{M, mass, g},
                 SolveConfig{T, dt, scheme_from(scheme), dealias});
  }, py::arg("initial"), py::arg("T"), py::arg("dt"), py::arg("M") = 1.0,
     py::arg("m") = 1.0, py::arg("g") = 1.0, py::arg("scheme") = "exponential-rk4",
     py::arg("dealias") = true);

  m.def("picard", [](const HalfWaveState& initial, double T, double dt, int iters, double M,
                     double mass, double g, bool dealias) {
    PicardResult res = picard(initial, DkgParams{M, mass, g},
                              SolveConfig{T, dt, Scheme::exponential_rk4, dealias}, iters);
    return py::make_tuple(res.trajectory, res.residuals, res.diverged);
  }, py::arg("initial"), py::arg("T"), py::arg("dt"), py::arg("iters"), py::arg("M") = 1.0,
     py::arg("m") = 1.0, py::arg("g") = 1.0, py::arg("dealias") = true,
     "returns (trajectory, residuals, diverged)");

  py::class_<SpaceTimeSpectrum>(m, "SpaceTimeSpectrum")
      .def_property_readonly("grid", [](const SpaceTimeSpectrum& s) { return s.grid; })
      .def_readonly("nt", &SpaceTimeSpectrum::nt)
      .def_readonly("Tw", &SpaceTimeSpectrum::Tw)
      .def_property_readonly("coeffs", [](const SpaceTimeSpectrum& s) {
        py::array_t<std::complex<double>> out({py::ssize_t(s.grid.N), py::ssize_t(s.nt)});
        std::copy(s.coeffs.begin(), s.coeffs.end(), out.mutable_data());
        return out;
      });

  m.def("spacetime_spectrum", [](const Trajectory& traj, const std::string& component,
                                 const std::string& taper) {
    return spacetime_spectrum(traj, component_from(component), taper_from(taper));
  }, py::arg("trajectory"), py::arg("component"), py::arg("taper") = "none");
  m.def("spacetime_spectrum_from_samples", [](const GridSpec& g, const CArray& samples,
                                              double Tw, const std::string& taper) {
    if (samples.ndim() != 2 || samples.shape(0) != g.N) {
      throw std::invalid_argument("expected a (N, nt) sample matrix");
    }
    int nt = static_cast<int>(samples.shape(1));
    std::vector<cplx> flat(samples.data(), samples.data() + samples.size());
    return spacetime_spectrum(g, flat, nt, Tw, taper_from(taper));
  }, py::arg("grid"), py::arg("samples"), py::arg("Tw"), py::arg("taper") = "none");
  m.def("xsb_norm", [](const SpaceTimeSpectrum& spec, const std::string& kind,
                       const std::string& sign, double l, double b, double p) {
    return xsb_norm(spec, PhaseSpec{kind_from(kind), sign_from(sign), l, b, p});
  }, py::arg("spectrum"), py::arg("kind"), py::arg("sign"), py::arg("l"), py::arg("b"),
     py::arg("p"));
  m.def("modulation_triple", [](double xi1, double tau1, double xi2, double tau2) {
    ModulationTriple t = modulation_triple(xi1, tau1, xi2, tau2);
    py::dict out;
    out["sigma1_plus"] = t.sigma1_plus;
    out["sigma2_minus"] = t.sigma2_minus;
    out["sigma_plus"] = t.sigma_plus;
    out["sigma_minus"] = t.sigma_minus;
    out["xi"] = t.xi;
    out["tau"] = t.tau;
    return out;
  });

  // feasibility
  m.def("check_main", [](double p, double s, double r, double eps) {
    MainConditions c = check_main({p, s, r, eps});
    py::dict conds;
    conds["s_lower"] = c.s_lower;
    conds["r_upper"] = c.r_upper;
    conds["r_abs"] = c.r_abs;
    conds["r_lower"] = c.r_lower;
    return py::make_tuple(c.all(), conds);
  }, py::arg("p"), py::arg("s"), py::arg("r"), py::arg("eps") = 0.01);
  m.def("find_sigma_rho", [](double p, double s, double r, double eps) -> py::object {
    auto pair = find_sigma_rho({p, s, r, eps});
    if (!pair) return py::none();
    return py::make_tuple(pair->sigma, pair->rho);
  }, py::arg("p"), py::arg("s"), py::arg("r"), py::arg("eps") = 0.01);
  m.def("scaling_exponents", [](double p, double s, double r) {
    ScalingExponents sc = scaling_exponents({p, s, r, 0.01});
    py::dict out;
    out["sigma_scale"] = sc.sigma_scale;
    out["lambda_scale"] = sc.lambda_scale;
    out["sigma_min"] = sc.sigma_min;
    out["lambda_min"] = sc.lambda_min;
    return out;
  }, py::arg("p"), py::arg("s"), py::arg("r"));
  m.def("region_boundary", [](double p, int resolution) {
    py::dict out;
    for (const auto& seg : region_boundary(p, resolution)) {
      py::list pts;
      for (const auto& pt : seg.points) pts.append(py::make_tuple(pt[0], pt[1]));
      out[seg.name.c_str()] = pts;
    }
    return out;
  }, py::arg("p"), py::arg("resolution") = 64);
  m.def("verify_feasibility_sweep", [](int n, double margin) {
    SweepSpec sweep;
    sweep.np = sweep.ns = sweep.nr = n;
    sweep.margin = margin;
    SweepReport rep = verify_region_solvability(sweep);
    py::dict out;
    out["total"] = rep.total;
    out["successes"] = rep.successes;
    return out;
  }, py::arg("n") = 10, py::arg("margin") = 1e-3);

  // estimate checkers (reports as dicts)
  m.def("check_modulation_inequality", [](std::uint64_t seed, int count, double range) {
    return report_to_py(check_modulation_inequality(EnsembleSpec{seed, count,
                                                   Distribution::gaussian_modes, 16}, range));
  }, py::arg("seed") = 1, py::arg("count") = 100000, py::arg("range") = 100.0);
  m.def("check_null_structure", [](std::uint64_t seed, int count, int N) {
    return report_to_py(check_null_structure(
        EnsembleSpec{seed, count, Distribution::gaussian_modes, 16}, N));
  }, py::arg("seed") = 1, py::arg("count") = 100, py::arg("N") = 64);
  m.def("check_free_wave_product", [](int N, std::uint64_t seed, int count, int bandwidth) {
    return report_to_py(check_free_wave_product_ensemble(
        N, EnsembleSpec{seed, count, Distribution::band_limited, bandwidth}));
  }, py::arg("N") = 128, py::arg("seed") = 1, py::arg("count") = 4, py::arg("bandwidth") = 16);
  m.def("check_crossing_product", [](double sigma, double p, std::uint64_t seed, int count,
                                const std::vector<int>& resolutions) {
    return report_to_py(check_crossing_product(
        sigma, p, EnsembleSpec{seed, count, Distribution::band_limited, 16}, resolutions));
  }, py::arg("sigma") = 0.6, py::arg("p") = 2.0, py::arg("seed") = 1, py::arg("count") = 4,
     py::arg("resolutions") = std::vector<int>{32, 64});
  m.def("check_embeddings", [](double r, std::uint64_t seed, int count,
                               const std::vector<int>& resolutions, double eps) {
    return report_to_py(check_embeddings(
        r, EnsembleSpec{seed, count, Distribution::band_limited, 16}, resolutions, eps));
  }, py::arg("r") = 2.0, py::arg("seed") = 1, py::arg("count") = 4,
     py::arg("resolutions") = std::vector<int>{32, 64}, py::arg("eps") = 0.01);
  m.def("estimate_bilinear_constant", [](const std::string& which, double s, double r, double p,
                                         double sigma, double rho, double eps,
                                         std::uint64_t seed, int count,
                                         const std::vector<int>& resolutions) {
    return report_to_py(estimate_bilinear_constant(
        bilinear_from_string(which), BilinearParams{s, r, p, sigma, rho, eps},
        EnsembleSpec{seed, count, Distribution::band_limited, 16}, resolutions));
  }, py::arg("which"), py::arg("s") = 0.0, py::arg("r") = 0.5, py::arg("p") = 2.0,
     py::arg("sigma") = 0.6, py::arg("rho") = 0.6, py::arg("eps") = 0.01, py::arg("seed") = 1,
     py::arg("count") = 4, py::arg("resolutions") = std::vector<int>{32, 64});
}
