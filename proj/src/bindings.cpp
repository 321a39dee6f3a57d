#include "pbtsim/io.hpp"
#include "pbtsim/pbet.hpp"
#include "pbtsim/protocol_sim.hpp"
#include "pbtsim/search.hpp"
#include "pbtsim/version.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pbtsim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "port-based teleportation under local Pauli noise";
  m.attr("__version__") = version;

  // channels
  py::class_<PauliChannelParams>(m, "PauliChannelParams")
      .def(py::init<>())
      .def_static("identity", &PauliChannelParams::identity)
      .def_static("from_probabilities", &PauliChannelParams::from_probabilities,
                  py::arg("p1"), py::arg("p2"), py::arg("p3"))
      .def_static("from_weights", &PauliChannelParams::from_weights, py::arg("w"))
      .def_static("depolarizing", &PauliChannelParams::depolarizing, py::arg("p"))
      .def_static("flip", &PauliChannelParams::flip, py::arg("axis"), py::arg("p"))
      .def_property_readonly("weights", &PauliChannelParams::weights)
      .def("probabilities", &PauliChannelParams::probabilities)
      .def("__repr__", [](const PauliChannelParams& c) {
        const auto p = c.probabilities();
        return "PauliChannelParams(p1=" + format_double(p[0]) +
               ", p2=" + format_double(p[1]) + ", p3=" + format_double(p[2]) + ")";
      });
  m.def("omega", &omega, py::arg("channel"));
  m.def("eigenvalues", [](const PauliChannelParams& c) {
    const PauliTransfer t = eigenvalues(c);
    return py::make_tuple(t.lambda23, t.lambda31, t.lambda12);
  });
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("channel_root", &channel_root, py::arg("channel"), py::arg("order"));
  m.def("channel_quotient", &channel_quotient, py::arg("target"), py::arg("divisor"));
  m.def("superoperator", &superoperator, py::arg("channel"));
  m.def("apply", &apply, py::arg("channel"), py::arg("rho"), py::arg("qubit"));

  // states
  py::class_<TwoQubitState>(m, "TwoQubitState")
      .def(py::init<ComplexMatrix>(), py::arg("density"))
      .def_property_readonly("density", &TwoQubitState::density);
  py::class_<EulerAngles>(m, "EulerAngles")
      .def(py::init<>())
      .def(py::init([](double a1, double a2, double g, double b1, double b2) {
             return EulerAngles{a1, a2, g, b1, b2};
           }),
           py::arg("alpha1") = 0.0, py::arg("alpha2") = 0.0, py::arg("gamma") = 0.0,
           py::arg("beta1") = 0.0, py::arg("beta2") = 0.0)
      .def_readwrite("alpha1", &EulerAngles::alpha1)
      .def_readwrite("alpha2", &EulerAngles::alpha2)
      .def_readwrite("gamma", &EulerAngles::gamma)
      .def_readwrite("beta1", &EulerAngles::beta1)
      .def_readwrite("beta2", &EulerAngles::beta2);
  m.def("bell_state", &bell_state, py::arg("k"));
  m.def("schmidt_state", &schmidt_state, py::arg("theta"));
  m.def("euler_rotation", &euler_rotation, py::arg("a1"), py::arg("a2"), py::arg("a3"));
  m.def("general_pure_state", &general_pure_state, py::arg("theta"), py::arg("angles"));
  m.def("negativity", &negativity, py::arg("state"));
  m.def("boundary_state_low", &boundary_state_low, py::arg("theta"));
  m.def("boundary_state_up", &boundary_state_up, py::arg("theta"));
  m.def("apply_local", &apply_local, py::arg("first"), py::arg("second"), py::arg("state"));

  // closed-form bounds
  m.def("critical_m0", &critical_m0, py::arg("omega"));
  m.def("m_low", &m_low, py::arg("m0"), py::arg("omega"));
  m.def("m_up", &m_up, py::arg("m0"), py::arg("omega"));
  m.def("m_dep", &m_dep, py::arg("m0"), py::arg("omega"));
  m.def("entanglement_after_local_noise", &entanglement_after_local_noise,
        py::arg("state"), py::arg("channel"));

  // teleportation core
  m.def("entanglement_fidelity", &entanglement_fidelity, py::arg("ports"));
  m.def("teleportation_fidelity", &teleportation_fidelity, py::arg("ports"));
  m.def("port_survival", &port_survival, py::arg("ports"));
  m.def("noisy_resource_state",
        [](const PauliChannelParams& p) { return noisy_resource_state(p).weights; },
        py::arg("channel"));
  m.def("effective_params", [](const PauliChannelParams& p) {
    const EffectiveParams eff = effective_params(p);
    return py::make_tuple(eff.q_avg, eff.q_axis);
  });
  py::class_<PbtChannel>(m, "PbtChannel")
      .def(py::init<int, const PauliChannelParams&>(), py::arg("ports"), py::arg("noise"))
      .def_static("with_port_survival", &PbtChannel::with_port_survival,
                  py::arg("q_n"), py::arg("noise"))
      .def_property_readonly("ports", &PbtChannel::ports)
      .def_property_readonly("q_n", &PbtChannel::q_n)
      .def_property_readonly("q_avg", &PbtChannel::q_avg)
      .def_property_readonly("q_axis", &PbtChannel::q_axis)
      .def_property_readonly("induced_channel", &PbtChannel::induced_channel)
      .def("entanglement_fidelity", &PbtChannel::entanglement_fidelity)
      .def("teleportation_fidelity", &PbtChannel::teleportation_fidelity);
  m.def("apply_noisy_pbt", &apply_noisy_pbt, py::arg("channel"), py::arg("rho"));
  m.def("chain_decomposition", [](const PbtChannel& ch) {
    const ChainDecomposition parts = chain_decomposition(ch);
    return py::make_tuple(parts.port_part, parts.environment_part);
  });

  // protocol simulator
  m.def("resource_state",
        [](int ports, const PauliChannelParams& noise) {
          return resource_state({ports, noise});
        },
        py::arg("ports"), py::arg("noise"));
  m.def("signal_state", &signal_state, py::arg("ports"), py::arg("port_index"));
  m.def("srm_povm", &srm_povm, py::arg("ports"));
  m.def("simulate_channel_choi",
        [](int ports, const PauliChannelParams& noise) {
          return simulate_channel_choi({ports, noise});
        },
        py::arg("ports"), py::arg("noise"));
  m.def("analytic_choi",
        [](int ports, const PauliChannelParams& noise) {
          return analytic_choi(PortConfig{ports, noise});
        },
        py::arg("ports"), py::arg("noise"));

  // entanglement teleportation
  py::enum_<Bound>(m, "Bound").value("low", Bound::low).value("up", Bound::up);
  m.def("apply_pbet",
        [](int ports, const PauliChannelParams& noise, const TwoQubitState& input) {
          return apply_pbet(PbetSetting{ports, noise, input});
        },
        py::arg("ports"), py::arg("noise"), py::arg("input"));
  m.def("m_free", &m_free, py::arg("ports"), py::arg("m0"));
  m.def("n_dep", &n_dep, py::arg("p"));
  m.def("m_dep_pbet", &m_dep_pbet, py::arg("ports"), py::arg("p"), py::arg("m0"));
  m.def("m_bound_pbet",
        py::overload_cast<int, double, double, Bound>(&m_bound_pbet),
        py::arg("ports"), py::arg("q_avg"), py::arg("m0"), py::arg("which"));
  m.def("phase_flip_representable", &phase_flip_representable, py::arg("q_avg"));
  m.def("asymptotic_bounds", [](int ports, double omega_value, double m0) {
    const AsymptoticBounds b = asymptotic_bounds(ports, omega_value, m0);
    return py::make_tuple(b.low, b.up);
  });

  // Monte Carlo search
  py::class_<SampleGrid>(m, "SampleGrid")
      .def(py::init([](int n_simplex, int n_sphere, int gamma_steps, std::uint64_t seed) {
             return SampleGrid{n_simplex, n_sphere, gamma_steps, seed};
           }),
           py::arg("n_simplex") = 25, py::arg("n_sphere") = 150,
           py::arg("gamma_steps") = 7, py::arg("seed") = 0)
      .def_readwrite("n_simplex", &SampleGrid::n_simplex)
      .def_readwrite("n_sphere", &SampleGrid::n_sphere)
      .def_readwrite("gamma_steps", &SampleGrid::gamma_steps)
      .def_readwrite("seed", &SampleGrid::seed);
  py::class_<ScanCandidate>(m, "ScanCandidate")
      .def(py::init([](const EulerAngles& a, const PauliChannelParams& c) {
             return ScanCandidate{a, c};
           }),
           py::arg("angles"), py::arg("channel"))
      .def_readwrite("angles", &ScanCandidate::angles)
      .def_readwrite("channel", &ScanCandidate::channel);
  py::class_<BoundaryScanResult>(m, "BoundaryScanResult")
      .def_readonly("min_value", &BoundaryScanResult::min_value)
      .def_readonly("max_value", &BoundaryScanResult::max_value)
      .def_readonly("argmin", &BoundaryScanResult::argmin)
      .def_readonly("argmax", &BoundaryScanResult::argmax)
      .def_readonly("n_evaluated", &BoundaryScanResult::n_evaluated);
  m.def("sample_simplex", &sample_simplex, py::arg("omega"), py::arg("n"), py::arg("seed"));
  m.def("sample_sphere_pairs",
        [](int n, std::uint64_t seed) {
          std::vector<std::array<double, 4>> out;
          for (const SpherePair& s : sample_sphere_pairs(n, seed))
            out.push_back({s.alpha1, s.alpha2, s.beta1, s.beta2});
          return out;
        },
        py::arg("n"), py::arg("seed"));
  m.def("boundary_scan",
        [](double omega_value, double theta, const SampleGrid& grid,
           const std::vector<ScanCandidate>& extras) {
          return boundary_scan(omega_value, theta, grid, extras);
        },
        py::arg("omega"), py::arg("theta"), py::arg("grid"),
        py::arg("extras") = std::vector<ScanCandidate>{});
  py::enum_<Objective>(m, "Objective")
      .value("minimize", Objective::minimize)
      .value("maximize", Objective::maximize);
  m.def("refine_extreme", &refine_extreme, py::arg("start"), py::arg("objective"),
        py::arg("omega"), py::arg("theta"));
  m.def("surface_data",
        [](const std::vector<double>& m0_grid, const std::vector<double>& omega_grid) {
          std::vector<std::tuple<double, double, double, double, double, bool>> rows;
          for (const SurfaceRow& r : surface_data(m0_grid, omega_grid))
            rows.emplace_back(r.m0, r.omega, r.low, r.up, r.dep, r.above_critical);
          return rows;
        },
        py::arg("m0_grid"), py::arg("omega_grid"));
  m.def("slice_data",
        [](double m0, const std::vector<double>& omega_grid) {
          std::vector<std::tuple<double, double, double, double>> rows;
          for (const SliceRow& r : slice_data(m0, omega_grid))
            rows.emplace_back(r.omega, r.rel_low, r.rel_up, r.rel_dep);
          return rows;
        },
        py::arg("m0"), py::arg("omega_grid"));
}
