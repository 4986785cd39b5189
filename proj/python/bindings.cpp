#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nung/beam.hpp"
#include "nung/channel.hpp"
#include "nung/frequency.hpp"
#include "nung/metastate.hpp"
#include "nung/rng.hpp"
#include "nung/sphere.hpp"

namespace py = pybind11;
using namespace nung;

namespace {

template <typename Matrix, int N>
std::vector<std::vector<complexd>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<complexd>> rows(N, std::vector<complexd>(N));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            rows[i][j] = m(i, j);
        }
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gravitational decoherence of a two-site macroscopic superposition and the "
              "beam-deflection channel it would otherwise open.";

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def(py::init([](double g, double hbar, double c) {
                 PhysicalConstants k{g, hbar, c};
                 k.validate();
                 return k;
             }),
             py::arg("G"), py::arg("hbar"), py::arg("c"))
        .def_readwrite("G", &PhysicalConstants::G)
        .def_readwrite("hbar", &PhysicalConstants::hbar)
        .def_readwrite("c", &PhysicalConstants::c)
        .def_static("codata", &PhysicalConstants::codata);

    py::class_<SphereBody>(m, "SphereBody")
        .def(py::init<double, double>(), py::arg("mass"), py::arg("radius"))
        .def_readwrite("mass", &SphereBody::mass)
        .def_readwrite("radius", &SphereBody::radius);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });

    m.def("sphere_field", &sphere_field, py::arg("body"), py::arg("r"), py::arg("constants"));
    m.def("sphere_potential", &sphere_potential, py::arg("body"), py::arg("r"),
          py::arg("constants"));
    m.def("mutual_potential", &mutual_potential, py::arg("body"), py::arg("separation"),
          py::arg("constants"));
    m.def("zero_point_frequency", &zero_point_frequency, py::arg("body"), py::arg("constants"));

    py::class_<FrequencySet>(m, "FrequencySet")
        .def(py::init<>())
        .def_readwrite("omega0", &FrequencySet::omega0)
        .def_readwrite("omega1", &FrequencySet::omega1)
        .def_readwrite("omega_beat", &FrequencySet::omega_beat)
        .def_readwrite("dx", &FrequencySet::dx);

    m.def("frequency_set", &frequency_set, py::arg("body"), py::arg("dx"), py::arg("constants"));
    m.def("cycles_along_path", &cycles_along_path, py::arg("omega_beat"), py::arg("speed"),
          py::arg("path_length"));

    py::class_<SiteAmplitudes>(m, "SiteAmplitudes")
        .def(py::init([](complexd a, complexd b) { return SiteAmplitudes{a, b}; }),
             py::arg("alpha"), py::arg("beta"))
        .def_readwrite("alpha", &SiteAmplitudes::alpha)
        .def_readwrite("beta", &SiteAmplitudes::beta)
        .def("norm_squared", &SiteAmplitudes::norm_squared)
        .def_static("equal_superposition", &SiteAmplitudes::equal_superposition);

    py::class_<PhysicalDensityMatrix>(m, "PhysicalDensityMatrix")
        .def("entry", [](const PhysicalDensityMatrix& r, int i, int j) { return r(i, j); })
        .def("rows", &matrix_rows<PhysicalDensityMatrix, 2>)
        .def("trace", &PhysicalDensityMatrix::trace)
        .def("purity", &PhysicalDensityMatrix::purity)
        .def("eigenvalues", &PhysicalDensityMatrix::eigenvalues)
        .def("hermiticity_error", &PhysicalDensityMatrix::hermiticity_error);

    py::class_<MetaDensityMatrix>(m, "MetaDensityMatrix")
        .def("entry", [](const MetaDensityMatrix& r, int i, int j) { return r(i, j); })
        .def("rows", &matrix_rows<MetaDensityMatrix, 4>)
        .def("trace", &MetaDensityMatrix::trace)
        .def("purity", &MetaDensityMatrix::purity)
        .def("hermiticity_error", &MetaDensityMatrix::hermiticity_error);

    m.def("build_metastate", &build_metastate, py::arg("amplitudes"));
    m.def("evolve_metastate", &evolve_metastate, py::arg("rho"), py::arg("t"),
          py::arg("frequencies"));
    m.def("partial_trace_hidden", &partial_trace_hidden, py::arg("rho"));
    m.def("coherence_magnitude", &coherence_magnitude, py::arg("rho"));
    m.def("transit_averaged_state", &transit_averaged_state, py::arg("amplitudes"),
          py::arg("frequencies"), py::arg("transit_time"));

    py::enum_<BallSite>(m, "BallSite").value("Plus", BallSite::Plus).value("Minus",
                                                                           BallSite::Minus);

    py::class_<SourceRegime>(m, "SourceRegime")
        .def_static("scg_unmeasured", &SourceRegime::scg_unmeasured)
        .def_static("scg_collapsed", &SourceRegime::scg_collapsed, py::arg("site"))
        .def_static("nung_decohered", &SourceRegime::nung_decohered, py::arg("mirror") = false);

    py::class_<StepControl>(m, "StepControl")
        .def(py::init<>())
        .def_readwrite("steps_per_transit", &StepControl::steps_per_transit)
        .def_readwrite("horizon_factor", &StepControl::horizon_factor);

    py::class_<BeamScenario>(m, "BeamScenario")
        .def(py::init<>())
        .def_readwrite("ball", &BeamScenario::ball)
        .def_readwrite("dx", &BeamScenario::dx)
        .def_readwrite("beam_source_z", &BeamScenario::beam_source_z)
        .def_readwrite("beam_speed", &BeamScenario::beam_speed)
        .def_readwrite("detector_z", &BeamScenario::detector_z)
        .def_readwrite("detector_half_width", &BeamScenario::detector_half_width)
        .def_readwrite("n_particles", &BeamScenario::n_particles)
        .def_readwrite("constants", &BeamScenario::constants)
        .def_readwrite("step_control", &BeamScenario::step_control)
        .def("transit_time", &BeamScenario::transit_time)
        .def("validate", &BeamScenario::validate)
        .def_static("gedanken_default", &BeamScenario::gedanken_default);

    py::enum_<ExitStatus>(m, "ExitStatus")
        .value("OnAxis", ExitStatus::OnAxis)
        .value("DeflectedPlus", ExitStatus::DeflectedPlus)
        .value("DeflectedMinus", ExitStatus::DeflectedMinus)
        .value("Absorbed", ExitStatus::Absorbed)
        .value("Lost", ExitStatus::Lost);

    py::class_<ParticleRecord>(m, "ParticleRecord")
        .def_readonly("index", &ParticleRecord::index)
        .def_readonly("has_site", &ParticleRecord::has_site)
        .def_readonly("site", &ParticleRecord::site)
        .def_readonly("status", &ParticleRecord::status)
        .def_readonly("exit_x", &ParticleRecord::exit_x)
        .def_readonly("exit_y", &ParticleRecord::exit_y)
        .def_readonly("crossing_time", &ParticleRecord::crossing_time);

    py::class_<DetectorReport>(m, "DetectorReport")
        .def_readonly("n_particles", &DetectorReport::n_particles)
        .def_readonly("n_on_axis", &DetectorReport::n_on_axis)
        .def_readonly("n_deflected_plus", &DetectorReport::n_deflected_plus)
        .def_readonly("n_deflected_minus", &DetectorReport::n_deflected_minus)
        .def_readonly("n_absorbed", &DetectorReport::n_absorbed)
        .def_readonly("n_lost", &DetectorReport::n_lost)
        .def_readonly("mean_x", &DetectorReport::mean_x)
        .def_readonly("records", &DetectorReport::records)
        .def("on_axis_fraction", &DetectorReport::on_axis_fraction);

    m.def("source_field", &source_field, py::arg("regime"), py::arg("ball"), py::arg("dx"),
          py::arg("amplitudes"), py::arg("position"), py::arg("constants"));
    m.def("run_beam", &run_beam, py::arg("scenario"), py::arg("regime"), py::arg("amplitudes"),
          py::arg("seed"), py::arg("n_threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("slc_mutual_information", &slc_mutual_information, py::arg("report_when_sender_0"),
          py::arg("report_when_sender_1"));

    m.attr("__version__") = "0.1.0";
}
