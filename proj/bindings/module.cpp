#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stimint/detection.hpp"
#include "stimint/distinguishability.hpp"
#include "stimint/elements.hpp"
#include "stimint/experiment.hpp"
#include "stimint/fit.hpp"
#include "stimint/io.hpp"

namespace py = pybind11;
using namespace stimint;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-mode Fock simulator for stimulated emission and multi-photon interference";

  py::class_<ModeRegistry, std::shared_ptr<ModeRegistry>>(m, "ModeRegistry")
      .def(py::init([](std::vector<std::string> names) {
        return std::make_shared<ModeRegistry>(std::move(names));
      }))
      .def("__len__", &ModeRegistry::size)
      .def("contains", &ModeRegistry::contains)
      .def("index", &ModeRegistry::index);

  py::class_<FockBasisState>(m, "FockBasisState")
      .def(py::init([](std::vector<int> occ) { return FockBasisState{std::move(occ)}; }))
      .def_readonly("occupations", &FockBasisState::occupations)
      .def("total", &FockBasisState::total)
      .def("__eq__", [](const FockBasisState& a, const FockBasisState& b) { return a == b; });

  py::class_<QuantumState>(m, "QuantumState")
      .def_static("vacuum", &QuantumState::vacuum)
      .def_property_readonly("cutoff", &QuantumState::cutoff)
      .def_property_readonly("registry", &QuantumState::registry)
      .def_property_readonly("truncated", &QuantumState::truncated)
      .def("amplitude",
           [](const QuantumState& st, std::vector<int> occ) {
             return st.amplitude({std::move(occ)});
           })
      .def("squared_norm", &QuantumState::squared_norm)
      .def("terms",
           [](const QuantumState& st) {
             py::dict d;
             for (const auto& [basis, amp] : st.terms()) {
               d[py::tuple(py::cast(basis.occupations))] = amp;
             }
             return d;
           })
      .def("debug_text", &QuantumState::debug_text);

  m.def("create", &create);
  m.def("annihilate", &annihilate);
  m.def("inner_product", &inner_product);
  m.def("scale_and_add", &scale_and_add);
  m.def("coherent_state_truncated", &coherent_state_truncated);

  py::class_<AmplifierSpec>(m, "AmplifierSpec")
      .def(py::init([](Complex g, std::string signal, std::string idler, int order) {
             return AmplifierSpec{g, std::move(signal), std::move(idler), order};
           }),
           py::arg("g"), py::arg("signal"), py::arg("idler"), py::arg("order") = 1)
      .def_readwrite("g", &AmplifierSpec::g)
      .def_readwrite("order", &AmplifierSpec::order);

  py::class_<BeamSplitterSpec>(m, "BeamSplitterSpec")
      .def(py::init([](double t, double r, std::string in1, std::string in2) {
             return BeamSplitterSpec{t, r, std::move(in1), std::move(in2)};
           }),
           py::arg("t"), py::arg("r"), py::arg("in1"), py::arg("in2"))
      .def_static("fifty_fifty", &BeamSplitterSpec::fifty_fifty);

  m.def("apply_amplifier", &apply_amplifier);
  m.def("apply_beam_splitter", &apply_beam_splitter);
  m.def("bunching_probability", &bunching_probability, py::arg("n_photons_port_a"),
        py::arg("indistinguishable"));
  m.def("mean_gain_photon_number", &mean_gain_photon_number);
  m.def("ideal_enhancement", &ideal_enhancement);

  py::class_<OverlapModel>(m, "OverlapModel")
      .def(py::init([](double t0, double tc) { return OverlapModel{t0, tc}; }), py::arg("t0") = 0.0,
           py::arg("tc") = 1.0)
      .def_readwrite("t0", &OverlapModel::t0)
      .def_readwrite("tc", &OverlapModel::tc);

  py::class_<ModePair>(m, "ModePair")
      .def(py::init([](std::string matched, std::string orthogonal) {
        return ModePair{std::move(matched), std::move(orthogonal)};
      }));

  m.def("overlap_amplitude", &overlap_amplitude);
  m.def("inject_fock_partial", &inject_fock_partial);
  m.def("inject_coherent_partial", &inject_coherent_partial);

  py::class_<DetectorFanout>(m, "DetectorFanout")
      .def(py::init([](int arms, std::vector<double> splitting, double efficiency) {
             return DetectorFanout{arms, std::move(splitting), efficiency};
           }),
           py::arg("arms"), py::arg("splitting"), py::arg("efficiency") = 1.0)
      .def_static("symmetric", &DetectorFanout::symmetric, py::arg("arms"),
                  py::arg("efficiency") = 1.0)
      .def_static("cascade", &DetectorFanout::cascade, py::arg("efficiency") = 1.0);

  py::class_<DetectorGroup>(m, "DetectorGroup")
      .def(py::init([](std::vector<std::string> modes, DetectorFanout fanout) {
        return DetectorGroup{std::move(modes), std::move(fanout)};
      }));

  py::class_<CoincidencePattern>(m, "CoincidencePattern")
      .def(py::init([](std::vector<std::pair<std::string, int>> reqs) {
        return CoincidencePattern{std::move(reqs)};
      }));

  m.def("click_probability_given_photons", &click_probability_given_photons);
  m.def("coincidence_probability", &coincidence_probability);
  m.def("herald_single_photon", [](const QuantumState& st, const std::string& mode) {
    HeraldResult r = herald_single_photon(st, mode);
    return py::make_tuple(r.state, r.probability);
  });

  py::class_<ScanPoint>(m, "ScanPoint")
      .def(py::init([](double delay, double value, double sigma) {
        return ScanPoint{delay, value, sigma};
      }))
      .def_readwrite("delay", &ScanPoint::delay)
      .def_readwrite("value", &ScanPoint::value)
      .def_readwrite("sigma", &ScanPoint::sigma);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("a", &FitResult::a)
      .def_readonly("v", &FitResult::v)
      .def_readonly("t0", &FitResult::t0)
      .def_readonly("tc", &FitResult::tc)
      .def_readonly("a_err", &FitResult::a_err)
      .def_readonly("v_err", &FitResult::v_err)
      .def_readonly("t0_err", &FitResult::t0_err)
      .def_readonly("tc_err", &FitResult::tc_err)
      .def_readonly("chi2", &FitResult::chi2)
      .def_readonly("dof", &FitResult::dof)
      .def_readonly("converged", &FitResult::converged)
      .def_readonly("iterations", &FitResult::iterations);

  m.def("gaussian_peak", &gaussian_peak);
  m.def("fit_gaussian_peak", &fit_gaussian_peak, py::arg("points"), py::arg("weighted") = true);
  m.def("peak_to_wing", &peak_to_wing);
  m.def("fit_report", &fit_report);

  auto bind_settings = [](auto& cls) {
    using T = typename std::decay_t<decltype(cls)>::type;
    cls.def(py::init<>())
        .def_readwrite("alpha", &T::alpha)
        .def_readwrite("g", &T::g)
        .def_readwrite("overlap", &T::overlap)
        .def_readwrite("beta_max", &T::beta_max)
        .def_readwrite("delays", &T::delays)
        .def_readwrite("cascade_fanout", &T::cascade_fanout)
        .def_readwrite("efficiency", &T::efficiency)
        .def_readwrite("order", &T::order)
        .def_readwrite("cutoff", &T::cutoff)
        .def_readwrite("shots", &T::shots)
        .def_readwrite("seed", &T::seed);
  };
  py::class_<AmplifierScanConfig> amp_cfg(m, "AmplifierScanConfig");
  bind_settings(amp_cfg);
  py::class_<BeamSplitterScanConfig> bs_cfg(m, "BeamSplitterScanConfig");
  bind_settings(bs_cfg);
  bs_cfg.def_readwrite("bs_t", &BeamSplitterScanConfig::bs_t)
      .def_readwrite("bs_r", &BeamSplitterScanConfig::bs_r);

  py::enum_<ScanPattern>(m, "ScanPattern")
      .value("abcd", ScanPattern::abcd)
      .value("abd", ScanPattern::abd);

  py::class_<ScanResult>(m, "ScanResult")
      .def_readonly("points", &ScanResult::points)
      .def_readonly("truncated", &ScanResult::truncated);

  m.def("default_delay_grid", &default_delay_grid, py::arg("overlap"), py::arg("n_points") = 21,
        py::arg("halfspan_in_tc") = 3.0);
  m.def("run_amplifier_scan", &run_amplifier_scan);
  m.def("run_beamsplitter_scan", &run_beamsplitter_scan);

  py::class_<EnhancementRow>(m, "EnhancementRow")
      .def_readonly("n", &EnhancementRow::n)
      .def_readonly("amplifier_rate", &EnhancementRow::amplifier_rate)
      .def_readonly("bs_indistinguishable", &EnhancementRow::bs_indistinguishable)
      .def_readonly("bs_distinguishable", &EnhancementRow::bs_distinguishable)
      .def_readonly("ratio", &EnhancementRow::ratio);

  py::class_<EnhancementReport>(m, "EnhancementReport")
      .def_readonly("rows", &EnhancementReport::rows);

  m.def("report_enhancement", &report_enhancement, py::arg("n_max"), py::arg("cutoff") = 6);
  m.def("format_enhancement_report", &format_enhancement_report);

  m.def("scan_csv_text", [](const std::vector<ScanPoint>& points) {
    std::ostringstream out;
    write_scan_csv(out, points);
    return out.str();
  });
  m.def("parse_scan_csv", [](const std::string& text) {
    std::istringstream in(text);
    return read_scan_csv(in);
  });
}
