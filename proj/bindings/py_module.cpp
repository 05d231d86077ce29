// Python bindings for the core pipeline: seeds, overlap lattices, filters,
// orthonormalization, cascade synthesis, and the quantum-model cross-check.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seedmra/cascade.hpp"
#include "seedmra/errors.hpp"
#include "seedmra/filter.hpp"
#include "seedmra/ortho.hpp"
#include "seedmra/overlap.hpp"
#include "seedmra/presets.hpp"
#include "seedmra/qmcheck.hpp"
#include "seedmra/seed.hpp"

namespace py = pybind11;
using namespace seedmra;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seed-driven multiresolution analysis on the critical lattice";

  py::register_exception<SingularSymbol>(m, "SingularSymbol");
  py::register_exception<QuadratureDivergence>(m, "QuadratureDivergence");
  py::register_exception<NonSummable>(m, "NonSummable");
  py::register_exception<Diverged>(m, "Diverged");
  py::register_exception<UnsupportedOperation>(m, "UnsupportedOperation");

  m.attr("CELL_WIDTH") = kCellWidth;

  py::enum_<Domain>(m, "Domain")
      .value("Position", Domain::Position)
      .value("Frequency", Domain::Frequency);

  py::class_<SeedFunction>(m, "SeedFunction")
      .def_static("preset", &seed_preset, py::arg("name"))
      .def_static("from_json", &seed_from_json, py::arg("text"))
      .def_static("load", &load_seed_file, py::arg("path"))
      .def_static("gaussian", &SeedFunction::gaussian, py::arg("center") = 0.0,
                  py::arg("mu") = 0.0, py::arg("scale") = complexd{1.0, 0.0},
                  py::arg("hermite") = 0)
      .def_static(
          "sampled",
          [](double x0, double dx, const std::vector<complexd>& values, Domain domain) {
            return SeedFunction::sampled(x0, dx, values, domain);
          },
          py::arg("x0"), py::arg("dx"), py::arg("values"), py::arg("domain") = Domain::Position)
      .def_readonly("domain", &SeedFunction::domain)
      .def("eval", &SeedFunction::eval, py::arg("x"))
      .def("l2_norm_sq", &SeedFunction::l2_norm_sq)
      .def("fourier", &SeedFunction::fourier)
      .def("is_symbolic", &SeedFunction::is_symbolic)
      .def("scaled", &SeedFunction::scaled, py::arg("factor"))
      .def("to_json", [](const SeedFunction& s) { return seed_to_json(s); });

  m.def("preset_names", &preset_names);
  m.def("preset_note", &preset_note, py::arg("name"));

  py::class_<LatticeParams>(m, "LatticeParams")
      .def(py::init<>())
      .def_readwrite("a", &LatticeParams::a)
      .def_readwrite("L", &LatticeParams::L);

  py::class_<OverlapLattice>(m, "OverlapLattice")
      .def_readonly("params", &OverlapLattice::params)
      .def("at", &OverlapLattice::at, py::arg("l1"), py::arg("l2"))
      .def("csv", [](const OverlapLattice& lat) { return overlap_csv(lat); });

  py::class_<OncResult>(m, "OncResult")
      .def_readonly("passed", &OncResult::pass)
      .def_readonly("residual", &OncResult::residual);

  py::class_<MoncResult>(m, "MoncResult")
      .def_readonly("passed", &MoncResult::pass)
      .def_readonly("sigma", &MoncResult::sigma);

  m.def(
      "overlap_lattice",
      [](const SeedFunction& seed, int L) {
        LatticeParams params;
        params.L = L;
        return overlap_lattice(seed, params);
      },
      py::arg("seed"), py::arg("L") = 8);
  m.def("check_onc", &check_onc, py::arg("lattice"), py::arg("tol") = 1e-10);
  m.def("check_monc", &check_monc, py::arg("lattice"), py::arg("tol") = 1e-10);

  py::class_<FilterSequence>(m, "FilterSequence")
      .def_static("manual", &FilterSequence::manual, py::arg("n_min"), py::arg("coeffs"))
      .def_readonly("n_min", &FilterSequence::n_min)
      .def_readonly("n_max", &FilterSequence::n_max)
      .def_readonly("coeffs", &FilterSequence::coeffs)
      .def_readonly("truncated_tail", &FilterSequence::truncated_tail)
      .def("at", &FilterSequence::at, py::arg("n"))
      .def("csv", [](const FilterSequence& f) { return filter_csv(f); });

  py::class_<CheckOutcome>(m, "CheckOutcome")
      .def_readonly("passed", &CheckOutcome::pass)
      .def_readonly("value", &CheckOutcome::value);

  m.def("extract_filter", &extract_filter, py::arg("seed"), py::arg("n_range") = 64);
  m.def("check_r1", &check_r1, py::arg("filter"), py::arg("l_max") = 8, py::arg("tol") = 1e-10);
  m.def("check_r2", &check_r2, py::arg("filter"));
  m.def("check_r3", &check_r3, py::arg("filter"), py::arg("tol") = 1e-10);
  m.def("check_r4", &check_r4, py::arg("filter"), py::arg("grid") = 4096,
        py::arg("delta") = 1e-6);
  m.def("reflect", &reflect, py::arg("filter"));

  py::class_<SymbolGrid>(m, "SymbolGrid")
      .def_readonly("n1", &SymbolGrid::n1)
      .def_readonly("n2", &SymbolGrid::n2)
      .def_readonly("min_real", &SymbolGrid::min_real)
      .def_readonly("max_real", &SymbolGrid::max_real)
      .def_readonly("max_imag", &SymbolGrid::max_imag)
      .def("at", &SymbolGrid::at, py::arg("j1"), py::arg("j2"));

  py::class_<FCoefficients>(m, "FCoefficients")
      .def_readonly("L", &FCoefficients::L)
      .def("at", &FCoefficients::at, py::arg("m1"), py::arg("m2"));

  m.def("symbol", &symbol, py::arg("lattice"), py::arg("n1") = 256, py::arg("n2") = 256);
  m.def("f_coefficients", &f_coefficients, py::arg("symbol"));
  m.def("ont_filter", &ont_filter, py::arg("seed"), py::arg("lattice"), py::arg("symbol"),
        py::arg("n_range") = 32);
  m.def("ont_seed", &ont_seed, py::arg("seed"), py::arg("f"),
        py::arg("dx") = kCellWidth / 128.0);

  py::class_<SampledFunction>(m, "SampledFunction")
      .def_readonly("x_min", &SampledFunction::x_min)
      .def_readonly("x_max", &SampledFunction::x_max)
      .def_readonly("level", &SampledFunction::level)
      .def_readonly("values", &SampledFunction::values)
      .def("step", &SampledFunction::step)
      .def("csv", [](const SampledFunction& g) { return sampled_csv(g); });

  py::class_<CascadeResult>(m, "CascadeResult")
      .def_readonly("phi", &CascadeResult::phi)
      .def_readonly("residual", &CascadeResult::residual)
      .def_readonly("index_shift", &CascadeResult::index_shift);

  py::class_<TranslateCheck>(m, "TranslateCheck")
      .def_readonly("passed", &TranslateCheck::pass)
      .def_readonly("residual", &TranslateCheck::residual);

  m.def("cascade_scaling", &cascade_scaling, py::arg("filter"), py::arg("iterations") = 12,
        py::arg("level") = 10);
  m.def("mother_wavelet", &mother_wavelet, py::arg("filter"), py::arg("phi"));
  m.def("sampled_integral", &sampled_integral, py::arg("g"));
  m.def("sampled_l2_norm_sq", &sampled_l2_norm_sq, py::arg("g"));
  m.def("inner_translate", &inner_translate, py::arg("g"), py::arg("h"), py::arg("k"));
  m.def("check_translate_orthonormality", &check_translate_orthonormality, py::arg("g"),
        py::arg("k_max"), py::arg("tol") = 1e-10);

  py::enum_<KernelVariant>(m, "KernelVariant")
      .value("Example1", KernelVariant::Example1)
      .value("Example2", KernelVariant::Example2)
      .value("Example3", KernelVariant::Example3);

  py::class_<KernelModel>(m, "KernelModel")
      .def(py::init([](KernelVariant variant, const SeedFunction& phi0) {
             KernelModel model;
             model.variant = variant;
             model.phi0 = phi0;
             return model;
           }),
           py::arg("variant") = KernelVariant::Example1,
           py::arg("phi0") = SeedFunction::gaussian())
      .def_readwrite("variant", &KernelModel::variant)
      .def_readwrite("phi0", &KernelModel::phi0);

  py::class_<QuadSpec>(m, "QuadSpec")
      .def(py::init<>())
      .def_readwrite("radius", &QuadSpec::radius)
      .def_readwrite("nodes", &QuadSpec::nodes);

  py::class_<OverlapEntry>(m, "OverlapEntry")
      .def_readonly("l1", &OverlapEntry::l1)
      .def_readonly("l2", &OverlapEntry::l2)
      .def_readonly("value", &OverlapEntry::value)
      .def_readonly("oracle_abs", &OverlapEntry::oracle_abs)
      .def_readonly("abs_error", &OverlapEntry::abs_error);

  m.def("kernel", &kernel, py::arg("model"), py::arg("x"), py::arg("y"), py::arg("s"),
        py::arg("t"));
  m.def("wavefunction", &wavefunction, py::arg("model"), py::arg("seed"), py::arg("x"),
        py::arg("y"), py::arg("quad") = QuadSpec{});
  m.def("overlap2d", &overlap2d, py::arg("model"), py::arg("seed"), py::arg("l1"),
        py::arg("l2"), py::arg("quad") = QuadSpec{});
  m.def("overlap_table", &overlap_table, py::arg("model"), py::arg("seed"), py::arg("l_max"),
        py::arg("quad") = QuadSpec{});
}
