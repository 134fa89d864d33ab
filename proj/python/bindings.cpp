#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spinorth/chain.hpp"
#include "spinorth/config.hpp"
#include "spinorth/oracle.hpp"
#include "spinorth/presets.hpp"
#include "spinorth/qubit.hpp"
#include "spinorth/run.hpp"
#include "spinorth/version.hpp"

namespace py = pybind11;
using namespace spinorth;

namespace {

using PyMat = std::vector<std::vector<Complex>>;

PyMat mat_out(const Mat4& m) {
  PyMat out(4, std::vector<Complex>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

Mat4 mat_in(const PyMat& m) {
  if (m.size() != 4) throw std::invalid_argument("expected a 4x4 matrix");
  Mat4 out;
  for (int i = 0; i < 4; ++i) {
    if (m[static_cast<std::size_t>(i)].size() != 4)
      throw std::invalid_argument("expected a 4x4 matrix");
    for (int j = 0; j < 4; ++j)
      out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return out;
}

InitialStateSpec make_spec(const std::string& kind, double p, const py::object& custom) {
  if (kind == "bell") return InitialStateSpec::bell_phi_plus();
  if (kind == "pure") return InitialStateSpec::generic_pure(p);
  if (kind == "custom") {
    if (custom.is_none()) throw std::invalid_argument("custom state needs a matrix");
    return InitialStateSpec::custom(mat_in(custom.cast<PyMat>()));
  }
  throw std::invalid_argument("state kind must be 'pure', 'bell' or 'custom'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "decoherence of two qubits coupled to a transverse-field XY chain with DM interaction";
  m.attr("__version__") = kVersion;

  py::class_<ChainParams>(m, "ChainParams")
      .def(py::init([](int n_sites, double gamma, double lam, double dm, double g) {
             ChainParams p{n_sites, gamma, lam, dm, g};
             p.validate();
             return p;
           }),
           py::arg("n_sites") = 7, py::arg("gamma") = 0.0, py::arg("lam") = 0.0,
           py::arg("dm") = 0.0, py::arg("g") = 0.1)
      .def_readonly("n_sites", &ChainParams::n_sites)
      .def_readonly("gamma", &ChainParams::anisotropy)
      .def_readonly("lam", &ChainParams::field)
      .def_readonly("dm", &ChainParams::dm)
      .def_readonly("g", &ChainParams::coupling)
      .def("mode_count", &ChainParams::mode_count)
      .def("warnings", &ChainParams::warnings)
      .def("__repr__", [](const ChainParams& p) {
        std::ostringstream os;
        os << "ChainParams(n_sites=" << p.n_sites << ", gamma=" << p.anisotropy
           << ", lam=" << p.field << ", dm=" << p.dm << ", g=" << p.coupling << ")";
        return os.str();
      });

  m.def("dressed_fields",
        [](const ChainParams& p) {
          const DressedFields f = dressed_fields(p);
          return py::make_tuple(f.values[0], f.values[1], f.values[2], f.values[3]);
        },
        py::arg("params"));

  m.def("dispersion", &dispersion, py::arg("momentum"), py::arg("lam"), py::arg("gamma"),
        py::arg("dm"));
  m.def("bogoliubov_angle", &bogoliubov_angle, py::arg("momentum"), py::arg("lam"),
        py::arg("gamma"));
  m.def("eta", &eta, py::arg("momentum"), py::arg("lam_nu"), py::arg("lam"), py::arg("gamma"));

  m.def("decoherence_factor", &decoherence_factor, py::arg("t"), py::arg("alpha"), py::arg("beta"),
        py::arg("params"));
  m.def("decoherence_matrix",
        [](double t, const ChainParams& p) { return mat_out(decoherence_matrix(t, p).entries); },
        py::arg("t"), py::arg("params"));

  m.def("oracle_decoherence_factor", &oracle_decoherence_factor, py::arg("t"), py::arg("alpha"),
        py::arg("beta"), py::arg("params"));
  m.def("pair_hamiltonian",
        [](double momentum, double lam_nu, double gamma, double dm) {
          return mat_out(pair_hamiltonian(momentum, lam_nu, gamma, dm).h);
        },
        py::arg("momentum"), py::arg("lam_nu"), py::arg("gamma"), py::arg("dm"));
  m.def("pair_ground_state",
        [](double momentum, double lam, double gamma) {
          const Vec4 v = pair_ground_state(momentum, lam, gamma);
          return std::vector<Complex>(v.begin(), v.end());
        },
        py::arg("momentum"), py::arg("lam"), py::arg("gamma"));

  m.def("initial_state",
        [](const std::string& kind, double p, const py::object& custom) {
          return mat_out(initial_state(make_spec(kind, p, custom)).matrix);
        },
        py::arg("kind") = "pure", py::arg("p") = 0.5, py::arg("custom") = py::none());

  m.def("evolve_state",
        [](const std::string& kind, double p, double t, const ChainParams& params,
           const std::string& evolution, const py::object& custom) {
          const DecoherenceMatrix s = decoherence_matrix(t, params);
          const EvolutionForm form =
              evolution == "x-block" ? EvolutionForm::XBlock : EvolutionForm::Full;
          return mat_out(evolve_state(make_spec(kind, p, custom), s, form).matrix);
        },
        py::arg("kind"), py::arg("p"), py::arg("t"), py::arg("params"),
        py::arg("evolution") = "full", py::arg("custom") = py::none());

  m.def("eigensystem_numeric",
        [](const PyMat& rho) {
          const EigenSystem es = eigensystem_numeric(TwoQubitDensity{mat_in(rho)});
          py::list out;
          for (const EigenPair& pr : es.pairs)
            out.append(py::make_tuple(
                pr.value, std::vector<Complex>(pr.vector.begin(), pr.vector.end())));
          return out;
        },
        py::arg("rho"));

  m.def("eigensystem_analytic",
        [](const std::string& kind, double p, double t, const ChainParams& params,
           const std::string& when) {
          const DecoherenceMatrix s = decoherence_matrix(t, params);
          const EigenSystem es = eigensystem_analytic(
              make_spec(kind, p, py::none()), s,
              when == "initial" ? EigenWhen::Initial : EigenWhen::Final);
          py::list out;
          for (const EigenPair& pr : es.pairs)
            out.append(py::make_tuple(
                pr.value, std::vector<Complex>(pr.vector.begin(), pr.vector.end())));
          return out;
        },
        py::arg("kind"), py::arg("p"), py::arg("t"), py::arg("params"), py::arg("when"));

  m.def("orthogonality_signal",
        [](const std::string& kind, double p, const ChainParams& params,
           const std::vector<double>& grid, int pair_initial, int pair_final,
           const std::string& evolution, int threads) {
          SignalRequest req{make_spec(kind, p, py::none()), params,
                            PairSelector{pair_initial, pair_final},
                            evolution == "x-block" ? EvolutionForm::XBlock : EvolutionForm::Full};
          const OrthogonalitySignal sig = orthogonality_signal(req, grid, threads);
          py::dict out;
          out["times"] = sig.times;
          out["overlaps"] = std::vector<Complex>(sig.overlaps.begin(), sig.overlaps.end());
          out["fallback_samples"] = sig.fallback_samples;
          return out;
        },
        py::arg("kind"), py::arg("p"), py::arg("params"), py::arg("grid"),
        py::arg("pair_initial") = 3, py::arg("pair_final") = 3, py::arg("evolution") = "full",
        py::arg("threads") = 1);

  m.def("orthogonality_events",
        [](const std::string& kind, double p, const ChainParams& params,
           const std::vector<double>& grid, double threshold, int pair_initial, int pair_final) {
          SignalRequest req{make_spec(kind, p, py::none()), params,
                            PairSelector{pair_initial, pair_final}, EvolutionForm::Full};
          const OrthogonalitySignal sig = orthogonality_signal(req, grid, 1);
          const OrthogonalityEvents ev =
              find_orthogonality_events(sig, threshold, abs_overlap_evaluator(req));
          py::dict out;
          out["event_times"] = ev.event_times;
          out["count"] = ev.count;
          out["first_event"] = ev.first_event ? py::cast(*ev.first_event) : py::none();
          out["threshold"] = ev.threshold;
          return out;
        },
        py::arg("kind"), py::arg("p"), py::arg("params"), py::arg("grid"),
        py::arg("threshold") = 0.02, py::arg("pair_initial") = 3, py::arg("pair_final") = 3);

  m.def("divergence_report",
        [](const ChainParams& params, const std::vector<double>& grid) {
          const DivergenceReport rep = divergence_report(params, grid);
          py::dict out;
          py::list pairs;
          for (const PairGap& g : rep.pairs) {
            py::dict d;
            d["alpha"] = g.alpha;
            d["beta"] = g.beta;
            d["max_abs_gap"] = g.max_abs_gap;
            d["max_modulus_gap"] = g.max_modulus_gap;
            d["max_phase_gap"] = g.max_phase_gap;
            pairs.append(d);
          }
          out["pairs"] = pairs;
          out["max_abs_gap"] = rep.max_abs_gap;
          out["dm_sensitive"] = rep.dm_sensitive;
          return out;
        },
        py::arg("params"), py::arg("grid"));

  m.def("list_presets", [] {
    py::list out;
    for (const FigurePreset& p : figure_presets()) out.append(p.name);
    return out;
  });

  py::register_exception<InvariantError>(m, "InvariantError");
  py::register_exception<DegenerateCoherence>(m, "DegenerateCoherenceError");
}
