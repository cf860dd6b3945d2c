#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holoframe/dirichlet.hpp"
#include "holoframe/errors.hpp"
#include "holoframe/experiment.hpp"
#include "holoframe/frames.hpp"
#include "holoframe/funcspace.hpp"
#include "holoframe/sampling.hpp"
#include "holoframe/seqspace.hpp"
#include "holoframe/weights.hpp"

namespace py = pybind11;
using namespace holoframe;

namespace {

py::dict frame_dict(const FrameEstimate& e) {
    py::dict d;
    d["A"] = e.lower;
    d["B"] = e.upper;
    d["sigma_min"] = e.sigma_min;
    d["sigma_max"] = e.sigma_max;
    d["rank"] = e.rank;
    return d;
}

py::object parse_json(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_holoframe, m) {
    m.doc() = "Frames, sampling sets and Dirichlet expansions in weighted spaces of entire functions.";
    m.attr("__version__") = experiment::library_version();

    auto base = py::register_exception<Error>(m, "HoloframeError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    py::enum_<Domain>(m, "Domain").value("plane", Domain::plane).value("unit_disc", Domain::unit_disc);
    py::enum_<SampleNorm>(m, "SampleNorm").value("sup", SampleNorm::sup).value("ell_2", SampleNorm::ell_2);
    py::enum_<PNorm>(m, "PNorm").value("ell_1", PNorm::ell_1).value("ell_2", PNorm::ell_2).value("ell_inf", PNorm::ell_inf);
    py::enum_<LimitKind>(m, "LimitKind").value("inductive", LimitKind::inductive).value("projective", LimitKind::projective);

    py::class_<GrowthCondition>(m, "GrowthCondition")
        .def_static("power", &GrowthCondition::power, py::arg("a"))
        .def_static("log_power", &GrowthCondition::log_power, py::arg("a"))
        .def_static("table", &GrowthCondition::table, py::arg("radii"), py::arg("values"))
        .def("__call__", &GrowthCondition::operator(), py::arg("r"));

    py::class_<WeightFamily>(m, "WeightFamily")
        .def_static("inductive_powers", &WeightFamily::inductive_powers, py::arg("p"), py::arg("n_max"))
        .def_static("projective_roots", &WeightFamily::projective_roots, py::arg("p"), py::arg("n_max"))
        .def_static("disc_power", &WeightFamily::disc_power, py::arg("n_max"))
        .def_static("disc_dual", &WeightFamily::disc_dual, py::arg("n_max"))
        .def_static("gaussian", &WeightFamily::gaussian, py::arg("gamma"), py::arg("n_max") = 1)
        .def_property_readonly("n_max", &WeightFamily::n_max)
        .def_property_readonly("domain", &WeightFamily::domain);
    m.def("eval_weight", &eval_weight, py::arg("family"), py::arg("n"), py::arg("z"));

    py::class_<SequenceSpaceSpec>(m, "SequenceSpaceSpec")
        .def(py::init<RealMatrix, PNorm, LimitKind>(), py::arg("kothe"), py::arg("p_norm"), py::arg("limit_kind"))
        .def_property_readonly("kothe", &SequenceSpaceSpec::kothe)
        .def_property_readonly("p_norm", &SequenceSpaceSpec::p_norm)
        .def_property_readonly("limit_kind", &SequenceSpaceSpec::limit_kind);
    m.def("seq_norm", &seq_norm, py::arg("space"), py::arg("n"), py::arg("x"));
    m.def("beta_dual", &beta_dual, py::arg("space"));

    py::class_<GridSpec>(m, "GridSpec")
        .def_static("geometric", &GridSpec::geometric, py::arg("r_min"), py::arg("r_max"), py::arg("n_radii"),
                    py::arg("angles_per_radius"), py::arg("domain") = Domain::plane)
        .def_static("standard", &GridSpec::standard, py::arg("r_max"), py::arg("domain") = Domain::plane)
        .def("points", &GridSpec::points)
        .def("__len__", &GridSpec::size);

    m.def("evaluate", [](const Vector& c, Complex z) { return evaluate(TruncatedFunction(c), z); }, py::arg("coeffs"),
          py::arg("z"));
    m.def("fock_norm_sq", [](const Vector& c, double gamma) { return fock_norm_sq(TruncatedFunction(c), gamma); },
          py::arg("coeffs"), py::arg("gamma"));
    m.def("weighted_sup_norm",
          [](const Vector& c, const WeightFamily& fam, int n, const GridSpec& grid) {
              const SupNorm s = weighted_sup_norm(TruncatedFunction(c), fam, n, grid);
              return py::make_tuple(s.value, s.argmax);
          },
          py::arg("coeffs"), py::arg("family"), py::arg("n"), py::arg("grid"));
    m.def("random_function",
          [](int degree, double decay, std::uint64_t seed) { return random_function(degree, decay, seed).coeffs(); },
          py::arg("degree"), py::arg("decay"), py::arg("seed"));

    py::class_<SamplingSet>(m, "SamplingSet")
        .def_static("lattice", &SamplingSet::lattice, py::arg("alpha"), py::arg("beta"), py::arg("radius"))
        .def_static("ring_roots", &SamplingSet::ring_roots, py::arg("rings"))
        .def_static("explicit_points", &SamplingSet::explicit_points, py::arg("points"))
        .def("points", &SamplingSet::points)
        .def("subset", &SamplingSet::subset, py::arg("indices"))
        .def_property_readonly("ring_sizes", &SamplingSet::ring_sizes)
        .def("__len__", &SamplingSet::size);
    m.def("ring_size", &ring_size, py::arg("k"));

    m.def("analysis_matrix",
          [](const SamplingSet& s, const WeightFamily& fam, int n, int degree) {
              return analysis_matrix(s, fam, n, degree).entries;
          },
          py::arg("set"), py::arg("family"), py::arg("n"), py::arg("degree"));
    m.def("frame_bounds",
          [](const Matrix& u, std::optional<RealVector> gram) { return frame_dict(frame_bounds(u, gram)); },
          py::arg("u"), py::arg("gram_diagonal") = py::none());
    m.def("fock_gram_diagonal", &fock_gram_diagonal, py::arg("degree"), py::arg("gamma"));
    m.def("dual_frame",
          [](const Matrix& u, double threshold) {
              AnalysisMatrix a;
              a.entries = u;
              a.row_weights = RealVector::Ones(u.rows());
              a.points.assign(static_cast<std::size_t>(u.rows()), Complex{0.0, 0.0});
              a.degree = static_cast<int>(u.cols()) - 1;
              return dual_frame(a, threshold).entries;
          },
          py::arg("u"), py::arg("threshold") = default_rank_threshold);
    m.def("multiplier_prune_count",
          [](const SamplingSet& s, const WeightFamily& fam, int n, int degree, const Vector& q) {
              return multiplier_prune(analysis_matrix(s, fam, n, degree), q).rows();
          },
          py::arg("set"), py::arg("family"), py::arg("n"), py::arg("degree"), py::arg("q"));

    m.def("sampling_constant",
          [](const SamplingSet& s, const WeightFamily& fam, int n, int mm, int degree, const GridSpec& grid,
             SampleNorm norm) -> py::object {
              const auto c = sampling_constant(s, fam, n, mm, degree, grid, default_rank_threshold, norm);
              if (!c) return py::none();
              py::dict d;
              d["value"] = c->value;
              d["attained"] = c->attained;
              d["pinv_bound"] = c->pinv_bound;
              d["sigma_min"] = c->sigma_min;
              d["sigma_max"] = c->sigma_max;
              return d;
          },
          py::arg("set"), py::arg("family"), py::arg("n"), py::arg("m"), py::arg("degree"), py::arg("grid"),
          py::arg("norm") = SampleNorm::sup);
    m.def("uniqueness_margin",
          [](const SamplingSet& s, int degree) {
              const UniquenessMargin u = uniqueness_margin(s, degree);
              return py::make_tuple(u.margin, u.witness);
          },
          py::arg("set"), py::arg("degree"));

    py::class_<FrequencySet>(m, "FrequencySet")
        .def_static("square", &FrequencySet::square, py::arg("n"))
        .def_static("explicit_list", &FrequencySet::explicit_list, py::arg("lambdas"))
        .def("lambdas", &FrequencySet::lambdas)
        .def("__len__", &FrequencySet::size);
    m.def("dirichlet_grid", &dirichlet_grid, py::arg("radius") = 1.5);
    m.def("expand",
          [](const std::function<Complex(Complex)>& f, const FrequencySet& freqs, const GridSpec& grid, double ridge) {
              const DirichletExpansion e = expand(f, freqs, grid, ridge);
              py::dict d;
              d["coeffs"] = e.coeffs;
              d["residual_sup"] = e.residual_sup;
              d["sigma_min"] = e.sigma_min;
              d["sigma_max"] = e.sigma_max;
              try {
                  const DecayFit fit = decay_check(e, 2.0, 1e-12);
                  d["decay_epsilon"] = fit.epsilon;
                  d["decay_r_squared"] = fit.r_squared;
              } catch (const Error&) {
                  d["decay_epsilon"] = py::none();
                  d["decay_r_squared"] = py::none();
              }
              return d;
          },
          py::arg("f"), py::arg("freqs"), py::arg("grid"), py::arg("ridge") = 1e-10);
    m.def("nullspace_witness",
          [](const FrequencySet& freqs, const GridSpec& grid) {
              const NullspaceWitness w = nullspace_witness(freqs, grid);
              return py::make_tuple(w.coeffs, w.residual_sup);
          },
          py::arg("freqs"), py::arg("grid"));

    m.def("weierstrass_sigma",
          [](Complex z, double alpha, double beta, double r_trunc, bool tail) {
              return weierstrass_sigma(z, alpha, beta, r_trunc, SigmaOptions{tail});
          },
          py::arg("z"), py::arg("alpha"), py::arg("beta"), py::arg("r_trunc") = 20.0, py::arg("tail_correction") = true);
    m.def("sigma_max_modulus",
          [](double r, double alpha, double beta, double r_trunc, int n_angles) {
              return sigma_max_modulus(r, alpha, beta, r_trunc, n_angles);
          },
          py::arg("r"), py::arg("alpha"), py::arg("beta"), py::arg("r_trunc"), py::arg("n_angles") = 64);
    m.def("growth_order_estimate",
          [](const std::vector<std::pair<double, double>>& samples) {
              const GrowthOrder g = growth_order_estimate(samples);
              return py::make_tuple(g.order, g.log_type);
          },
          py::arg("samples"));

    m.def("run_config",
          [](const std::string& text) {
              const experiment::ExperimentConfig cfg = experiment::parse_config_text(text);
              return parse_json(experiment::run(cfg).report);
          },
          py::arg("config_json"), "Run an experiment from its JSON config text and return the report.");
}
