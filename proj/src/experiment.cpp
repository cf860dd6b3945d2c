#include "holoframe/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "holoframe/dirichlet.hpp"
#include "holoframe/errors.hpp"
#include "holoframe/frames.hpp"
#include "holoframe/funcspace.hpp"
#include "holoframe/numkernel.hpp"

#ifndef HOLOFRAME_VERSION
#define HOLOFRAME_VERSION "0.0.0"
#endif

namespace holoframe::experiment {

using nlohmann::json;

const char* library_version() {
    return HOLOFRAME_VERSION;
}

const char* to_string(Kind k) {
    switch (k) {
        case Kind::fock_frame: return "fock_frame";
        case Kind::sufficiency: return "sufficiency";
        case Kind::uniqueness: return "uniqueness";
        case Kind::dirichlet: return "dirichlet";
        case Kind::sigma: return "sigma";
        case Kind::schneider: return "schneider";
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Parsing

class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_.empty() ? "config" : path_, "must be an object");
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& raw(const std::string& key) {
        used_.insert(key);
        return j_.at(key);
    }

    double number(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        const json& v = raw(key);
        if (!v.is_number()) throw ConfigError(field(key), "must be a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw ConfigError(field(key), "must be finite");
        return d;
    }

    double positive(const std::string& key, double fallback) {
        const double d = number(key, fallback);
        if (!(d > 0.0)) throw ConfigError(field(key), "must be positive");
        return d;
    }

    long long integer(const std::string& key, long long fallback) {
        if (!has(key)) return fallback;
        const json& v = raw(key);
        if (!v.is_number_integer()) throw ConfigError(field(key), "must be an integer");
        return v.get<long long>();
    }

    int bounded(const std::string& key, int fallback, int lo, int hi) {
        const long long v = integer(key, fallback);
        if (v < lo || v > hi) {
            throw ConfigError(field(key), "must be in " + std::to_string(lo) + ".." + std::to_string(hi));
        }
        return static_cast<int>(v);
    }

    bool boolean(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const json& v = raw(key);
        if (!v.is_boolean()) throw ConfigError(field(key), "must be true or false");
        return v.get<bool>();
    }

    std::string string(const std::string& key, const std::string& fallback) {
        if (!has(key)) return fallback;
        const json& v = raw(key);
        if (!v.is_string()) throw ConfigError(field(key), "must be a string");
        return v.get<std::string>();
    }

    Complex complex(const std::string& key, Complex fallback) {
        if (!has(key)) return fallback;
        return parse_complex(raw(key), field(key));
    }

    std::vector<Complex> complex_list(const std::string& key) {
        std::vector<Complex> out;
        if (!has(key)) return out;
        const json& v = raw(key);
        if (!v.is_array()) throw ConfigError(field(key), "must be an array of [re, im] pairs");
        for (std::size_t i = 0; i < v.size(); ++i) {
            out.push_back(parse_complex(v[i], field(key) + "[" + std::to_string(i) + "]"));
        }
        return out;
    }

    std::vector<double> number_list(const std::string& key, std::vector<double> fallback) {
        if (!has(key)) return fallback;
        const json& v = raw(key);
        if (!v.is_array()) throw ConfigError(field(key), "must be an array of numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number()) throw ConfigError(field(key) + "[" + std::to_string(i) + "]", "must be a number");
            out.push_back(v[i].get<double>());
        }
        return out;
    }

    Reader child(const std::string& key) {
        static const json empty = json::object();
        if (!has(key)) return Reader(empty, field(key));
        return Reader(raw(key), field(key));
    }

    void finish() const {
        for (const auto& item : j_.items()) {
            if (!used_.count(item.key())) throw ConfigError(field(item.key()), "unknown key");
        }
    }

private:
    static Complex parse_complex(const json& v, const std::string& where) {
        if (v.is_number()) return {v.get<double>(), 0.0};
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            throw ConfigError(where, "complex numbers are encoded as [re, im]");
        }
        return {v[0].get<double>(), v[1].get<double>()};
    }

    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

SetConfig parse_set(Reader r) {
    SetConfig s;
    const std::string gen = r.string("generator", "lattice");
    if (gen == "lattice") {
        s.generator = SetGenerator::lattice;
        s.alpha = r.positive("alpha", 1.0);
        s.beta = r.positive("beta", 1.0);
        s.radius = r.positive("radius", 8.0);
        if (s.radius < std::max(s.alpha, s.beta)) throw ConfigError(r.field("radius"), "must be >= max(alpha, beta)");
    } else if (gen == "ring_roots") {
        s.generator = SetGenerator::ring_roots;
        s.rings = r.bounded("rings", 3, 1, 64);
    } else if (gen == "explicit") {
        s.generator = SetGenerator::explicit_points;
        s.points = r.complex_list("points");
        if (s.points.empty()) throw ConfigError(r.field("points"), "must list at least one point");
    } else {
        throw ConfigError(r.field("generator"), "expected lattice, ring_roots or explicit");
    }
    r.finish();
    return s;
}

GridConfig parse_grid(Reader r, GridConfig defaults) {
    GridConfig g;
    g.r_min = r.positive("r_min", defaults.r_min);
    g.r_max = r.positive("r_max", defaults.r_max);
    g.radii = r.bounded("radii", defaults.radii, 1, 4096);
    g.angles = r.bounded("angles", defaults.angles, 8, 8192);
    if (g.r_max < g.r_min || (g.radii > 1 && !(g.r_max > g.r_min))) {
        throw ConfigError(r.field("r_max"), "must exceed r_min");
    }
    r.finish();
    return g;
}

GrowthConfig parse_growth(Reader r, GrowthConfig defaults) {
    GrowthConfig g;
    const std::string kind = r.string("kind", to_string(defaults.kind));
    if (kind == "power") {
        g.kind = GrowthCondition::Kind::power;
        g.a = r.positive("a", defaults.a);
    } else if (kind == "log_power") {
        g.kind = GrowthCondition::Kind::log_power;
        g.a = r.positive("a", defaults.a);
    } else if (kind == "table") {
        g.kind = GrowthCondition::Kind::table;
        g.a = 0.0;
        g.radii = r.number_list("radii", {});
        g.values = r.number_list("values", {});
        try {
            (void)GrowthCondition::table(g.radii, g.values);
        } catch (const ArgumentError& e) {
            throw ConfigError(r.field("radii"), e.what());
        }
    } else {
        throw ConfigError(r.field("kind"), "expected power, log_power or table");
    }
    r.finish();
    return g;
}

WeightConfig parse_weights(Reader r) {
    WeightConfig w;
    const std::string scheme = r.string("scheme", "inductive_powers");
    if (scheme == "inductive_powers") w.scheme = WeightScheme::inductive_powers;
    else if (scheme == "projective_roots") w.scheme = WeightScheme::projective_roots;
    else if (scheme == "disc_power") w.scheme = WeightScheme::disc_power;
    else if (scheme == "disc_dual") w.scheme = WeightScheme::disc_dual;
    else if (scheme == "gaussian") w.scheme = WeightScheme::gaussian;
    else throw ConfigError(r.field("scheme"), "unknown weight scheme '" + scheme + "'");
    w.growth = parse_growth(r.child("growth"), GrowthConfig{});
    w.gamma = r.positive("gamma", 1.0);
    w.n_max = r.bounded("n_max", 8, 1, 1000);
    r.finish();
    return w;
}

FunctionConfig parse_function(Reader r) {
    FunctionConfig f;
    const std::string kind = r.string("kind", "exponential");
    if (kind == "exponential") {
        f.kind = FunctionConfig::Kind::exponential;
        f.rate = r.complex("rate", {0.5, 0.0});
    } else if (kind == "polynomial") {
        f.kind = FunctionConfig::Kind::polynomial;
        f.rate = {0.0, 0.0};
        f.coefficients = r.complex_list("coefficients");
        if (f.coefficients.empty()) throw ConfigError(r.field("coefficients"), "must be nonempty");
    } else {
        throw ConfigError(r.field("kind"), "expected exponential or polynomial");
    }
    r.finish();
    return f;
}

Parameters parse_parameters(Kind kind, Reader r) {
    switch (kind) {
        case Kind::fock_frame: {
            FockFrameParams p;
            p.gamma = r.positive("gamma", 1.0);
            p.lattice = parse_set(r.child("lattice"));
            if (p.lattice.generator != SetGenerator::lattice) {
                throw ConfigError(r.field("lattice.generator"), "fock_frame needs a lattice");
            }
            p.degree = r.bounded("degree", 8, 0, max_degree);
            if (r.has("compare_radius")) p.compare_radius = r.positive("compare_radius", 10.0);
            p.prune_polynomial = r.complex_list("prune_polynomial");
            const long long seed = r.integer("seed", 1);
            if (seed < 0) throw ConfigError(r.field("seed"), "must be nonnegative");
            p.seed = static_cast<std::uint64_t>(seed);
            r.finish();
            return p;
        }
        case Kind::sufficiency: {
            SufficiencyParams p;
            p.set = parse_set(r.child("set"));
            p.weights = parse_weights(r.child("weights"));
            p.n = r.bounded("n", 1, 1, p.weights.n_max);
            p.m_max = r.bounded("m_max", std::min(p.n + 3, p.weights.n_max), p.n, p.weights.n_max);
            p.degree = r.bounded("degree", 8, 0, max_degree);
            p.grid = parse_grid(r.child("grid"), GridConfig{});
            p.threshold = r.positive("threshold", 1e-10);
            const std::string norm = r.string("norm", "sup");
            if (norm == "sup") p.norm = SampleNorm::sup;
            else if (norm == "ell_2") p.norm = SampleNorm::ell_2;
            else throw ConfigError(r.field("norm"), "expected sup or ell_2");
            r.finish();
            return p;
        }
        case Kind::uniqueness: {
            UniquenessParams p;
            p.set = parse_set(r.child("set"));
            p.degree = r.bounded("degree", 6, 0, max_degree);
            p.threshold = r.positive("threshold", 1e-10);
            r.finish();
            return p;
        }
        case Kind::dirichlet: {
            DirichletParams p;
            p.square = r.bounded("square", 2, 0, 12);
            p.function = parse_function(r.child("function"));
            p.grid = parse_grid(r.child("grid"), DirichletParams{}.grid);
            p.ridge = r.number("ridge", 1e-10);
            if (!(p.ridge >= 0.0)) throw ConfigError(r.field("ridge"), "must be nonnegative");
            p.decay_b = r.positive("decay_b", 2.0);
            p.drop_threshold = r.positive("drop_threshold", 1e-12);
            p.witness = r.boolean("witness", true);
            r.finish();
            return p;
        }
        case Kind::sigma: {
            SigmaParams p;
            p.alpha = r.positive("alpha", 1.0);
            p.beta = r.positive("beta", 1.0);
            p.r_trunc = r.positive("r_trunc", 20.0);
            p.probes = r.complex_list("probes");
            for (std::size_t i = 0; i < p.probes.size(); ++i) {
                if (std::abs(p.probes[i]) * 10.0 > p.r_trunc) {
                    throw ConfigError(r.field("probes") + "[" + std::to_string(i) + "]", "needs |z| <= r_trunc / 10");
                }
            }
            p.growth_radii = r.number_list("growth_radii", p.growth_radii);
            for (std::size_t i = 0; i < p.growth_radii.size(); ++i) {
                if (!(p.growth_radii[i] > 0.0)) {
                    throw ConfigError(r.field("growth_radii") + "[" + std::to_string(i) + "]", "must be positive");
                }
            }
            p.angles = r.bounded("angles", 64, 1, 100000);
            p.tail_correction = r.boolean("tail_correction", true);
            r.finish();
            return p;
        }
        case Kind::schneider: {
            SchneiderParams p;
            p.set = parse_set(r.child("set"));
            p.q = parse_growth(r.child("q"), SchneiderParams{}.q);
            p.c = r.positive("C", 1.0);
            p.probe_grid = parse_grid(r.child("probe_grid"), SchneiderParams{}.probe_grid);
            r.finish();
            return p;
        }
    }
    throw ConfigError("experiment", "unsupported");
}

// ---------------------------------------------------------------------------
// Serialization

json complex_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json complex_list_json(const std::vector<Complex>& zs) {
    json a = json::array();
    for (const Complex& z : zs) a.push_back(complex_json(z));
    return a;
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v(i)));
    return a;
}

json set_json(const SetConfig& s) {
    json j;
    j["generator"] = to_string(s.generator);
    switch (s.generator) {
        case SetGenerator::lattice:
            j["alpha"] = s.alpha;
            j["beta"] = s.beta;
            j["radius"] = s.radius;
            break;
        case SetGenerator::ring_roots:
            j["rings"] = s.rings;
            break;
        case SetGenerator::explicit_points:
            j["points"] = complex_list_json(s.points);
            break;
    }
    return j;
}

json grid_json(const GridConfig& g) {
    return {{"r_min", g.r_min}, {"r_max", g.r_max}, {"radii", g.radii}, {"angles", g.angles}};
}

json growth_json(const GrowthConfig& g) {
    json j;
    j["kind"] = to_string(g.kind);
    if (g.kind == GrowthCondition::Kind::table) {
        j["radii"] = g.radii;
        j["values"] = g.values;
    } else {
        j["a"] = g.a;
    }
    return j;
}

json weights_json(const WeightConfig& w) {
    return {{"scheme", to_string(w.scheme)}, {"growth", growth_json(w.growth)}, {"gamma", w.gamma}, {"n_max", w.n_max}};
}

json parameters_json(const Parameters& params) {
    return std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            json j;
            if constexpr (std::is_same_v<T, FockFrameParams>) {
                j["gamma"] = p.gamma;
                j["lattice"] = set_json(p.lattice);
                j["degree"] = p.degree;
                if (p.compare_radius) j["compare_radius"] = *p.compare_radius;
                j["prune_polynomial"] = complex_list_json(p.prune_polynomial);
                j["seed"] = p.seed;
            } else if constexpr (std::is_same_v<T, SufficiencyParams>) {
                j["set"] = set_json(p.set);
                j["weights"] = weights_json(p.weights);
                j["n"] = p.n;
                j["m_max"] = p.m_max;
                j["degree"] = p.degree;
                j["grid"] = grid_json(p.grid);
                j["threshold"] = p.threshold;
                j["norm"] = to_string(p.norm);
            } else if constexpr (std::is_same_v<T, UniquenessParams>) {
                j["set"] = set_json(p.set);
                j["degree"] = p.degree;
                j["threshold"] = p.threshold;
            } else if constexpr (std::is_same_v<T, DirichletParams>) {
                j["square"] = p.square;
                json f;
                if (p.function.kind == FunctionConfig::Kind::exponential) {
                    f = {{"kind", "exponential"}, {"rate", complex_json(p.function.rate)}};
                } else {
                    f = {{"kind", "polynomial"}, {"coefficients", complex_list_json(p.function.coefficients)}};
                }
                j["function"] = f;
                j["grid"] = grid_json(p.grid);
                j["ridge"] = p.ridge;
                j["decay_b"] = p.decay_b;
                j["drop_threshold"] = p.drop_threshold;
                j["witness"] = p.witness;
            } else if constexpr (std::is_same_v<T, SigmaParams>) {
                j["alpha"] = p.alpha;
                j["beta"] = p.beta;
                j["r_trunc"] = p.r_trunc;
                j["probes"] = complex_list_json(p.probes);
                j["growth_radii"] = p.growth_radii;
                j["angles"] = p.angles;
                j["tail_correction"] = p.tail_correction;
            } else if constexpr (std::is_same_v<T, SchneiderParams>) {
                j["set"] = set_json(p.set);
                j["q"] = growth_json(p.q);
                j["C"] = p.c;
                j["probe_grid"] = grid_json(p.probe_grid);
            }
            return j;
        },
        params);
}

// ---------------------------------------------------------------------------
// Construction of library objects

SamplingSet build_set(const SetConfig& s) {
    switch (s.generator) {
        case SetGenerator::lattice: return SamplingSet::lattice(s.alpha, s.beta, s.radius);
        case SetGenerator::ring_roots: return SamplingSet::ring_roots(s.rings);
        case SetGenerator::explicit_points: return SamplingSet::explicit_points(s.points);
    }
    throw ConfigError("set.generator", "unsupported");
}

GridSpec build_grid(const GridConfig& g) {
    return GridSpec::geometric(g.r_min, g.r_max, g.radii, g.angles);
}

GrowthCondition build_growth(const GrowthConfig& g) {
    switch (g.kind) {
        case GrowthCondition::Kind::power: return GrowthCondition::power(g.a);
        case GrowthCondition::Kind::log_power: return GrowthCondition::log_power(g.a);
        case GrowthCondition::Kind::table: return GrowthCondition::table(g.radii, g.values);
    }
    throw ConfigError("growth.kind", "unsupported");
}

WeightFamily build_weights(const WeightConfig& w) {
    switch (w.scheme) {
        case WeightScheme::inductive_powers: return WeightFamily::inductive_powers(build_growth(w.growth), w.n_max);
        case WeightScheme::projective_roots: return WeightFamily::projective_roots(build_growth(w.growth), w.n_max);
        case WeightScheme::disc_power: return WeightFamily::disc_power(w.n_max);
        case WeightScheme::disc_dual: return WeightFamily::disc_dual(w.n_max);
        case WeightScheme::gaussian: return WeightFamily::gaussian(w.gamma, w.n_max);
    }
    throw ConfigError("weights.scheme", "unsupported");
}

Vector to_vector(const std::vector<Complex>& zs) {
    Vector v(static_cast<Eigen::Index>(zs.size()));
    for (std::size_t i = 0; i < zs.size(); ++i) v(static_cast<Eigen::Index>(i)) = zs[i];
    return v;
}

// ---------------------------------------------------------------------------
// Experiments

json frame_json(const FrameEstimate& f) {
    return {{"A", f.lower},
            {"B", f.upper},
            {"ratio", f.lower > 0.0 ? json(f.upper / f.lower) : json(nullptr)},
            {"sigma_min", f.sigma_min},
            {"sigma_max", f.sigma_max},
            {"rank", f.rank}};
}

double round_trip_error(const AnalysisMatrix& u, std::uint64_t seed) {
    const SynthesisMatrix s = dual_frame(u);
    const TruncatedFunction f = random_function(u.degree, 0.0, seed);
    const TruncatedFunction back = reconstruct(s, analyze(u, f));
    return (back.coeffs() - f.coeffs()).norm() / f.coeffs().norm();
}

void run_fock(const FockFrameParams& p, RunResult& out) {
    const WeightFamily fam = WeightFamily::gaussian(p.gamma, 1);
    const RealVector gram = fock_gram_diagonal(p.degree, p.gamma);
    const SamplingSet set = SamplingSet::lattice(p.lattice.alpha, p.lattice.beta, p.lattice.radius);
    const AnalysisMatrix u = analysis_matrix(set, fam, 1, p.degree);
    const FrameEstimate est = frame_bounds(u, gram);
    json& r = out.report["results"];
    r["points"] = set.size();
    r["frame"] = frame_json(est);
    r["reconstruction_relative_error"] = round_trip_error(u, p.seed);

    const RealVector spectrum = numkernel::hermitian_gen_eig(u.entries.adjoint() * u.entries, gram);
    Table t{"spectrum", {"index", "eigenvalue"}, {}};
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) t.rows.push_back({static_cast<double>(i), spectrum(i)});
    out.tables.push_back(std::move(t));

    if (p.compare_radius) {
        const SamplingSet big = SamplingSet::lattice(p.lattice.alpha, p.lattice.beta, *p.compare_radius);
        const FrameEstimate est2 = frame_bounds(analysis_matrix(big, fam, 1, p.degree), gram);
        r["comparison"] = {{"radius", *p.compare_radius},
                           {"points", big.size()},
                           {"frame", frame_json(est2)},
                           {"relative_change_A", std::abs(est2.lower - est.lower) / est.lower}};
    }
    if (!p.prune_polynomial.empty()) {
        const AnalysisMatrix pruned = multiplier_prune(u, to_vector(p.prune_polynomial));
        r["pruned"] = {{"points", pruned.rows()},
                       {"removed", u.rows() - pruned.rows()},
                       {"frame", frame_json(frame_bounds(pruned, gram))},
                       {"reconstruction_relative_error", round_trip_error(pruned, p.seed)}};
    }
}

void run_sufficiency(const SufficiencyParams& p, RunResult& out) {
    const SamplingSet set = build_set(p.set);
    const WeightFamily fam = build_weights(p.weights);
    const GridSpec grid = build_grid(p.grid);
    const SufficiencyReport rep = weak_sufficiency_report(set, fam, p.n, p.degree, grid, p.m_max, p.threshold, p.norm);
    json& r = out.report["results"];
    r["points"] = set.size();
    r["n"] = rep.n;
    r["m_found"] = rep.m_found ? json(*rep.m_found) : json(nullptr);
    r["C"] = rep.constant ? json(*rep.constant) : json(nullptr);
    r["sigma_min_unweighted"] = rep.sigma_min_unweighted;
    r["degree"] = rep.degree;
    r["grid_points"] = grid.size();
    Table t{"scan", {"m", "C"}, {}};
    json scan = json::array();
    for (const auto& [m, c] : rep.scan) {
        scan.push_back({{"m", m}, {"C", c}});
        t.rows.push_back({static_cast<double>(m), c});
    }
    r["scan"] = scan;
    if (!rep.m_found) {
        out.numerical_failure = true;
        r["failure"] = "weighted sample matrix is rank deficient: not a uniqueness set at this truncation";
    }
    out.tables.push_back(std::move(t));
}

void run_uniqueness(const UniquenessParams& p, RunResult& out) {
    const SamplingSet set = build_set(p.set);
    const UniquenessMargin m = uniqueness_margin(set, p.degree);
    json& r = out.report["results"];
    r["points"] = set.size();
    r["margin"] = m.margin;
    r["sigma_max"] = m.sigma_max;
    r["is_uniqueness_set"] = m.is_uniqueness_set(p.threshold);
    r["witness"] = vector_json(m.witness);
    Table t{"witness", {"k", "re", "im"}, {}};
    for (Eigen::Index k = 0; k < m.witness.size(); ++k) {
        t.rows.push_back({static_cast<double>(k), m.witness(k).real(), m.witness(k).imag()});
    }
    out.tables.push_back(std::move(t));
}

void run_dirichlet(const DirichletParams& p, RunResult& out) {
    const FrequencySet freqs = FrequencySet::square(p.square);
    const GridSpec grid = build_grid(p.grid);
    DirichletExpansion e = [&] {
        if (p.function.kind == FunctionConfig::Kind::exponential) {
            const Complex rate = p.function.rate;
            return expand([rate](Complex z) { return std::exp(rate * z); }, freqs, grid, p.ridge);
        }
        return expand(TruncatedFunction(to_vector(p.function.coefficients)), freqs, grid, p.ridge);
    }();
    json& r = out.report["results"];
    r["frequencies"] = freqs.size();
    r["ridge"] = e.ridge;
    r["residual_sup"] = e.residual_sup;
    r["sigma_min"] = e.sigma_min;
    r["sigma_max"] = e.sigma_max;
    r["coefficients"] = vector_json(e.coeffs);
    try {
        const DecayFit fit = decay_check(e, p.decay_b, p.drop_threshold);
        r["decay_fit"] = {{"b", fit.b}, {"epsilon", fit.epsilon}, {"C", fit.c}, {"r_squared", fit.r_squared},
                          {"points_used", fit.points_used}};
    } catch (const InsufficientDataError& ex) {
        r["decay_fit"] = {{"failure", ex.what()}};
    }
    if (p.witness) {
        const NullspaceWitness w = nullspace_witness(freqs, grid);
        r["witness"] = {{"residual_sup", w.residual_sup}, {"sigma_min", w.sigma_min}, {"coefficients", vector_json(w.coeffs)}};
    }
    Table t{"coefficients", {"n", "m", "re", "im", "abs"}, {}};
    for (std::size_t k = 0; k < freqs.size(); ++k) {
        const Complex a = e.coeffs(static_cast<Eigen::Index>(k));
        const Complex l = freqs.lambdas()[k];
        t.rows.push_back({l.real(), l.imag(), a.real(), a.imag(), std::abs(a)});
    }
    out.tables.push_back(std::move(t));
}

void run_sigma(const SigmaParams& p, RunResult& out) {
    const SigmaOptions opts{p.tail_correction};
    json& r = out.report["results"];
    json probes = json::array();
    Table tp{"probes", {"re", "im", "sigma_re", "sigma_im", "abs"}, {}};
    for (const Complex& z : p.probes) {
        const Complex s = weierstrass_sigma(z, p.alpha, p.beta, p.r_trunc, opts);
        probes.push_back({{"z", complex_json(z)}, {"sigma", complex_json(s)}});
        tp.rows.push_back({z.real(), z.imag(), s.real(), s.imag(), std::abs(s)});
    }
    r["probes"] = probes;
    if (!p.growth_radii.empty()) {
        const double rmax = *std::max_element(p.growth_radii.begin(), p.growth_radii.end());
        const double growth_trunc = std::max(p.r_trunc, 10.0 * rmax);
        std::vector<std::pair<double, double>> samples;
        Table tg{"growth", {"r", "max_modulus"}, {}};
        for (double rad : p.growth_radii) {
            const double mm = sigma_max_modulus(rad, p.alpha, p.beta, growth_trunc, p.angles, opts);
            samples.emplace_back(rad, mm);
            tg.rows.push_back({rad, mm});
        }
        r["growth_r_trunc"] = growth_trunc;
        try {
            const GrowthOrder g = growth_order_estimate(samples);
            r["growth"] = {{"order", g.order}, {"log_type", g.log_type}, {"points_used", g.points_used}};
        } catch (const InsufficientDataError& ex) {
            r["growth"] = {{"failure", ex.what()}};
            out.numerical_failure = true;
        }
        out.tables.push_back(std::move(tg));
    }
    out.tables.push_back(std::move(tp));
}

void run_schneider(const SchneiderParams& p, RunResult& out) {
    const SamplingSet set = build_set(p.set);
    const SchneiderReport rep = schneider_density_check(set, build_growth(p.q), p.c, build_grid(p.probe_grid));
    json& r = out.report["results"];
    r["points"] = set.size();
    r["max_violation_ratio"] = rep.max_violation_ratio;
    r["pass"] = rep.pass;
    r["worst_probe"] = complex_json(rep.worst_probe);
    r["probes_checked"] = rep.probes_checked;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open " + tmp.string() + " for writing");
        os << content;
        if (!os) throw Error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
    Reader r(j, "");
    const long long version = r.integer("schema_version", schema_version);
    if (version != schema_version) {
        throw ConfigError("schema_version", "unsupported version " + std::to_string(version));
    }
    if (!r.has("experiment")) throw ConfigError("experiment", "missing");
    const std::string name = r.string("experiment", "");
    ExperimentConfig cfg;
    const Kind kinds[] = {Kind::fock_frame, Kind::sufficiency, Kind::uniqueness,
                          Kind::dirichlet, Kind::sigma, Kind::schneider};
    bool found = false;
    for (Kind k : kinds) {
        if (name == to_string(k)) {
            cfg.experiment = k;
            found = true;
        }
    }
    if (!found) throw ConfigError("experiment", "unknown experiment '" + name + "'");
    cfg.parameters = parse_parameters(cfg.experiment, r.child("parameters"));
    cfg.output = r.string("output", to_string(cfg.experiment));
    if (cfg.output.empty() || cfg.output.find('/') != std::string::npos) {
        throw ConfigError("output", "must be a plain file stem");
    }
    r.finish();
    return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config", "cannot read " + path.string());
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

json to_json(const ExperimentConfig& cfg) {
    return {{"schema_version", schema_version},
            {"experiment", to_string(cfg.experiment)},
            {"parameters", parameters_json(cfg.parameters)},
            {"output", cfg.output}};
}

std::string Table::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    os << std::setprecision(17);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

RunResult run(const ExperimentConfig& cfg) {
    RunResult out;
    out.report["schema_version"] = schema_version;
    out.report["library_version"] = library_version();
    out.report["experiment"] = to_string(cfg.experiment);
    out.report["config"] = to_json(cfg);
    out.report["results"] = json::object();
    try {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, FockFrameParams>) run_fock(p, out);
                else if constexpr (std::is_same_v<T, SufficiencyParams>) run_sufficiency(p, out);
                else if constexpr (std::is_same_v<T, UniquenessParams>) run_uniqueness(p, out);
                else if constexpr (std::is_same_v<T, DirichletParams>) run_dirichlet(p, out);
                else if constexpr (std::is_same_v<T, SigmaParams>) run_sigma(p, out);
                else if constexpr (std::is_same_v<T, SchneiderParams>) run_schneider(p, out);
            },
            cfg.parameters);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        out.numerical_failure = true;
        out.report["results"]["failure"] = e.what();
    }
    out.report["status"] = out.numerical_failure ? "numerical_failure" : "ok";
    out.report["metadata"] = {{"generated_at", utc_timestamp()}};
    return out;
}

json primary_payload(const json& report) {
    json p = report;
    p.erase("metadata");
    return p;
}

std::vector<std::filesystem::path> write_outputs(const RunResult& result, const ExperimentConfig& cfg,
                                                 const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    const std::filesystem::path report_path = dir / (cfg.output + ".json");
    write_atomically(report_path, result.report.dump(2) + "\n");
    written.push_back(report_path);
    for (const Table& t : result.tables) {
        const std::filesystem::path p = dir / (cfg.output + "_" + t.name + ".csv");
        write_atomically(p, t.to_csv());
        written.push_back(p);
    }
    return written;
}

}  // namespace holoframe::experiment
