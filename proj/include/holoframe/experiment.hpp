#pragma once

// Reproducible batch experiments: typed configs parsed from JSON, a runner
// that produces a versioned report, and atomic output writing.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "holoframe/sampling.hpp"
#include "holoframe/types.hpp"
#include "holoframe/weights.hpp"

namespace holoframe::experiment {

inline constexpr int schema_version = 1;

const char* library_version();

enum class Kind { fock_frame, sufficiency, uniqueness, dirichlet, sigma, schneider };

const char* to_string(Kind k);

struct SetConfig {
    SetGenerator generator = SetGenerator::lattice;
    double alpha = 1.0;
    double beta = 1.0;
    double radius = 8.0;
    int rings = 3;
    PointList points;

    friend bool operator==(const SetConfig&, const SetConfig&) = default;
};

struct GridConfig {
    double r_min = 1e-3;
    double r_max = 8.0;
    int radii = 64;
    int angles = 128;

    friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

struct GrowthConfig {
    GrowthCondition::Kind kind = GrowthCondition::Kind::power;
    double a = 1.0;
    std::vector<double> radii;
    std::vector<double> values;

    friend bool operator==(const GrowthConfig&, const GrowthConfig&) = default;
};

struct WeightConfig {
    WeightScheme scheme = WeightScheme::inductive_powers;
    GrowthConfig growth;
    double gamma = 1.0;
    int n_max = 8;

    friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

struct FockFrameParams {
    double gamma = 1.0;
    SetConfig lattice;
    int degree = 8;
    std::optional<double> compare_radius;
    std::vector<Complex> prune_polynomial;  // empty: no pruning
    std::uint64_t seed = 1;

    friend bool operator==(const FockFrameParams&, const FockFrameParams&) = default;
};

struct SufficiencyParams {
    SetConfig set;
    WeightConfig weights;
    int n = 1;
    int m_max = 4;
    int degree = 8;
    GridConfig grid;
    double threshold = 1e-10;
    SampleNorm norm = SampleNorm::sup;

    friend bool operator==(const SufficiencyParams&, const SufficiencyParams&) = default;
};

struct UniquenessParams {
    SetConfig set;
    int degree = 6;
    double threshold = 1e-10;

    friend bool operator==(const UniquenessParams&, const UniquenessParams&) = default;
};

struct FunctionConfig {
    enum class Kind { exponential, polynomial } kind = Kind::exponential;
    Complex rate{0.5, 0.0};           // f(z) = exp(rate z)
    std::vector<Complex> coefficients; // f(z) = sum c_k z^k

    friend bool operator==(const FunctionConfig&, const FunctionConfig&) = default;
};

struct DirichletParams {
    int square = 2;
    FunctionConfig function;
    GridConfig grid{1e-3, 1.5, 16, 32};
    double ridge = 1e-10;
    double decay_b = 2.0;
    double drop_threshold = 1e-12;
    bool witness = true;

    friend bool operator==(const DirichletParams&, const DirichletParams&) = default;
};

struct SigmaParams {
    double alpha = 1.0;
    double beta = 1.0;
    double r_trunc = 20.0;
    std::vector<Complex> probes;
    std::vector<double> growth_radii{2, 3, 4, 5, 6};
    int angles = 64;
    bool tail_correction = true;

    friend bool operator==(const SigmaParams&, const SigmaParams&) = default;
};

struct SchneiderParams {
    SetConfig set;
    GrowthConfig q{GrowthCondition::Kind::power, 2.0, {}, {}};
    double c = 1.0;
    GridConfig probe_grid{0.5, 6.0, 16, 64};

    friend bool operator==(const SchneiderParams&, const SchneiderParams&) = default;
};

using Parameters = std::variant<FockFrameParams, SufficiencyParams, UniquenessParams, DirichletParams, SigmaParams,
                                SchneiderParams>;

struct ExperimentConfig {
    Kind experiment = Kind::fock_frame;
    Parameters parameters;
    std::string output;  // report file stem; defaults to the experiment name

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Parses and validates; throws ConfigError naming the offending field.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Normalized echo with every default filled in.
nlohmann::json to_json(const ExperimentConfig& cfg);

struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
};

struct RunResult {
    nlohmann::json report;  // primary payload plus a separate "metadata" member
    std::vector<Table> tables;
    bool numerical_failure = false;
};

/// Runs the experiment. Numerical failures are recorded in the report, not thrown.
RunResult run(const ExperimentConfig& cfg);

/// Report without the "metadata" member.
nlohmann::json primary_payload(const nlohmann::json& report);

/// Writes <stem>.json and <stem>_<table>.csv into dir via temp file + rename.
std::vector<std::filesystem::path> write_outputs(const RunResult& result, const ExperimentConfig& cfg,
                                                 const std::filesystem::path& dir);

}  // namespace holoframe::experiment
