#include <doctest.h>

#include <filesystem>
#include <string>

#include "holoframe/errors.hpp"
#include "holoframe/experiment.hpp"

using namespace holoframe;
namespace hx = holoframe::experiment;
using nlohmann::json;

#ifndef HOLOFRAME_CONFIG_DIR
#define HOLOFRAME_CONFIG_DIR "configs"
#endif

namespace {

std::string field_of(const std::string& text) {
    try {
        (void)hx::parse_config_text(text);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "<accepted>";
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("shipped configs parse and round-trip") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(HOLOFRAME_CONFIG_DIR)) {
        if (entry.path().extension() != ".json" || entry.path().stem().string().starts_with("bad_")) continue;
        CAPTURE(entry.path().string());
        const hx::ExperimentConfig cfg = hx::load_config(entry.path());
        const json echo = hx::to_json(cfg);
        CHECK(hx::parse_config(echo) == cfg);
        CHECK(hx::to_json(hx::parse_config(echo)) == echo);
        ++seen;
    }
    CHECK(seen == 6);
}

TEST_CASE("defaults fill in missing parameters") {
    const auto cfg = hx::parse_config_text(R"({"experiment": "uniqueness", "parameters": {"set": {"generator": "ring_roots"}}})");
    const auto& p = std::get<hx::UniquenessParams>(cfg.parameters);
    CHECK(p.degree == 6);
    CHECK(cfg.output == "uniqueness");
}

TEST_CASE("invalid configs name the offending field") {
    CHECK(field_of(R"({"experiment": "fock_frame", "parameters": {"degree": -1}})") == "parameters.degree");
    CHECK(field_of(R"({"experiment": "fock_frame", "parameters": {"gamma": 0}})") == "parameters.gamma");
    CHECK(field_of(R"({"experiment": "nope"})") == "experiment");
    CHECK(field_of(R"({"parameters": {}})") == "experiment");
    CHECK(field_of(R"({"experiment": "sigma", "schema_version": 2})") == "schema_version");
    CHECK(field_of(R"({"experiment": "sigma", "parameters": {"speed": 1}})") == "parameters.speed");
    CHECK(field_of(R"({"experiment": "sigma", "parameters": {"probes": [[1, 2, 3]]}})") == "parameters.probes[0]");
    CHECK(field_of(R"({"experiment": "dirichlet", "parameters": {"function": {"kind": "sine"}}})") ==
          "parameters.function.kind");
    CHECK(field_of(R"({"experiment": "sufficiency", "parameters": {"weights": {"scheme": "odd"}}})") ==
          "parameters.weights.scheme");
    CHECK(field_of(R"({"experiment": "sufficiency", "parameters": {"set": {"generator": "lattice", "radius": 0.5}}})") ==
          "parameters.set.radius");
    CHECK(field_of("{not json") == "config");
    CHECK(field_of(R"({"experiment": "fock_frame", "parameters": {"degree": 8}})") == "<accepted>");
}

TEST_CASE("runs are deterministic apart from metadata") {
    const auto cfg = hx::parse_config_text(
        R"({"experiment": "fock_frame", "parameters": {"lattice": {"generator": "lattice", "radius": 5}, "degree": 5}})");
    const hx::RunResult a = hx::run(cfg);
    const hx::RunResult b = hx::run(cfg);
    CHECK(a.report.at("status") == "ok");
    CHECK(a.report.contains("metadata"));
    CHECK(hx::primary_payload(a.report).dump() == hx::primary_payload(b.report).dump());
    CHECK_FALSE(hx::primary_payload(a.report).contains("metadata"));
    CHECK(a.report.at("config") == hx::to_json(cfg));
    CHECK(a.report.at("library_version") == hx::library_version());
}

TEST_CASE("numerical failures are reported, not thrown") {
    const auto cfg = hx::parse_config_text(R"({"experiment": "sufficiency", "parameters": {
        "set": {"generator": "explicit", "points": [[0, 0], [1, 0], [0, 1]]},
        "weights": {"scheme": "inductive_powers", "growth": {"kind": "power", "a": 1}, "n_max": 3},
        "degree": 8, "m_max": 2, "grid": {"r_min": 0.1, "r_max": 1, "radii": 4, "angles": 8}}})");
    const hx::RunResult r = hx::run(cfg);
    CHECK(r.numerical_failure);
    CHECK(r.report.at("status") == "numerical_failure");
    CHECK(r.report.at("results").at("m_found").is_null());
}

TEST_CASE("tables render as csv") {
    const hx::Table t{"x", {"a", "b"}, {{1.0, 0.5}, {2.0, 0.25}}};
    CHECK(t.to_csv() == "a,b\n1,0.5\n2,0.25\n");
}

}
