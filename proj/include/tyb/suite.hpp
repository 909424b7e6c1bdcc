#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tyb/check.hpp"
#include "tyb/coefficients.hpp"

namespace tyb {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class GroupKind { glq, slq, slq_super };

enum class B0Kind { canonical, beta, explicit_matrix };

// Fully resolved run description. Defaults: tolerance 1e-9, checks "all",
// 20 momenta, scale 1.0, spectral parameter sets as below.
struct RunConfig {
    GroupKind group = GroupKind::glq;
    int n = 2;
    int k = 0; // super only
    cplx q = 2.0;
    double h = 0.1;
    Gauge gauge = Gauge::unitary;
    B0Kind b0_kind = B0Kind::canonical;
    std::vector<cplx> beta;
    std::vector<std::vector<cplx>> b0_explicit;
    std::uint64_t seed = 1;
    int count = 20;
    double scale = 1.0;
    std::vector<std::vector<double>> explicit_momenta; // overrides seeded generation
    std::vector<std::string> checks; // resolved, sorted
    std::vector<std::pair<cplx, cplx>> spectral_yz = {{1.3, 0.7}, {2.0, 0.5}};
    std::vector<std::pair<cplx, cplx>> thetas = {{0.4, -0.9}};
    double tolerance = 1e-9;
    std::string output; // report path; empty = stdout table only
};

// Checker names understood by run_suite, in report order.
const std::vector<std::string>& known_checks();
const std::vector<std::string>& known_builders();

// Parses and validates a configuration document. Unknown keys, type
// mismatches and constraint violations raise ConfigError naming the key.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);

struct SuiteReport {
    RunConfig config;
    std::vector<CheckReport> checks; // sorted by name
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    int resamples = 0;
    double wall_ms = 0.0; // stdout only, never serialized
    std::string version;
};

SuiteReport run_suite(const RunConfig& cfg);

// Deterministic serializations: identical configs give byte-identical
// output (fixed check order, fixed key order, wall time excluded).
nlohmann::json config_to_json(const RunConfig& cfg);
nlohmann::json report_to_json(const SuiteReport& rep);
std::string render_table(const SuiteReport& rep);

// 0 when everything passed or was skipped with a reason, 1 otherwise.
int suite_exit_code(const SuiteReport& rep);

} // namespace tyb
